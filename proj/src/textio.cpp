#include "fincat/textio.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fincat {

namespace {

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '~';
}

bool valid_ident(const std::string& s) {
    if (s.empty() || std::isdigit(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!ident_char(c)) return false;
    return true;
}

std::string sanitize(const std::string& s, std::map<std::string, int>& used, int fallback_idx,
                     const char* prefix) {
    std::string out;
    for (char c : s) out.push_back(ident_char(c) ? c : '_');
    if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0])))
        out = prefix + std::to_string(fallback_idx);
    while (used.count(out)) out += "~";
    used[out] = 1;
    return out;
}

struct Lines {
    std::vector<std::pair<int, std::string>> rows;  // (line number, trimmed content)

    explicit Lines(const std::string& text) {
        std::istringstream in(text);
        std::string raw;
        int no = 0;
        while (std::getline(in, raw)) {
            ++no;
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            size_t a = raw.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            size_t b = raw.find_last_not_of(" \t\r");
            rows.emplace_back(no, raw.substr(a, b - a + 1));
        }
    }
};

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// "name: src -> tgt"
void parse_arrow_line(const std::string& s, int line, std::string& name, std::string& src,
                      std::string& tgt) {
    auto colon = s.find(':');
    auto arrow = s.find("->");
    if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
        throw parse_error("expected 'name: src -> tgt'", line);
    auto trim = [](std::string t) {
        size_t a = t.find_first_not_of(" \t");
        size_t b = t.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : t.substr(a, b - a + 1);
    };
    name = trim(s.substr(0, colon));
    src = trim(s.substr(colon + 1, arrow - colon - 1));
    tgt = trim(s.substr(arrow + 2));
    if (!valid_ident(name) || !valid_ident(src) || !valid_ident(tgt))
        throw parse_error("bad identifier in '" + s + "'", line);
}

struct NameTables {
    std::map<std::string, int> obj;
    std::map<std::string, int> mor;  // non-identity morphisms by name

    int resolve_obj(const std::string& s, int line) const {
        auto it = obj.find(s);
        if (it == obj.end()) throw parse_error("unknown object '" + s + "'", line);
        return it->second;
    }
    // resolves a morphism name, allowing 1_<obj> for identities
    int resolve_mor(const std::string& s, int line, const FinCategory& c) const {
        auto it = mor.find(s);
        if (it != mor.end()) return it->second;
        if (s.rfind("1_", 0) == 0) {
            auto ob = obj.find(s.substr(2));
            if (ob != obj.end()) return c.identity(ob->second);
        }
        throw parse_error("unknown morphism '" + s + "'", line);
    }
};

}  // namespace

std::string print_category(const FinCategory& c) {
    std::ostringstream os;
    std::map<std::string, int> used_o, used_m;
    std::vector<std::string> oname(c.num_objects()), mname(c.num_morphisms());
    for (int x = 0; x < c.num_objects(); ++x) oname[x] = sanitize(c.obj_names[x], used_o, x, "x");
    for (int m = 0; m < c.num_morphisms(); ++m) {
        if (c.is_identity(m)) {
            mname[m] = "1_" + oname[c.src(m)];
        } else {
            std::string nm = c.mor_names[m];
            if (nm.rfind("1_", 0) == 0) nm = "m" + nm;  // the 1_ prefix is reserved
            mname[m] = sanitize(nm, used_m, m, "m");
        }
    }
    std::map<std::string, int> used_cn;
    std::string cname = sanitize(c.name, used_cn, 0, "C");
    os << "category " << cname << "\n";
    os << "objects:";
    for (int x = 0; x < c.num_objects(); ++x) os << " " << oname[x];
    os << "\n";
    os << "morphisms:\n";
    for (int m = 0; m < c.num_morphisms(); ++m)
        if (!c.is_identity(m))
            os << "  " << mname[m] << ": " << oname[c.src(m)] << " -> " << oname[c.tgt(m)] << "\n";
    os << "compose:\n";
    for (int g = 0; g < c.num_morphisms(); ++g) {
        if (c.is_identity(g)) continue;
        for (int f = 0; f < c.num_morphisms(); ++f) {
            if (c.is_identity(f) || !c.composable(g, f)) continue;
            os << "  " << mname[g] << " . " << mname[f] << " = " << mname[c.compose(g, f)] << "\n";
        }
    }
    return os.str();
}

FinCategory parse_category(const std::string& text) {
    Lines ls(text);
    size_t row = 0;
    auto need = [&](const char* what) -> std::pair<int, std::string> {
        if (row >= ls.rows.size()) throw parse_error(std::string("expected ") + what, 0);
        return ls.rows[row++];
    };
    auto [l0, header] = need("'category <name>'");
    auto head = split_ws(header);
    if (head.empty() || head[0] != "category" || head.size() > 2)
        throw parse_error("expected 'category <name>'", l0);

    CategoryBuilder b(head.size() == 2 ? head[1] : "C");
    NameTables names;
    auto [l1, objline] = need("'objects:'");
    if (objline.rfind("objects:", 0) != 0) throw parse_error("expected 'objects:'", l1);
    for (const auto& o : split_ws(objline.substr(8))) {
        if (!valid_ident(o)) throw parse_error("bad object name '" + o + "'", l1);
        if (names.obj.count(o)) throw parse_error("duplicate object '" + o + "'", l1);
        names.obj[o] = b.add_object(o);
    }
    auto [l2, morline] = need("'morphisms:'");
    if (morline != "morphisms:") throw parse_error("expected 'morphisms:'", l2);
    struct MorDecl {
        std::string name;
        int src, tgt, line;
    };
    std::vector<MorDecl> decls;
    while (row < ls.rows.size() && ls.rows[row].second != "compose:") {
        auto [ln, s] = ls.rows[row++];
        std::string nm, sname, tname;
        parse_arrow_line(s, ln, nm, sname, tname);
        if (nm.rfind("1_", 0) == 0) throw parse_error("morphism names starting '1_' are reserved", ln);
        if (names.mor.count(nm)) throw parse_error("duplicate morphism '" + nm + "'", ln);
        decls.push_back({nm, names.resolve_obj(sname, ln), names.resolve_obj(tname, ln), ln});
        names.mor[nm] = -1;  // filled after identities are placed
    }
    for (const auto& d : decls) names.mor[d.name] = b.add_morphism(d.name, d.src, d.tgt);
    FinCategory proto = b.build(false);

    struct CompDecl {
        int g, f, h;
    };
    std::vector<CompDecl> comps;
    if (row < ls.rows.size()) {
        auto [l3, compline] = ls.rows[row++];
        if (compline != "compose:") throw parse_error("expected 'compose:'", l3);
        while (row < ls.rows.size()) {
            auto [ln, s] = ls.rows[row++];
            auto dot = s.find(" . ");
            auto eq = s.find(" = ");
            if (dot == std::string::npos || eq == std::string::npos || eq < dot)
                throw parse_error("expected 'g . f = h'", ln);
            std::string gs = s.substr(0, dot), fs = s.substr(dot + 3, eq - dot - 3),
                        hs = s.substr(eq + 3);
            int g = names.resolve_mor(gs, ln, proto);
            int f = names.resolve_mor(fs, ln, proto);
            int h = names.resolve_mor(hs, ln, proto);
            if (!proto.composable(g, f))
                throw parse_error("'" + gs + " . " + fs + "' is not composable", ln);
            comps.push_back({g, f, h});
        }
    }
    for (const auto& cd : comps) b.set_compose(cd.g, cd.f, cd.h);
    FinCategory c = b.build(false);
    auto findings = validate(c);
    if (!findings.empty()) throw parse_error("invalid category: " + findings.front(), 0);
    return c;
}

std::string print_presentation(const PresentedCategory& p) {
    std::ostringstream os;
    std::map<std::string, int> used_o, used_g, used_n;
    std::vector<std::string> oname(p.num_objects()), gname(p.gens.size());
    for (int x = 0; x < p.num_objects(); ++x) oname[x] = sanitize(p.obj_names[x], used_o, x, "x");
    for (size_t g = 0; g < p.gens.size(); ++g) {
        std::string nm = p.gens[g].name;
        if (nm.rfind("1_", 0) == 0) nm = "g" + nm;  // the 1_ prefix is reserved
        gname[g] = sanitize(nm, used_g, static_cast<int>(g), "g");
    }
    os << "presentation " << sanitize(p.name, used_n, 0, "P") << "\n";
    os << "objects:";
    for (const auto& o : oname) os << " " << o;
    os << "\n";
    os << "generators:\n";
    for (size_t g = 0; g < p.gens.size(); ++g)
        os << "  " << gname[g] << ": " << oname[p.gens[g].src] << " -> " << oname[p.gens[g].tgt]
           << "\n";
    auto path_str = [&](const PresPath& path) {
        if (path.gens.empty()) return "1_" + oname[path.at];
        std::string s = gname[path.gens[0]];
        for (size_t i = 1; i < path.gens.size(); ++i) s = gname[path.gens[i]] + " . " + s;
        return s;
    };
    os << "relations:\n";
    for (const auto& r : p.rels) os << "  " << path_str(r.lhs) << " = " << path_str(r.rhs) << "\n";
    return os.str();
}

PresentedCategory parse_presentation(const std::string& text) {
    Lines ls(text);
    size_t row = 0;
    auto need = [&](const char* what) -> std::pair<int, std::string> {
        if (row >= ls.rows.size()) throw parse_error(std::string("expected ") + what, 0);
        return ls.rows[row++];
    };
    PresentedCategory p;
    auto [l0, header] = need("'presentation <name>'");
    auto head = split_ws(header);
    if (head.empty() || head[0] != "presentation" || head.size() > 2)
        throw parse_error("expected 'presentation <name>'", l0);
    if (head.size() == 2) p.name = head[1];
    std::map<std::string, int> objs, gens;
    auto [l1, objline] = need("'objects:'");
    if (objline.rfind("objects:", 0) != 0) throw parse_error("expected 'objects:'", l1);
    for (const auto& o : split_ws(objline.substr(8))) {
        if (!valid_ident(o)) throw parse_error("bad object name '" + o + "'", l1);
        if (objs.count(o)) throw parse_error("duplicate object '" + o + "'", l1);
        objs[o] = p.num_objects();
        p.obj_names.push_back(o);
    }
    auto [l2, genline] = need("'generators:'");
    if (genline != "generators:") throw parse_error("expected 'generators:'", l2);
    while (row < ls.rows.size() && ls.rows[row].second != "relations:") {
        auto [ln, s] = ls.rows[row++];
        std::string nm, sname, tname;
        parse_arrow_line(s, ln, nm, sname, tname);
        if (nm.rfind("1_", 0) == 0) throw parse_error("generator names starting '1_' are reserved", ln);
        if (gens.count(nm)) throw parse_error("duplicate generator '" + nm + "'", ln);
        auto so = objs.find(sname);
        auto to = objs.find(tname);
        if (so == objs.end() || to == objs.end()) throw parse_error("unknown object", ln);
        gens[nm] = static_cast<int>(p.gens.size());
        p.gens.push_back({nm, so->second, to->second, -1, -1});
    }
    auto parse_path = [&](const std::string& s, int ln) {
        PresPath path;
        std::vector<std::string> parts;
        size_t pos = 0;
        while (true) {
            auto dot = s.find(" . ", pos);
            parts.push_back(s.substr(pos, dot == std::string::npos ? dot : dot - pos));
            if (dot == std::string::npos) break;
            pos = dot + 3;
        }
        if (parts.size() == 1 && parts[0].rfind("1_", 0) == 0) {
            auto it = objs.find(parts[0].substr(2));
            if (it == objs.end()) throw parse_error("unknown object in empty path", ln);
            path.at = it->second;
            return path;
        }
        // "g . f" applies f first: reverse into diagrammatic order
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
            auto g = gens.find(*it);
            if (g == gens.end()) throw parse_error("unknown generator '" + *it + "'", ln);
            path.gens.push_back(g->second);
        }
        return path;
    };
    if (row < ls.rows.size()) {
        auto [l3, relline] = ls.rows[row++];
        if (relline != "relations:") throw parse_error("expected 'relations:'", l3);
        while (row < ls.rows.size()) {
            auto [ln, s] = ls.rows[row++];
            auto eq = s.find(" = ");
            if (eq == std::string::npos) throw parse_error("expected 'path = path'", ln);
            PresRelation r;
            r.lhs = parse_path(s.substr(0, eq), ln);
            r.rhs = parse_path(s.substr(eq + 3), ln);
            p.rels.push_back(std::move(r));
        }
    }
    auto findings = validate_presentation(p);
    if (!findings.empty()) throw parse_error("invalid presentation: " + findings.front(), 0);
    return p;
}

std::string print_functor(const Functor& f) {
    std::ostringstream os;
    std::map<std::string, int> used_n;
    os << "functor " << sanitize(f.name, used_n, 0, "F") << "\n";
    os << "objects:\n";
    for (int x = 0; x < f.dom.num_objects(); ++x)
        os << "  " << f.dom.obj_names[x] << " -> " << f.cod.obj_names[f.obj_map[x]] << "\n";
    os << "morphisms:\n";
    for (int m = 0; m < f.dom.num_morphisms(); ++m) {
        if (f.dom.is_identity(m)) continue;
        int img = f.mor_map[m];
        std::string iname =
            f.cod.is_identity(img) ? "1_" + f.cod.obj_names[f.cod.src(img)] : f.cod.mor_names[img];
        os << "  " << f.dom.mor_names[m] << " -> " << iname << "\n";
    }
    return os.str();
}

Functor parse_functor(const std::string& text, const FinCategory& dom, const FinCategory& cod) {
    Lines ls(text);
    size_t row = 0;
    auto need = [&](const char* what) -> std::pair<int, std::string> {
        if (row >= ls.rows.size()) throw parse_error(std::string("expected ") + what, 0);
        return ls.rows[row++];
    };
    Functor f;
    f.dom = dom;
    f.cod = cod;
    auto [l0, header] = need("'functor <name>'");
    auto head = split_ws(header);
    if (head.empty() || head[0] != "functor" || head.size() > 2)
        throw parse_error("expected 'functor <name>'", l0);
    if (head.size() == 2) f.name = head[1];
    auto name_to_idx = [&](const FinCategory& c) {
        std::map<std::string, int> m;
        for (int x = 0; x < c.num_objects(); ++x) m[c.obj_names[x]] = x;
        return m;
    };
    auto mor_to_idx = [&](const FinCategory& c) {
        std::map<std::string, int> m;
        for (int x = 0; x < c.num_morphisms(); ++x)
            if (!c.is_identity(x)) m[c.mor_names[x]] = x;
        return m;
    };
    auto dom_obj = name_to_idx(dom), cod_obj = name_to_idx(cod);
    auto dom_mor = mor_to_idx(dom), cod_mor = mor_to_idx(cod);
    f.obj_map.assign(dom.num_objects(), -1);
    f.mor_map.assign(dom.num_morphisms(), -1);
    auto [l1, objline] = need("'objects:'");
    if (objline != "objects:") throw parse_error("expected 'objects:'", l1);
    auto split_maplet = [](const std::string& s, int ln) {
        auto arrow = s.find("->");
        if (arrow == std::string::npos) throw parse_error("expected 'x -> y'", ln);
        auto trim = [](std::string t) {
            size_t a = t.find_first_not_of(" \t");
            size_t b = t.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : t.substr(a, b - a + 1);
        };
        return std::make_pair(trim(s.substr(0, arrow)), trim(s.substr(arrow + 2)));
    };
    while (row < ls.rows.size() && ls.rows[row].second != "morphisms:") {
        auto [ln, s] = ls.rows[row++];
        auto [from, to] = split_maplet(s, ln);
        auto a = dom_obj.find(from);
        auto b = cod_obj.find(to);
        if (a == dom_obj.end()) throw parse_error("unknown domain object '" + from + "'", ln);
        if (b == cod_obj.end()) throw parse_error("unknown codomain object '" + to + "'", ln);
        f.obj_map[a->second] = b->second;
    }
    if (row < ls.rows.size()) {
        ++row;  // morphisms:
        while (row < ls.rows.size()) {
            auto [ln, s] = ls.rows[row++];
            auto [from, to] = split_maplet(s, ln);
            auto a = dom_mor.find(from);
            if (a == dom_mor.end()) throw parse_error("unknown domain morphism '" + from + "'", ln);
            int img = -1;
            auto b = cod_mor.find(to);
            if (b != cod_mor.end())
                img = b->second;
            else if (to.rfind("1_", 0) == 0) {
                auto ob = cod_obj.find(to.substr(2));
                if (ob != cod_obj.end()) img = cod.identity(ob->second);
            }
            if (img < 0) throw parse_error("unknown codomain morphism '" + to + "'", ln);
            f.mor_map[a->second] = img;
        }
    }
    for (int x = 0; x < dom.num_objects(); ++x)
        if (f.obj_map[x] < 0)
            throw parse_error("object '" + dom.obj_names[x] + "' has no image", 0);
    for (int m = 0; m < dom.num_morphisms(); ++m) {
        if (dom.is_identity(m))
            f.mor_map[m] = cod.identity(f.obj_map[dom.src(m)]);
        else if (f.mor_map[m] < 0)
            throw parse_error("morphism '" + dom.mor_names[m] + "' has no image", 0);
    }
    auto chk = is_functor(f);
    if (!chk.ok) throw parse_error("not a functor: " + chk.first_violation, 0);
    return f;
}

std::string print_sset(const TruncatedSSet& x) {
    std::ostringstream os;
    std::map<std::string, int> used_n;
    os << "sset " << sanitize(x.name, used_n, 0, "X") << "\n";
    os << "dim: " << x.dim << "\n";
    for (int k = 0; k <= x.dim; ++k) os << "count " << k << ": " << x.counts[k] << "\n";
    for (int k = 1; k <= x.dim; ++k)
        for (int i = 0; i <= k; ++i) {
            os << "face " << k << " " << i << ":";
            for (int s0 = 0; s0 < x.counts[k]; ++s0) os << " " << x.face[k][i][s0];
            os << "\n";
        }
    for (int k = 0; k < x.dim; ++k)
        for (int i = 0; i <= k; ++i) {
            os << "degen " << k << " " << i << ":";
            for (int s0 = 0; s0 < x.counts[k]; ++s0) os << " " << x.degen[k][i][s0];
            os << "\n";
        }
    return os.str();
}

TruncatedSSet parse_sset(const std::string& text) {
    Lines ls(text);
    size_t row = 0;
    auto need = [&](const char* what) -> std::pair<int, std::string> {
        if (row >= ls.rows.size()) throw parse_error(std::string("expected ") + what, 0);
        return ls.rows[row++];
    };
    TruncatedSSet x;
    auto [l0, header] = need("'sset <name>'");
    auto head = split_ws(header);
    if (head.empty() || head[0] != "sset" || head.size() > 2)
        throw parse_error("expected 'sset <name>'", l0);
    if (head.size() == 2) x.name = head[1];
    auto [l1, dimline] = need("'dim: <d>'");
    auto dtoks = split_ws(dimline);
    if (dtoks.size() != 2 || dtoks[0] != "dim:") throw parse_error("expected 'dim: <d>'", l1);
    x.dim = std::stoi(dtoks[1]);
    if (x.dim < 0) throw parse_error("negative dimension", l1);
    x.counts.assign(x.dim + 1, 0);
    for (int k = 0; k <= x.dim; ++k) {
        auto [ln, s] = need("'count k: n'");
        auto t = split_ws(s);
        if (t.size() != 3 || t[0] != "count" || std::stoi(t[1]) != k)
            throw parse_error("expected 'count " + std::to_string(k) + ": n'", ln);
        x.counts[k] = std::stoi(t[2]);
    }
    x.init_tables();
    auto read_table = [&](const char* kind, int k, int i, std::vector<int>& dst, int range) {
        auto [ln, s] = need("table line");
        auto t = split_ws(s);
        if (t.size() != static_cast<size_t>(3 + dst.size()) || t[0] != kind ||
            std::stoi(t[1]) != k || std::stoi(t[2].substr(0, t[2].size() - 1)) != i)
            throw parse_error(std::string("expected '") + kind + " " + std::to_string(k) + " " +
                                  std::to_string(i) + ": ...' with " +
                                  std::to_string(dst.size()) + " entries",
                              ln);
        for (size_t j = 0; j < dst.size(); ++j) {
            dst[j] = std::stoi(t[3 + j]);
            if (dst[j] < 0 || dst[j] >= range) throw parse_error("table entry out of range", ln);
        }
    };
    for (int k = 1; k <= x.dim; ++k)
        for (int i = 0; i <= k; ++i) read_table("face", k, i, x.face[k][i], x.counts[k - 1]);
    for (int k = 0; k < x.dim; ++k)
        for (int i = 0; i <= k; ++i) read_table("degen", k, i, x.degen[k][i], x.counts[k + 1]);
    x.recompute_degeneracy_flags();
    auto findings = validate_sset(x);
    if (!findings.empty()) throw parse_error("invalid sset: " + findings.front(), 0);
    return x;
}

std::string witness_to_json(const DwyerWitness& w) {
    nlohmann::ordered_json j;
    j["kind"] = "dwyer-witness";
    j["category"] = print_category(w.ambient);
    j["sieve"] = w.sieve_objs;
    j["cosieve"] = w.cosieve_objs;
    j["u"] = w.u_objs;
    j["retract_obj"] = w.retract_obj;
    j["retract_mor"] = w.retract_mor;
    j["counit"] = w.counit;
    return j.dump(2) + "\n";
}

DwyerWitness witness_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    DwyerWitness w;
    w.ambient = parse_category(j.at("category").get<std::string>());
    w.sieve_objs = j.at("sieve").get<std::vector<int>>();
    w.cosieve_objs = j.at("cosieve").get<std::vector<int>>();
    w.u_objs = j.at("u").get<std::vector<int>>();
    w.retract_obj = j.at("retract_obj").get<std::vector<int>>();
    w.retract_mor = j.at("retract_mor").get<std::vector<int>>();
    w.counit = j.at("counit").get<std::vector<int>>();
    w.sieve.classifier.assign(w.ambient.num_objects(), 1);
    for (int x : w.sieve_objs) w.sieve.classifier[x] = 0;
    auto findings = check_witness(w);
    if (!findings.empty())
        throw std::runtime_error("witness file does not verify: " + findings.front());
    return w;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace fincat
