#include "fincat/category.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>

namespace fincat {

int& morphism_guard() {
    static int guard = 10000;
    return guard;
}

std::vector<int> FinCategory::hom(int x, int y) const {
    std::vector<int> out;
    for (int m = 0; m < num_morphisms(); ++m)
        if (mor_src[m] == x && mor_tgt[m] == y) out.push_back(m);
    return out;
}

int FinCategory::hom_size(int x, int y) const {
    int n = 0;
    for (int m = 0; m < num_morphisms(); ++m)
        if (mor_src[m] == x && mor_tgt[m] == y) ++n;
    return n;
}

int FinCategory::compose_chain(const std::vector<int>& chain, int at) const {
    int cur = id_of[at];
    for (int m : chain) {
        if (!composable(m, cur)) throw std::logic_error("compose_chain: not composable");
        cur = compose(m, cur);
    }
    return cur;
}

bool table_equal(const FinCategory& a, const FinCategory& b) {
    return a.mor_src == b.mor_src && a.mor_tgt == b.mor_tgt && a.id_of == b.id_of &&
           a.comp == b.comp;
}

namespace {

std::string mor_desc(const FinCategory& c, int m) {
    std::ostringstream os;
    os << c.mor_names[m] << "(#" << m << ": " << c.obj_names[c.src(m)] << " -> "
       << c.obj_names[c.tgt(m)] << ")";
    return os.str();
}

}  // namespace

std::vector<std::string> validate(const FinCategory& c) {
    std::vector<std::string> out;
    const int n = c.num_objects();
    const int m = c.num_morphisms();
    if (static_cast<int>(c.id_of.size()) != n || static_cast<int>(c.mor_names.size()) != m ||
        static_cast<int>(c.mor_tgt.size()) != m ||
        c.comp.size() != static_cast<size_t>(m) * static_cast<size_t>(m)) {
        out.push_back("table sizes are inconsistent");
        return out;
    }
    for (int k = 0; k < m; ++k)
        if (c.src(k) < 0 || c.src(k) >= n || c.tgt(k) < 0 || c.tgt(k) >= n) {
            out.push_back("morphism #" + std::to_string(k) + " has endpoint out of range");
            return out;
        }
    for (int x = 0; x < n; ++x) {
        int e = c.id_of[x];
        if (e < 0 || e >= m) {
            out.push_back("identity of " + c.obj_names[x] + " out of range");
            return out;
        }
        if (c.src(e) != x || c.tgt(e) != x)
            out.push_back("identity of " + c.obj_names[x] + " is not an endomorphism: " +
                          mor_desc(c, e));
    }
    // definedness: compose(g, f) set exactly when composable
    for (int g = 0; g < m; ++g)
        for (int f = 0; f < m; ++f) {
            int h = c.compose(g, f);
            if (c.composable(g, f)) {
                if (h < 0 || h >= m) {
                    out.push_back("compose(" + mor_desc(c, g) + ", " + mor_desc(c, f) +
                                  ") is unset");
                } else if (c.src(h) != c.src(f) || c.tgt(h) != c.tgt(g)) {
                    out.push_back("compose(" + mor_desc(c, g) + ", " + mor_desc(c, f) +
                                  ") = " + mor_desc(c, h) + " has wrong endpoints");
                }
            } else if (h != -1) {
                out.push_back("compose(" + mor_desc(c, g) + ", " + mor_desc(c, f) +
                              ") set although not composable");
            }
        }
    if (!out.empty()) return out;  // unit/assoc checks need a well-typed table
    for (int f = 0; f < m; ++f) {
        if (c.compose(c.id_of[c.tgt(f)], f) != f)
            out.push_back("left unit law fails at " + mor_desc(c, f));
        if (c.compose(f, c.id_of[c.src(f)]) != f)
            out.push_back("right unit law fails at " + mor_desc(c, f));
    }
    for (int h = 0; h < m; ++h)
        for (int g = 0; g < m; ++g) {
            if (!c.composable(h, g)) continue;
            for (int f = 0; f < m; ++f) {
                if (!c.composable(g, f)) continue;
                int left = c.compose(c.compose(h, g), f);
                int right = c.compose(h, c.compose(g, f));
                if (left != right)
                    out.push_back("associativity fails at (" + mor_desc(c, h) + ", " +
                                  mor_desc(c, g) + ", " + mor_desc(c, f) + "): " +
                                  mor_desc(c, left) + " vs " + mor_desc(c, right));
            }
        }
    return out;
}

bool is_valid(const FinCategory& c) { return validate(c).empty(); }

int CategoryBuilder::add_object(std::string label) {
    if (sealed_objects_) throw std::logic_error("add_object after add_morphism");
    int x = static_cast<int>(cat_.obj_names.size());
    cat_.obj_names.push_back(label.empty() ? "x" + std::to_string(x) : std::move(label));
    return x;
}

int CategoryBuilder::add_morphism(std::string label, int src, int tgt) {
    if (!sealed_objects_) {
        sealed_objects_ = true;
        for (int x = 0; x < static_cast<int>(cat_.obj_names.size()); ++x) {
            cat_.mor_names.push_back("1_" + cat_.obj_names[x]);
            cat_.mor_src.push_back(x);
            cat_.mor_tgt.push_back(x);
            cat_.id_of.push_back(x);
        }
    }
    int id = static_cast<int>(cat_.mor_src.size());
    cat_.mor_names.push_back(label.empty() ? "m" + std::to_string(id) : std::move(label));
    cat_.mor_src.push_back(src);
    cat_.mor_tgt.push_back(tgt);
    return id;
}

void CategoryBuilder::set_compose(int g, int f, int h) { comps_.emplace_back(g, f, h); }

FinCategory CategoryBuilder::build(bool verify) const {
    FinCategory c = cat_;
    if (!sealed_objects_) {
        for (int x = 0; x < static_cast<int>(c.obj_names.size()); ++x) {
            c.mor_names.push_back("1_" + c.obj_names[x]);
            c.mor_src.push_back(x);
            c.mor_tgt.push_back(x);
            c.id_of.push_back(x);
        }
    }
    const int m = c.num_morphisms();
    if (m > morphism_guard()) throw guard_error("category exceeds morphism guard");
    c.comp.assign(static_cast<size_t>(m) * m, -1);
    for (int g = 0; g < m; ++g)
        for (int f = 0; f < m; ++f) {
            if (!c.composable(g, f)) continue;
            if (c.is_identity(g))
                c.comp[static_cast<size_t>(g) * m + f] = f;
            else if (c.is_identity(f))
                c.comp[static_cast<size_t>(g) * m + f] = g;
        }
    for (auto [g, f, h] : comps_) c.comp[static_cast<size_t>(g) * m + f] = h;
    if (verify) {
        auto findings = validate(c);
        if (!findings.empty())
            throw std::logic_error("CategoryBuilder: invalid category: " + findings.front());
    }
    return c;
}

FunctorCheck is_functor(const Functor& f) {
    const FinCategory& a = f.dom;
    const FinCategory& b = f.cod;
    if (static_cast<int>(f.obj_map.size()) != a.num_objects() ||
        static_cast<int>(f.mor_map.size()) != a.num_morphisms())
        return {false, "map sizes do not match the domain"};
    for (int x : f.obj_map)
        if (x < 0 || x >= b.num_objects()) return {false, "object image out of range"};
    for (int m : f.mor_map)
        if (m < 0 || m >= b.num_morphisms()) return {false, "morphism image out of range"};
    for (int m = 0; m < a.num_morphisms(); ++m) {
        int fm = f.mor_map[m];
        if (b.src(fm) != f.obj_map[a.src(m)])
            return {false, "source not preserved at " + a.mor_names[m]};
        if (b.tgt(fm) != f.obj_map[a.tgt(m)])
            return {false, "target not preserved at " + a.mor_names[m]};
    }
    for (int x = 0; x < a.num_objects(); ++x)
        if (f.mor_map[a.identity(x)] != b.identity(f.obj_map[x]))
            return {false, "identity of " + a.obj_names[x] + " not preserved"};
    for (int g = 0; g < a.num_morphisms(); ++g)
        for (int m = 0; m < a.num_morphisms(); ++m) {
            if (!a.composable(g, m)) continue;
            if (f.mor_map[a.compose(g, m)] != b.compose(f.mor_map[g], f.mor_map[m]))
                return {false,
                        "composition not preserved at (" + a.mor_names[g] + ", " +
                            a.mor_names[m] + ")"};
        }
    return {true, ""};
}

Functor identity_functor(const FinCategory& c) {
    Functor f;
    f.name = "id_" + c.name;
    f.dom = c;
    f.cod = c;
    f.obj_map.resize(c.num_objects());
    f.mor_map.resize(c.num_morphisms());
    for (int x = 0; x < c.num_objects(); ++x) f.obj_map[x] = x;
    for (int m = 0; m < c.num_morphisms(); ++m) f.mor_map[m] = m;
    return f;
}

Functor compose_functors(const Functor& g, const Functor& f) {
    Functor h;
    h.name = g.name + "." + f.name;
    h.dom = f.dom;
    h.cod = g.cod;
    h.obj_map.resize(f.obj_map.size());
    h.mor_map.resize(f.mor_map.size());
    for (size_t x = 0; x < f.obj_map.size(); ++x) h.obj_map[x] = g.obj_map[f.obj_map[x]];
    for (size_t m = 0; m < f.mor_map.size(); ++m) h.mor_map[m] = g.mor_map[f.mor_map[m]];
    return h;
}

bool functor_equal(const Functor& a, const Functor& b) {
    return a.obj_map == b.obj_map && a.mor_map == b.mor_map;
}

bool is_injective_on_objects(const Functor& f) {
    std::vector<int> seen(f.cod.num_objects(), 0);
    for (int x : f.obj_map) {
        if (seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

bool is_faithful(const Functor& f) {
    const int m = f.dom.num_morphisms();
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (f.dom.src(a) == f.dom.src(b) && f.dom.tgt(a) == f.dom.tgt(b) &&
                f.mor_map[a] == f.mor_map[b])
                return false;
    return true;
}

bool is_full(const Functor& f) {
    for (int x = 0; x < f.dom.num_objects(); ++x)
        for (int y = 0; y < f.dom.num_objects(); ++y) {
            auto target = f.cod.hom(f.obj_map[x], f.obj_map[y]);
            std::vector<int> hit;
            for (int m : f.dom.hom(x, y)) hit.push_back(f.mor_map[m]);
            for (int t : target)
                if (std::find(hit.begin(), hit.end(), t) == hit.end()) return false;
        }
    return true;
}

FinCategory opposite(const FinCategory& c) {
    FinCategory o = c;
    o.mor_src = c.mor_tgt;
    o.mor_tgt = c.mor_src;
    const int m = c.num_morphisms();
    for (int g = 0; g < m; ++g)
        for (int f = 0; f < m; ++f)
            o.comp[static_cast<size_t>(g) * m + f] = c.comp[static_cast<size_t>(f) * m + g];
    return o;
}

Functor opposite(const Functor& f) {
    Functor o = f;
    o.dom = opposite(f.dom);
    o.cod = opposite(f.cod);
    return o;
}

Coproduct coproduct(const std::vector<FinCategory>& parts) {
    Coproduct out;
    FinCategory& c = out.cat;
    c.name = "coproduct";
    int obj_base = 0, mor_base = 0;
    for (const auto& p : parts) {
        out.obj_offset.push_back(obj_base);
        out.mor_offset.push_back(mor_base);
        obj_base += p.num_objects();
        mor_base += p.num_morphisms();
    }
    if (mor_base > morphism_guard()) throw guard_error("coproduct exceeds morphism guard");
    c.comp.assign(static_cast<size_t>(mor_base) * mor_base, -1);
    for (size_t i = 0; i < parts.size(); ++i) {
        const auto& p = parts[i];
        std::string tag = parts.size() > 1 ? "c" + std::to_string(i) + "_" : "";
        for (int x = 0; x < p.num_objects(); ++x) {
            c.obj_names.push_back(tag + p.obj_names[x]);
            c.id_of.push_back(out.mor_offset[i] + p.identity(x));
        }
        for (int m = 0; m < p.num_morphisms(); ++m) {
            c.mor_names.push_back(tag + p.mor_names[m]);
            c.mor_src.push_back(out.obj_offset[i] + p.src(m));
            c.mor_tgt.push_back(out.obj_offset[i] + p.tgt(m));
        }
        for (int g = 0; g < p.num_morphisms(); ++g)
            for (int f = 0; f < p.num_morphisms(); ++f) {
                int h = p.compose(g, f);
                if (h >= 0)
                    c.comp[static_cast<size_t>(out.mor_offset[i] + g) * mor_base +
                           (out.mor_offset[i] + f)] = out.mor_offset[i] + h;
            }
    }
    for (size_t i = 0; i < parts.size(); ++i) {
        Functor inj;
        inj.name = "inj" + std::to_string(i);
        inj.dom = parts[i];
        inj.cod = c;
        for (int x = 0; x < parts[i].num_objects(); ++x)
            inj.obj_map.push_back(out.obj_offset[i] + x);
        for (int m = 0; m < parts[i].num_morphisms(); ++m)
            inj.mor_map.push_back(out.mor_offset[i] + m);
        out.injections.push_back(std::move(inj));
    }
    return out;
}

Subcategory full_subcategory(const FinCategory& c, const std::vector<int>& objects) {
    Subcategory out;
    out.obj_from_ambient.assign(c.num_objects(), -1);
    out.mor_from_ambient.assign(c.num_morphisms(), -1);
    for (int x : objects) {
        if (out.obj_from_ambient[x] >= 0) continue;
        out.obj_from_ambient[x] = static_cast<int>(out.obj_to_ambient.size());
        out.obj_to_ambient.push_back(x);
    }
    FinCategory& s = out.cat;
    s.name = c.name + "_sub";
    for (int x : out.obj_to_ambient) s.obj_names.push_back(c.obj_names[x]);
    for (int m = 0; m < c.num_morphisms(); ++m)
        if (out.obj_from_ambient[c.src(m)] >= 0 && out.obj_from_ambient[c.tgt(m)] >= 0) {
            out.mor_from_ambient[m] = static_cast<int>(out.mor_to_ambient.size());
            out.mor_to_ambient.push_back(m);
            s.mor_names.push_back(c.mor_names[m]);
            s.mor_src.push_back(out.obj_from_ambient[c.src(m)]);
            s.mor_tgt.push_back(out.obj_from_ambient[c.tgt(m)]);
        }
    s.id_of.resize(s.num_objects());
    for (int x = 0; x < s.num_objects(); ++x)
        s.id_of[x] = out.mor_from_ambient[c.identity(out.obj_to_ambient[x])];
    const int m = s.num_morphisms();
    s.comp.assign(static_cast<size_t>(m) * m, -1);
    for (int g = 0; g < m; ++g)
        for (int f = 0; f < m; ++f) {
            int h = c.compose(out.mor_to_ambient[g], out.mor_to_ambient[f]);
            if (h >= 0) s.comp[static_cast<size_t>(g) * m + f] = out.mor_from_ambient[h];
        }
    Functor& inc = out.inclusion;
    inc.name = "incl";
    inc.dom = s;
    inc.cod = c;
    inc.obj_map = out.obj_to_ambient;
    inc.mor_map = out.mor_to_ambient;
    return out;
}

CommaCategory comma_over(const FinCategory& c, const std::vector<int>& a_objects, int w) {
    CommaCategory out;
    std::vector<char> in_a(c.num_objects(), 0);
    for (int x : a_objects) in_a[x] = 1;
    for (int m = 0; m < c.num_morphisms(); ++m)
        if (in_a[c.src(m)] && c.tgt(m) == w) out.objs.emplace_back(c.src(m), m);

    FinCategory& s = out.cat;
    s.name = "comma";
    const int n = static_cast<int>(out.objs.size());
    for (auto [a, f] : out.objs) s.obj_names.push_back("(" + c.obj_names[a] + "," + c.mor_names[f] + ")");
    // morphisms (a,f) -> (a',f'): g: a -> a' in A with f' . g = f
    std::vector<std::pair<int, int>> mor_ends;  // (comma src, comma tgt)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto [a, f] = out.objs[i];
            auto [a2, f2] = out.objs[j];
            for (int g : c.hom(a, a2))
                if (c.compose(f2, g) == f) {
                    out.mor_underlying.push_back(g);
                    mor_ends.emplace_back(i, j);
                    s.mor_names.push_back(c.mor_names[g] + "@" + std::to_string(i) + ">" +
                                          std::to_string(j));
                }
        }
    const int m = static_cast<int>(out.mor_underlying.size());
    if (m > morphism_guard()) throw guard_error("comma category exceeds morphism guard");
    s.mor_src.resize(m);
    s.mor_tgt.resize(m);
    for (int k = 0; k < m; ++k) {
        s.mor_src[k] = mor_ends[k].first;
        s.mor_tgt[k] = mor_ends[k].second;
    }
    s.id_of.assign(n, -1);
    for (int k = 0; k < m; ++k)
        if (mor_ends[k].first == mor_ends[k].second &&
            out.mor_underlying[k] == c.identity(out.objs[mor_ends[k].first].first))
            s.id_of[mor_ends[k].first] = k;
    s.comp.assign(static_cast<size_t>(m) * m, -1);
    auto find_mor = [&](int i, int j, int g) {
        for (int k = 0; k < m; ++k)
            if (mor_ends[k].first == i && mor_ends[k].second == j && out.mor_underlying[k] == g)
                return k;
        return -1;
    };
    for (int k2 = 0; k2 < m; ++k2)
        for (int k1 = 0; k1 < m; ++k1) {
            if (mor_ends[k1].second != mor_ends[k2].first) continue;
            int g = c.compose(out.mor_underlying[k2], out.mor_underlying[k1]);
            s.comp[static_cast<size_t>(k2) * m + k1] =
                find_mor(mor_ends[k1].first, mor_ends[k2].second, g);
        }
    return out;
}

bool objects_isomorphic(const FinCategory& c, int x, int y) {
    for (int f : c.hom(x, y))
        for (int g : c.hom(y, x))
            if (c.compose(g, f) == c.identity(x) && c.compose(f, g) == c.identity(y)) return true;
    return false;
}

std::optional<int> find_terminal(const FinCategory& c) {
    for (int t = 0; t < c.num_objects(); ++t) {
        bool ok = true;
        for (int x = 0; x < c.num_objects() && ok; ++x)
            if (c.hom_size(x, t) != 1) ok = false;
        if (ok) return t;
    }
    return std::nullopt;
}

namespace {

struct FunctorSearch {
    const FinCategory& a;
    const FinCategory& b;
    const FunctorPins& pins;
    size_t cap;
    std::vector<int> obj_map;
    std::vector<int> mor_map;
    std::function<bool(const std::vector<int>&, const std::vector<int>&)> emit;
    size_t found = 0;

    bool mor_consistent(int m) const {
        // check all composition equations whose three participants are assigned
        for (int g = 0; g < a.num_morphisms(); ++g) {
            if (mor_map[g] < 0) continue;
            if (a.composable(g, m)) {
                int h = a.compose(g, m);
                if (mor_map[h] >= 0 && b.compose(mor_map[g], mor_map[m]) != mor_map[h])
                    return false;
            }
            if (a.composable(m, g)) {
                int h = a.compose(m, g);
                if (mor_map[h] >= 0 && b.compose(mor_map[m], mor_map[g]) != mor_map[h])
                    return false;
            }
        }
        return true;
    }

    bool rec_mor(int m) {
        if (m == a.num_morphisms()) {
            if (found >= cap) throw guard_error("functor enumeration cap exceeded");
            ++found;
            return emit(obj_map, mor_map);
        }
        int forced = -1;
        if (a.is_identity(m)) forced = b.identity(obj_map[a.src(m)]);
        if (!pins.mor.empty() && pins.mor[m] >= 0) {
            if (forced >= 0 && forced != pins.mor[m]) return true;
            forced = pins.mor[m];
        }
        int s = obj_map[a.src(m)], t = obj_map[a.tgt(m)];
        for (int img = 0; img < b.num_morphisms(); ++img) {
            if (forced >= 0 && img != forced) continue;
            if (b.src(img) != s || b.tgt(img) != t) continue;
            mor_map[m] = img;
            if (mor_consistent(m) && !rec_mor(m + 1)) return false;
            mor_map[m] = -1;
        }
        return true;
    }

    bool rec_obj(int x) {
        if (x == a.num_objects()) return rec_mor(0);
        for (int img = 0; img < b.num_objects(); ++img) {
            if (!pins.obj.empty() && pins.obj[x] >= 0 && pins.obj[x] != img) continue;
            obj_map[x] = img;
            if (!rec_obj(x + 1)) return false;
        }
        obj_map[x] = -1;
        return true;
    }

    void run() {
        obj_map.assign(a.num_objects(), -1);
        mor_map.assign(a.num_morphisms(), -1);
        rec_obj(0);
    }
};

}  // namespace

std::vector<Functor> enumerate_functors(const FinCategory& dom, const FinCategory& cod,
                                        const FunctorPins& pins, size_t cap) {
    std::vector<Functor> out;
    FunctorSearch s{dom, cod, pins, cap, {}, {}, {}, 0};
    s.emit = [&](const std::vector<int>& om, const std::vector<int>& mm) {
        Functor f;
        f.dom = dom;
        f.cod = cod;
        f.obj_map = om;
        f.mor_map = mm;
        out.push_back(std::move(f));
        return true;
    };
    s.run();
    return out;
}

size_t count_functors(const FinCategory& dom, const FinCategory& cod, const FunctorPins& pins,
                      size_t cap) {
    FunctorSearch s{dom, cod, pins, cap, {}, {}, {}, 0};
    s.emit = [](const std::vector<int>&, const std::vector<int>&) { return true; };
    s.run();
    return s.found;
}

}  // namespace fincat
