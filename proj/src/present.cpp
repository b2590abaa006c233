#include "fincat/present.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <tuple>

#include "fincat/fixtures.hpp"

namespace fincat {

namespace {

int path_len(const std::vector<int>& seq) { return seq.front() < 0 ? 0 : static_cast<int>(seq.size()); }

// empty word at x is keyed {-1 - x}
std::vector<int> empty_key(int x) { return {-1 - x}; }

}  // namespace

std::vector<std::string> validate_presentation(const PresentedCategory& p) {
    std::vector<std::string> out;
    const int n = p.num_objects();
    for (const auto& g : p.gens)
        if (g.src < 0 || g.src >= n || g.tgt < 0 || g.tgt >= n)
            out.push_back("generator " + g.name + " has endpoint out of range");
    auto check_path = [&](const PresPath& path, const std::string& where) {
        if (path.gens.empty()) {
            if (path.at < 0 || path.at >= n) out.push_back(where + ": empty path at bad object");
            return;
        }
        for (int g : path.gens)
            if (g < 0 || g >= static_cast<int>(p.gens.size())) {
                out.push_back(where + ": generator index out of range");
                return;
            }
        for (size_t i = 0; i + 1 < path.gens.size(); ++i)
            if (p.gens[path.gens[i]].tgt != p.gens[path.gens[i + 1]].src)
                out.push_back(where + ": path is not composable");
    };
    for (size_t r = 0; r < p.rels.size(); ++r) {
        auto where = "relation #" + std::to_string(r);
        check_path(p.rels[r].lhs, where);
        check_path(p.rels[r].rhs, where);
        if (!out.empty()) continue;
        if (p.rels[r].lhs.src(p.gens) != p.rels[r].rhs.src(p.gens) ||
            p.rels[r].lhs.tgt(p.gens) != p.rels[r].rhs.tgt(p.gens))
            out.push_back(where + ": sides are not parallel");
    }
    return out;
}

int SaturationResult::eval_word(const std::vector<int>& gens, int at_obj) const {
    int cur = cat.identity(at_obj);
    for (int g : gens) cur = cat.compose(gen_mor[g], cur);
    return cur;
}

int SaturationResult::eval_path(const PresPath& p) const {
    if (p.gens.empty()) return cat.identity(p.at);
    int at = -1;
    // source object of the first generator, read through gen_mor
    at = cat.src(gen_mor[p.gens.front()]);
    return eval_word(p.gens, at);
}

namespace {

SaturationResult saturate_at(const PresentedCategory& p, int bound, long long word_cap);

}  // namespace

SaturationResult saturate(const PresentedCategory& p, const SaturationOptions& opts) {
    if (opts.max_word_len < 1) throw std::invalid_argument("saturate: bound must be >= 1");
    {
        auto findings = validate_presentation(p);
        if (!findings.empty()) {
            SaturationResult res;
            res.stats.note = "invalid presentation: " + findings.front();
            return res;
        }
    }
    // relations must fit inside the enumerated words
    int min_bound = 1;
    for (const auto& r : p.rels) {
        min_bound = std::max(min_bound, static_cast<int>(r.lhs.gens.size()));
        min_bound = std::max(min_bound, static_cast<int>(r.rhs.gens.size()));
    }
    int max_bound = std::max(opts.max_word_len, min_bound);
    if (!opts.deepening) return saturate_at(p, max_bound, opts.word_cap);
    // deepening: a success at a smaller bound is isomorphic to any later one,
    // and keeps the enumeration within the word cap on large presentations
    SaturationResult last;
    for (int bound = min_bound; bound <= max_bound; ++bound) {
        last = saturate_at(p, bound, opts.word_cap);
        if (last.finite()) return last;
    }
    return last;
}

namespace {

SaturationResult saturate_at(const PresentedCategory& p, int bound, long long word_cap) {
    SaturationResult res;
    res.stats.bound = bound;

    // --- enumerate composable words of length <= bound ---
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> seq;
    std::vector<int> w_src, w_tgt;
    auto add_word = [&](std::vector<int> key, int s, int t) {
        if (static_cast<long long>(seq.size()) >= word_cap)
            throw guard_error("saturate: word cap exceeded");
        int id = static_cast<int>(seq.size());
        index.emplace(key, id);
        seq.push_back(std::move(key));
        w_src.push_back(s);
        w_tgt.push_back(t);
        return id;
    };
    for (int x = 0; x < p.num_objects(); ++x) add_word(empty_key(x), x, x);
    size_t level_begin = 0, level_end = seq.size();
    for (int len = 1; len <= bound; ++len) {
        for (size_t w = level_begin; w < level_end; ++w) {
            for (int g = 0; g < static_cast<int>(p.gens.size()); ++g) {
                if (p.gens[g].src != w_tgt[w]) continue;
                std::vector<int> key = path_len(seq[w]) == 0 ? std::vector<int>{} : seq[w];
                key.push_back(g);
                if (!index.count(key)) add_word(std::move(key), w_src[w], p.gens[g].tgt);
            }
        }
        level_begin = level_end;
        level_end = seq.size();
    }
    const int W = static_cast<int>(seq.size());
    res.stats.words = W;

    // --- congruence closure under one-generator whiskering ---
    std::vector<int> parent(W);
    for (int i = 0; i < W; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    // signature of each class: extensions by one generator on either side
    std::vector<std::map<int, int>> post(W), pre(W);
    for (int w = 0; w < W; ++w) {
        if (path_len(seq[w]) >= bound) continue;
        for (int g = 0; g < static_cast<int>(p.gens.size()); ++g) {
            if (p.gens[g].src == w_tgt[w]) {
                std::vector<int> key = path_len(seq[w]) == 0 ? std::vector<int>{} : seq[w];
                key.push_back(g);
                post[w][g] = index.at(key);
            }
            if (p.gens[g].tgt == w_src[w]) {
                std::vector<int> key{g};
                if (path_len(seq[w]) > 0) key.insert(key.end(), seq[w].begin(), seq[w].end());
                pre[w][g] = index.at(key);
            }
        }
    }
    std::deque<std::pair<int, int>> queue;
    auto key_of_path = [&](const PresPath& path) {
        return path.gens.empty() ? empty_key(path.at) : path.gens;
    };
    for (const auto& r : p.rels)
        queue.emplace_back(index.at(key_of_path(r.lhs)), index.at(key_of_path(r.rhs)));
    while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        int ra = find(a), rb = find(b);
        if (ra == rb) continue;
        if (post[ra].size() + pre[ra].size() > post[rb].size() + pre[rb].size()) std::swap(ra, rb);
        parent[ra] = rb;
        for (auto [g, j] : post[ra]) {
            auto it = post[rb].find(g);
            if (it == post[rb].end())
                post[rb][g] = j;
            else if (find(it->second) != find(j))
                queue.emplace_back(it->second, j);
        }
        for (auto [g, j] : pre[ra]) {
            auto it = pre[rb].find(g);
            if (it == pre[rb].end())
                pre[rb][g] = j;
            else if (find(it->second) != find(j))
                queue.emplace_back(it->second, j);
        }
        post[ra].clear();
        pre[ra].clear();
    }

    // --- group into classes, pick shortest-lex representatives ---
    std::map<int, std::vector<int>> members;  // root -> word ids
    for (int w = 0; w < W; ++w) members[find(w)].push_back(w);
    res.stats.classes = static_cast<long long>(members.size());

    auto better = [&](int a, int b) {  // is word a a better representative than b
        int la = path_len(seq[a]), lb = path_len(seq[b]);
        if (la != lb) return la < lb;
        return seq[a] < seq[b];
    };
    std::map<int, int> rep;  // root -> best word
    for (auto& [root, ws] : members) {
        int best = ws.front();
        for (int w : ws) {
            if (better(w, best)) best = w;
            if (w_src[w] != w_src[best] || w_tgt[w] != w_tgt[best]) {
                res.stats.note = "class with mismatched endpoints (invalid presentation)";
                return res;
            }
        }
        rep[root] = best;
        if (path_len(seq[best]) >= bound) {
            res.stats.note = "class of boundary words without shorter representative";
            return res;
        }
    }

    // --- emit the quotient category ---
    // identities first (one per object), then classes ordered by representative
    std::vector<std::pair<std::pair<int, std::vector<int>>, int>> order;  // ((len, seq), root)
    std::vector<int> mor_of_root;
    std::map<int, int> root_to_mor;
    FinCategory& cat = res.cat;
    cat.name = p.name + "_sat";
    cat.obj_names = p.obj_names;
    for (int x = 0; x < p.num_objects(); ++x) {
        int root = find(index.at(empty_key(x)));
        if (root_to_mor.count(root)) {
            res.stats.note = "identities of distinct objects identified (invalid presentation)";
            return res;
        }
        root_to_mor[root] = x;
        cat.mor_names.push_back("1_" + p.obj_names[x]);
        cat.mor_src.push_back(x);
        cat.mor_tgt.push_back(x);
        cat.id_of.push_back(x);
    }
    for (auto& [root, r] : rep) {
        if (root_to_mor.count(root)) continue;
        order.push_back({{path_len(seq[r]), seq[r]}, root});
    }
    std::sort(order.begin(), order.end());
    if (static_cast<int>(order.size()) + p.num_objects() > morphism_guard())
        throw guard_error("saturate: emitted category exceeds morphism guard");
    for (auto& [k, root] : order) {
        int id = cat.num_morphisms();
        root_to_mor[root] = id;
        int r = rep[root];
        std::string nm = p.gens[seq[r][0]].name;
        for (size_t i = 1; i < seq[r].size(); ++i) nm = p.gens[seq[r][i]].name + "." + nm;
        cat.mor_names.push_back(nm);
        cat.mor_src.push_back(w_src[r]);
        cat.mor_tgt.push_back(w_tgt[r]);
    }
    const int M = cat.num_morphisms();
    res.rep_word.assign(M, {});
    for (auto& [root, mor] : root_to_mor) {
        const auto& s = seq[rep[root]];
        if (path_len(s) > 0) res.rep_word[mor] = s;
    }
    res.gen_mor.assign(p.gens.size(), -1);
    for (int g = 0; g < static_cast<int>(p.gens.size()); ++g)
        res.gen_mor[g] = root_to_mor.at(find(index.at(std::vector<int>{g})));

    // multiplication by folding: extend the representative one generator at a
    // time; shortening guarantees every intermediate word is enumerated
    auto eval_class_word = [&](const std::vector<int>& gens, int at) {
        int cur = find(index.at(empty_key(at)));
        for (int g : gens) {
            const auto& r = seq[rep[cur]];
            std::vector<int> key = path_len(r) == 0 ? std::vector<int>{} : r;
            key.push_back(g);
            cur = find(index.at(key));
        }
        return cur;
    };
    cat.comp.assign(static_cast<size_t>(M) * M, -1);
    std::vector<int> root_of_mor(M);
    for (auto& [root, mor] : root_to_mor) root_of_mor[mor] = root;
    for (int g = 0; g < M; ++g)
        for (int f = 0; f < M; ++f) {
            if (!cat.composable(g, f)) continue;
            std::vector<int> word = res.rep_word[f];
            word.insert(word.end(), res.rep_word[g].begin(), res.rep_word[g].end());
            cat.comp[static_cast<size_t>(g) * M + f] =
                root_to_mor.at(eval_class_word(word, cat.src(f)));
        }

    // soundness gate: the emitted table must validate and satisfy every relation
    auto findings = validate(cat);
    if (!findings.empty()) {
        res.stats.note = "emitted table failed validation: " + findings.front();
        res.cat = FinCategory{};
        return res;
    }
    res.status = SaturationResult::Status::Finite;
    for (const auto& r : p.rels) {
        if (res.eval_path(r.lhs) != res.eval_path(r.rhs)) {
            res.status = SaturationResult::Status::Inconclusive;
            res.stats.note = "a relation does not hold in the emitted table";
            res.cat = FinCategory{};
            return res;
        }
    }
    return res;
}

}  // namespace

PresentedCategory presentation_of(const FinCategory& c) {
    PresentedCategory p;
    p.name = c.name + "_pres";
    p.obj_names = c.obj_names;
    std::vector<int> gen_of(c.num_morphisms(), -1);
    for (int m = 0; m < c.num_morphisms(); ++m) {
        if (c.is_identity(m)) continue;
        gen_of[m] = static_cast<int>(p.gens.size());
        p.gens.push_back({c.mor_names[m], c.src(m), c.tgt(m), -1, m});
    }
    auto word_of = [&](int m) {
        PresPath path;
        if (c.is_identity(m))
            path.at = c.src(m);
        else
            path.gens = {gen_of[m]};
        return path;
    };
    for (int g = 0; g < c.num_morphisms(); ++g)
        for (int f = 0; f < c.num_morphisms(); ++f) {
            if (!c.composable(g, f) || c.is_identity(g) || c.is_identity(f)) continue;
            PresRelation r;
            r.lhs.gens = {gen_of[f], gen_of[g]};
            r.rhs = word_of(c.compose(g, f));
            p.rels.push_back(std::move(r));
        }
    return p;
}

PushoutPresentation pushout_presentation(const Functor& I, const Functor& F) {
    const FinCategory& A = I.dom;
    const FinCategory& B = I.cod;
    const FinCategory& C = F.cod;
    PushoutPresentation out;
    const int nB = B.num_objects(), nC = C.num_objects();

    // pushout of object sets
    std::vector<int> parent(nB + nC);
    for (int i = 0; i < nB + nC; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int a = 0; a < A.num_objects(); ++a) {
        int x = find(I.obj_map[a]), y = find(nB + F.obj_map[a]);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
    PresentedCategory& p = out.pres;
    p.name = "pushout";
    std::vector<int> obj_of_slot(nB + nC, -1);
    for (int s = 0; s < nB + nC; ++s) {
        int r = find(s);
        if (obj_of_slot[r] < 0) {
            obj_of_slot[r] = p.num_objects();
            std::string nm = r < nB ? B.obj_names[r] : C.obj_names[r - nB];
            for (const auto& existing : p.obj_names)
                if (existing == nm) {
                    nm += "~" + std::to_string(obj_of_slot[r]);
                    break;
                }
            p.obj_names.push_back(nm);
        }
        obj_of_slot[s] = obj_of_slot[r];
    }
    out.obj_from_B.resize(nB);
    out.obj_from_C.resize(nC);
    for (int x = 0; x < nB; ++x) out.obj_from_B[x] = obj_of_slot[x];
    for (int x = 0; x < nC; ++x) out.obj_from_C[x] = obj_of_slot[nB + x];

    out.gen_from_B.assign(B.num_morphisms(), -1);
    out.gen_from_C.assign(C.num_morphisms(), -1);
    for (int m = 0; m < B.num_morphisms(); ++m) {
        if (B.is_identity(m)) continue;
        out.gen_from_B[m] = static_cast<int>(p.gens.size());
        p.gens.push_back({"b_" + B.mor_names[m], out.obj_from_B[B.src(m)],
                          out.obj_from_B[B.tgt(m)], 0, m});
    }
    for (int m = 0; m < C.num_morphisms(); ++m) {
        if (C.is_identity(m)) continue;
        out.gen_from_C[m] = static_cast<int>(p.gens.size());
        p.gens.push_back({"c_" + C.mor_names[m], out.obj_from_C[C.src(m)],
                          out.obj_from_C[C.tgt(m)], 1, m});
    }
    auto word_B = [&](int m) {
        PresPath path;
        if (B.is_identity(m))
            path.at = out.obj_from_B[B.src(m)];
        else
            path.gens = {out.gen_from_B[m]};
        return path;
    };
    auto word_C = [&](int m) {
        PresPath path;
        if (C.is_identity(m))
            path.at = out.obj_from_C[C.src(m)];
        else
            path.gens = {out.gen_from_C[m]};
        return path;
    };
    for (int g = 0; g < B.num_morphisms(); ++g)
        for (int f = 0; f < B.num_morphisms(); ++f) {
            if (!B.composable(g, f) || B.is_identity(g) || B.is_identity(f)) continue;
            PresRelation r;
            r.lhs.gens = {out.gen_from_B[f], out.gen_from_B[g]};
            r.rhs = word_B(B.compose(g, f));
            p.rels.push_back(std::move(r));
        }
    for (int g = 0; g < C.num_morphisms(); ++g)
        for (int f = 0; f < C.num_morphisms(); ++f) {
            if (!C.composable(g, f) || C.is_identity(g) || C.is_identity(f)) continue;
            PresRelation r;
            r.lhs.gens = {out.gen_from_C[f], out.gen_from_C[g]};
            r.rhs = word_C(C.compose(g, f));
            p.rels.push_back(std::move(r));
        }
    for (int a = 0; a < A.num_morphisms(); ++a) {
        if (A.is_identity(a)) continue;
        PresRelation r;
        r.lhs = word_B(I.mor_map[a]);
        r.rhs = word_C(F.mor_map[a]);
        p.rels.push_back(std::move(r));
    }
    return out;
}

OracleCocone oracle_cocone(const PushoutPresentation& pp, const SaturationResult& sat,
                           const FinCategory& B, const FinCategory& C) {
    if (!sat.finite()) throw std::logic_error("oracle_cocone: saturation not finite");
    OracleCocone out;
    auto make = [&](const FinCategory& side, const std::vector<int>& obj_from,
                    const std::vector<int>& gen_from, const char* nm) {
        Functor f;
        f.name = nm;
        f.dom = side;
        f.cod = sat.cat;
        f.obj_map = obj_from;
        f.mor_map.resize(gen_from.size());
        for (int m = 0; m < side.num_morphisms(); ++m)
            f.mor_map[m] = gen_from[m] >= 0 ? sat.gen_mor[gen_from[m]]
                                            : sat.cat.identity(obj_from[side.src(m)]);
        return f;
    };
    out.from_B = make(B, pp.obj_from_B, pp.gen_from_B, "from_B");
    out.from_C = make(C, pp.obj_from_C, pp.gen_from_C, "from_C");
    return out;
}

LocalizationResult localize(const FinCategory& c, const std::vector<int>& sigma,
                            const SaturationOptions& opts) {
    const int k = static_cast<int>(sigma.size());
    std::vector<FinCategory> arrows(k, walking_arrow()), isos(k, walking_iso());
    Coproduct a0 = coproduct(arrows), b0 = coproduct(isos);
    Functor I0;
    I0.name = "span_incl";
    I0.dom = a0.cat;
    I0.cod = b0.cat;
    I0.obj_map.resize(a0.cat.num_objects());
    I0.mor_map.resize(a0.cat.num_morphisms());
    for (int i = 0; i < k; ++i) {
        I0.obj_map[a0.obj_offset[i] + 0] = b0.obj_offset[i] + 0;
        I0.obj_map[a0.obj_offset[i] + 1] = b0.obj_offset[i] + 1;
        I0.mor_map[a0.mor_offset[i] + 0] = b0.mor_offset[i] + 0;  // 1_d0
        I0.mor_map[a0.mor_offset[i] + 1] = b0.mor_offset[i] + 1;  // 1_d1
        I0.mor_map[a0.mor_offset[i] + 2] = b0.mor_offset[i] + 2;  // arrow -> f
    }
    Functor F0;
    F0.name = "span_pick";
    F0.dom = a0.cat;
    F0.cod = c;
    F0.obj_map.resize(a0.cat.num_objects());
    F0.mor_map.resize(a0.cat.num_morphisms());
    for (int i = 0; i < k; ++i) {
        F0.obj_map[a0.obj_offset[i] + 0] = c.src(sigma[i]);
        F0.obj_map[a0.obj_offset[i] + 1] = c.tgt(sigma[i]);
        F0.mor_map[a0.mor_offset[i] + 0] = c.identity(c.src(sigma[i]));
        F0.mor_map[a0.mor_offset[i] + 1] = c.identity(c.tgt(sigma[i]));
        F0.mor_map[a0.mor_offset[i] + 2] = sigma[i];
    }
    auto pp = pushout_presentation(I0, F0);
    LocalizationResult out;
    out.sat = saturate(pp.pres, opts);
    if (out.sat.finite()) {
        out.quotient = oracle_cocone(pp, out.sat, b0.cat, c).from_C;
        out.quotient.name = "loc";
    }
    return out;
}

}  // namespace fincat
