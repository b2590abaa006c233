#include "fincat/spans.hpp"

#include <algorithm>

#include "fincat/fixtures.hpp"

namespace fincat {

int rand_int(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<uint32_t>(hi - lo + 1));
}

namespace {

template <typename T>
void shuffle_vec(Rng& rng, std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
        std::swap(v[i], v[rand_int(rng, 0, i)]);
}

}  // namespace

FinCategory random_poset(Rng& rng, int max_objects) {
    int n = rand_int(rng, 1, max_objects);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rand_int(rng, 0, 9) < 4) edges.emplace_back(i, j);
    return poset_from_edges(n, edges);
}

FinCategory random_path_category(Rng& rng, int max_objects) {
    int n = rand_int(rng, 1, max_objects);
    std::vector<std::pair<int, int>> edges;
    int tries = rand_int(rng, 0, n + 1);
    for (int t = 0; t < tries; ++t) {
        int i = rand_int(rng, 0, n - 1), j = rand_int(rng, 0, n - 1);
        if (i == j) continue;
        edges.emplace_back(std::min(i, j), std::max(i, j));  // ordered ends keep it acyclic
    }
    return free_on_dag(n, edges);
}

FinCategory random_category(Rng& rng, int max_objects) {
    switch (rand_int(rng, 0, 6)) {
        case 0: return terminal_cat();
        case 1: return walking_arrow();
        case 2: return walking_iso();
        case 3: return poset_chain(rand_int(rng, 1, std::max(1, max_objects - 1)));
        case 4: return random_path_category(rng, max_objects);
        default: return random_poset(rng, max_objects);
    }
}

namespace {

struct RandomFunctorSearch {
    Rng& rng;
    const FinCategory& a;
    const FinCategory& b;
    std::vector<int> obj_map, mor_map;

    bool mor_consistent(int m) const {
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
        if (m == a.num_morphisms()) return true;
        if (a.is_identity(m)) {
            mor_map[m] = b.identity(obj_map[a.src(m)]);
            if (mor_consistent(m) && rec_mor(m + 1)) return true;
            mor_map[m] = -1;
            return false;
        }
        std::vector<int> cands;
        for (int img = 0; img < b.num_morphisms(); ++img)
            if (b.src(img) == obj_map[a.src(m)] && b.tgt(img) == obj_map[a.tgt(m)])
                cands.push_back(img);
        shuffle_vec(rng, cands);
        for (int img : cands) {
            mor_map[m] = img;
            if (mor_consistent(m) && rec_mor(m + 1)) return true;
            mor_map[m] = -1;
        }
        return false;
    }

    bool rec_obj(int x) {
        if (x == a.num_objects()) {
            std::fill(mor_map.begin(), mor_map.end(), -1);
            return rec_mor(0);
        }
        std::vector<int> cands(b.num_objects());
        for (int i = 0; i < b.num_objects(); ++i) cands[i] = i;
        shuffle_vec(rng, cands);
        for (int img : cands) {
            obj_map[x] = img;
            if (rec_obj(x + 1)) return true;
        }
        obj_map[x] = -1;
        return false;
    }
};

}  // namespace

Functor random_functor(Rng& rng, const FinCategory& dom, const FinCategory& cod) {
    if (dom.num_objects() > 0 && cod.num_objects() == 0)
        throw std::invalid_argument("random_functor: empty codomain");
    RandomFunctorSearch s{rng, dom, cod, {}, {}};
    s.obj_map.assign(dom.num_objects(), -1);
    s.mor_map.assign(dom.num_morphisms(), -1);
    if (!s.rec_obj(0)) throw std::logic_error("random_functor: search failed");
    Functor f;
    f.name = "F";
    f.dom = dom;
    f.cod = cod;
    f.obj_map = s.obj_map;
    f.mor_map = s.mor_map;
    return f;
}

namespace {

// sieve closure: add sources of every morphism landing in the set
std::vector<int> sieve_closure(const FinCategory& b, std::vector<int> objs) {
    std::vector<char> in(b.num_objects(), 0);
    for (int x : objs) in[x] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int m = 0; m < b.num_morphisms(); ++m)
            if (in[b.tgt(m)] && !in[b.src(m)]) {
                in[b.src(m)] = 1;
                changed = true;
            }
    }
    std::vector<int> out;
    for (int x = 0; x < b.num_objects(); ++x)
        if (in[x]) out.push_back(x);
    return out;
}

// A into cone(A [+ extras]) or a plain coproduct: a faithful injective leg
Functor faithful_extension(Rng& rng, const FinCategory& a, int max_objects) {
    std::vector<FinCategory> parts = {a};
    if (rand_int(rng, 0, 2) > 0) parts.push_back(random_category(rng, std::max(1, max_objects / 2)));
    Coproduct cp = coproduct(parts);
    FinCategory c = cp.cat;
    Functor inc = cp.injections[0];
    if (rand_int(rng, 0, 2) == 0 && c.num_objects() + 1 <= max_objects + 2) {
        FinCategory coned = cone(c);
        Functor emb;  // the cone keeps indices of the base category
        emb.name = "cone_emb";
        emb.dom = c;
        emb.cod = coned;
        for (int x = 0; x < c.num_objects(); ++x) emb.obj_map.push_back(x);
        for (int m = 0; m < c.num_morphisms(); ++m) emb.mor_map.push_back(m);
        inc = compose_functors(emb, inc);
        c = coned;
    }
    inc.name = "F";
    return inc;
}

}  // namespace

namespace {

// ambient categories for spans, weighted toward structures with sieves that
// generate nonempty cosieves
FinCategory random_ambient(Rng& rng, int max_objects) {
    switch (rand_int(rng, 0, 7)) {
        case 0: return walking_arrow();
        case 1: return random_path_category(rng, max_objects);
        case 2: return cone(random_category(rng, std::max(1, max_objects - 1)));
        case 3: {
            auto parts = coproduct({random_category(rng, std::max(1, max_objects / 2)),
                                    random_category(rng, std::max(1, max_objects / 2))});
            return parts.cat;
        }
        case 4: return poset_chain(rand_int(rng, 1, std::max(1, max_objects - 1)));
        default: return random_poset(rng, max_objects);
    }
}

}  // namespace

RandomSpan random_dwyer_span(Rng& rng, int max_objects, bool faithful_leg) {
    RandomSpan out;
    DwyerResult found;
    for (int attempt = 0; attempt < 80 && !found.ok; ++attempt) {
        FinCategory b = random_ambient(rng, max_objects);
        std::vector<int> seed;
        if (rand_int(rng, 0, 3) == 0 && b.num_objects() > 0) {
            seed.push_back(rand_int(rng, 0, b.num_objects() - 1));
        } else {
            for (int x = 0; x < b.num_objects(); ++x)
                if (rand_int(rng, 0, 1) == 0) seed.push_back(x);
        }
        auto subset = sieve_closure(b, seed);
        // prefer proper nonempty sieves while attempts remain
        bool proper = !subset.empty() && static_cast<int>(subset.size()) < b.num_objects();
        if (attempt < 50 && !proper) continue;
        auto res = is_dwyer(b, subset);
        if (res.ok) found = std::move(res);
    }
    if (!found.ok) {
        // disjoint sieves are always Dwyer: W is the sieve itself
        Coproduct cp =
            coproduct({random_category(rng, std::max(1, max_objects / 2)),
                       random_category(rng, std::max(1, max_objects / 2))});
        std::vector<int> part0;
        for (int x = 0; x < cp.injections[0].dom.num_objects(); ++x)
            part0.push_back(cp.obj_offset[0] + x);
        found = is_dwyer(cp.cat, part0);
        if (!found.ok) throw std::logic_error("random_dwyer_span: fallback failed");
    }
    out.wit = found.witness;
    Subcategory a_sub = full_subcategory(out.wit.ambient, out.wit.sieve_objs);
    out.inclusion = a_sub.inclusion;
    if (faithful_leg) {
        out.F = faithful_extension(rng, a_sub.cat, max_objects);
    } else {
        FinCategory c;
        do {
            c = random_category(rng, max_objects);
        } while (c.num_objects() == 0 && a_sub.cat.num_objects() > 0);
        out.F = random_functor(rng, a_sub.cat, c);
    }
    return out;
}

}  // namespace fincat
