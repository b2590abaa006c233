#include "fincat/scat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace fincat {

namespace {

// a structure map as an honest functor between adjacent levels
Functor level_functor(const LevelwiseSCat& s, int dom_level, const std::vector<int>& mor_map,
                      int cod_level) {
    Functor f;
    f.name = "structure";
    f.dom = s.level[dom_level];
    f.cod = s.level[cod_level];
    f.obj_map.resize(s.level[dom_level].num_objects());
    for (int x = 0; x < s.level[dom_level].num_objects(); ++x) f.obj_map[x] = x;
    f.mor_map = mor_map;
    return f;
}

}  // namespace

std::vector<std::string> validate_scat(const LevelwiseSCat& s) {
    std::vector<std::string> out;
    if (static_cast<int>(s.level.size()) != s.dim + 1) return {"level count mismatch"};
    for (int k = 0; k <= s.dim; ++k) {
        auto findings = validate(s.level[k]);
        if (!findings.empty())
            out.push_back("level " + std::to_string(k) + ": " + findings.front());
        if (s.level[k].num_objects() != s.num_objects())
            out.push_back("level " + std::to_string(k) + ": object set differs");
    }
    if (!out.empty()) return out;
    for (int k = 1; k <= s.dim; ++k) {
        if (static_cast<int>(s.face[k].size()) != k + 1) return {"face arity mismatch"};
        for (int i = 0; i <= k; ++i) {
            auto f = level_functor(s, k, s.face[k][i], k - 1);
            auto chk = is_functor(f);
            if (!chk.ok)
                out.push_back("face " + std::to_string(i) + " at level " + std::to_string(k) +
                              " not a functor: " + chk.first_violation);
        }
    }
    for (int k = 0; k < s.dim; ++k) {
        if (static_cast<int>(s.degen[k].size()) != k + 1) return {"degeneracy arity mismatch"};
        for (int i = 0; i <= k; ++i) {
            auto f = level_functor(s, k, s.degen[k][i], k + 1);
            auto chk = is_functor(f);
            if (!chk.ok)
                out.push_back("degeneracy " + std::to_string(i) + " at level " +
                              std::to_string(k) + " not a functor: " + chk.first_violation);
        }
    }
    if (!out.empty()) return out;
    // simplicial identities on morphism maps
    auto chase = [&](const std::vector<int>& second, const std::vector<int>& first, int m) {
        return second[first[m]];
    };
    for (int k = 2; k <= s.dim; ++k)
        for (int j = 1; j <= k; ++j)
            for (int i = 0; i < j; ++i)
                for (int m = 0; m < s.level[k].num_morphisms(); ++m)
                    if (chase(s.face[k - 1][i], s.face[k][j], m) !=
                        chase(s.face[k - 1][j - 1], s.face[k][i], m))
                        out.push_back("d_i d_j fails at level " + std::to_string(k));
    for (int k = 0; k + 2 <= s.dim; ++k)
        for (int j = 0; j <= k; ++j)
            for (int i = 0; i <= j; ++i)
                for (int m = 0; m < s.level[k].num_morphisms(); ++m)
                    if (chase(s.degen[k + 1][i], s.degen[k][j], m) !=
                        chase(s.degen[k + 1][j + 1], s.degen[k][i], m))
                        out.push_back("s_i s_j fails at level " + std::to_string(k));
    for (int k = 0; k + 1 <= s.dim; ++k)
        for (int j = 0; j <= k; ++j)
            for (int i = 0; i <= k + 1; ++i)
                for (int m = 0; m < s.level[k].num_morphisms(); ++m) {
                    int v = chase(s.face[k + 1][i], s.degen[k][j], m);
                    if (i == j || i == j + 1) {
                        if (v != m) out.push_back("d_i s_j = id fails at level " + std::to_string(k));
                    } else if (i < j) {
                        if (v != chase(s.degen[k - 1][j - 1], s.face[k][i], m))
                            out.push_back("d_i s_j (i<j) fails at level " + std::to_string(k));
                    } else {
                        if (v != chase(s.degen[k - 1][j], s.face[k][i - 1], m))
                            out.push_back("d_i s_j (i>j+1) fails at level " + std::to_string(k));
                    }
                }
    return out;
}

LevelwiseSCat disc(const FinCategory& c, int dim) {
    LevelwiseSCat s;
    s.name = "disc_" + c.name;
    s.dim = dim;
    s.level.assign(dim + 1, c);
    std::vector<int> id_map(c.num_morphisms());
    for (int m = 0; m < c.num_morphisms(); ++m) id_map[m] = m;
    s.face.resize(dim + 1);
    s.degen.resize(dim + 1);
    for (int k = 1; k <= dim; ++k) s.face[k].assign(k + 1, id_map);
    for (int k = 0; k < dim; ++k) s.degen[k].assign(k + 1, id_map);
    return s;
}

bool scat_equal(const LevelwiseSCat& a, const LevelwiseSCat& b) {
    if (a.dim != b.dim) return false;
    for (int k = 0; k <= a.dim; ++k)
        if (!table_equal(a.level[k], b.level[k])) return false;
    return a.face == b.face && a.degen == b.degen;
}

HomSSet hom_sset(const LevelwiseSCat& s, int x, int y) {
    HomSSet h;
    h.X.name = s.name + "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    h.X.dim = s.dim;
    h.X.counts.assign(s.dim + 1, 0);
    h.simplex_mor.resize(s.dim + 1);
    h.mor_simplex.resize(s.dim + 1);
    for (int k = 0; k <= s.dim; ++k) {
        h.mor_simplex[k].assign(s.level[k].num_morphisms(), -1);
        for (int m : s.level[k].hom(x, y)) {
            h.mor_simplex[k][m] = h.X.counts[k]++;
            h.simplex_mor[k].push_back(m);
        }
    }
    h.X.init_tables();
    for (int k = 1; k <= s.dim; ++k)
        for (int i = 0; i <= k; ++i)
            for (int s0 = 0; s0 < h.X.counts[k]; ++s0)
                h.X.face[k][i][s0] = h.mor_simplex[k - 1][s.face[k][i][h.simplex_mor[k][s0]]];
    for (int k = 0; k < s.dim; ++k)
        for (int i = 0; i <= k; ++i)
            for (int s0 = 0; s0 < h.X.counts[k]; ++s0)
                h.X.degen[k][i][s0] = h.mor_simplex[k + 1][s.degen[k][i][h.simplex_mor[k][s0]]];
    h.X.recompute_degeneracy_flags();
    return h;
}

Pi0Result pi0(const LevelwiseSCat& s) {
    if (s.dim < 1) throw std::invalid_argument("pi0: needs dim >= 1");
    const FinCategory& c0 = s.level[0];
    std::vector<int> parent(c0.num_morphisms());
    for (int m = 0; m < c0.num_morphisms(); ++m) parent[m] = m;
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int e = 0; e < s.level[1].num_morphisms(); ++e) {
        int a = find(s.face[1][0][e]), b = find(s.face[1][1][e]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    Pi0Result out;
    out.mor_class.assign(c0.num_morphisms(), -1);
    FinCategory& q = out.cat;
    q.name = "pi0_" + s.name;
    q.obj_names = c0.obj_names;
    // classes ordered by least member, so pi0 of a discrete family is the
    // level-0 category on the nose
    std::vector<int> class_of_root(c0.num_morphisms(), -1);
    for (int m = 0; m < c0.num_morphisms(); ++m) {
        int r = find(m);
        if (class_of_root[r] < 0) {
            class_of_root[r] = q.num_morphisms();
            q.mor_names.push_back(c0.mor_names[m]);
            q.mor_src.push_back(c0.src(m));
            q.mor_tgt.push_back(c0.tgt(m));
        }
        out.mor_class[m] = class_of_root[r];
    }
    q.id_of.resize(c0.num_objects());
    for (int x = 0; x < c0.num_objects(); ++x) q.id_of[x] = out.mor_class[c0.identity(x)];
    for (int m = 0; m < c0.num_morphisms(); ++m)
        if (c0.src(m) != c0.src(find(m)) || c0.tgt(m) != c0.tgt(find(m)))
            throw std::logic_error("pi0: component with mismatched endpoints");
    const int M = q.num_morphisms();
    q.comp.assign(static_cast<size_t>(M) * M, -1);
    std::vector<int> rep(M, -1);
    for (int m = 0; m < c0.num_morphisms(); ++m)
        if (rep[out.mor_class[m]] < 0) rep[out.mor_class[m]] = m;
    for (int g = 0; g < M; ++g)
        for (int f = 0; f < M; ++f) {
            if (!q.composable(g, f)) continue;
            q.comp[static_cast<size_t>(g) * M + f] = out.mor_class[c0.compose(rep[g], rep[f])];
        }
    // well-definedness across all member pairs
    for (int g = 0; g < c0.num_morphisms(); ++g)
        for (int f = 0; f < c0.num_morphisms(); ++f) {
            if (!c0.composable(g, f)) continue;
            if (out.mor_class[c0.compose(g, f)] !=
                q.compose(out.mor_class[g], out.mor_class[f]))
                throw std::logic_error("pi0: composition not well-defined within truncation");
        }
    {
        auto findings = validate(q);
        if (!findings.empty()) throw std::logic_error("pi0: invalid quotient: " + findings.front());
    }
    return out;
}

std::vector<std::string> validate_scat_functor(const SCatFunctor& f) {
    std::vector<std::string> out;
    if (f.dom.dim != f.cod.dim) return {"truncations differ"};
    if (static_cast<int>(f.mor_map.size()) != f.dom.dim + 1) return {"levelwise maps missing"};
    for (int k = 0; k <= f.dom.dim; ++k) {
        Functor fk;
        fk.dom = f.dom.level[k];
        fk.cod = f.cod.level[k];
        fk.obj_map = f.obj_map;
        fk.mor_map = f.mor_map[k];
        auto chk = is_functor(fk);
        if (!chk.ok)
            out.push_back("level " + std::to_string(k) + ": " + chk.first_violation);
    }
    if (!out.empty()) return out;
    for (int k = 1; k <= f.dom.dim; ++k)
        for (int i = 0; i <= k; ++i)
            for (int m = 0; m < f.dom.level[k].num_morphisms(); ++m)
                if (f.cod.face[k][i][f.mor_map[k][m]] != f.mor_map[k - 1][f.dom.face[k][i][m]])
                    out.push_back("does not commute with faces at level " + std::to_string(k));
    for (int k = 0; k < f.dom.dim; ++k)
        for (int i = 0; i <= k; ++i)
            for (int m = 0; m < f.dom.level[k].num_morphisms(); ++m)
                if (f.cod.degen[k][i][f.mor_map[k][m]] != f.mor_map[k + 1][f.dom.degen[k][i][m]])
                    out.push_back("does not commute with degeneracies at level " + std::to_string(k));
    return out;
}

SCatFunctor disc_functor(const Functor& f, int dim) {
    SCatFunctor out;
    out.name = "disc_" + f.name;
    out.dom = disc(f.dom, dim);
    out.cod = disc(f.cod, dim);
    out.obj_map = f.obj_map;
    out.mor_map.assign(dim + 1, f.mor_map);
    return out;
}

SCatFunctor identity_scat_functor(const LevelwiseSCat& s) {
    SCatFunctor out;
    out.name = "id";
    out.dom = s;
    out.cod = s;
    out.obj_map.resize(s.num_objects());
    for (int x = 0; x < s.num_objects(); ++x) out.obj_map[x] = x;
    out.mor_map.resize(s.dim + 1);
    for (int k = 0; k <= s.dim; ++k) {
        out.mor_map[k].resize(s.level[k].num_morphisms());
        for (int m = 0; m < s.level[k].num_morphisms(); ++m) out.mor_map[k][m] = m;
    }
    return out;
}

SCatFunctor compose_scat_functors(const SCatFunctor& g, const SCatFunctor& f) {
    SCatFunctor out;
    out.name = g.name + "." + f.name;
    out.dom = f.dom;
    out.cod = g.cod;
    out.obj_map.resize(f.obj_map.size());
    for (size_t x = 0; x < f.obj_map.size(); ++x) out.obj_map[x] = g.obj_map[f.obj_map[x]];
    out.mor_map.resize(f.mor_map.size());
    for (size_t k = 0; k < f.mor_map.size(); ++k) {
        out.mor_map[k].resize(f.mor_map[k].size());
        for (size_t m = 0; m < f.mor_map[k].size(); ++m)
            out.mor_map[k][m] = g.mor_map[k][f.mor_map[k][m]];
    }
    return out;
}

namespace {

// transports a D_k morphism along a structure map of S, using the block
// structure of the explicit pushout
std::vector<int> induced_structure_map(const DwyerPushout& from, const DwyerPushout& to,
                                       const std::vector<int>& s_mor_map) {
    std::vector<int> out(from.D.num_morphisms(), -1);
    for (int m = 0; m < from.D.num_morphisms(); ++m) {
        switch (from.kind[m]) {
            case DMorKind::CPart: out[m] = s_mor_map[from.origin[m]]; break;  // C block is shared
            case DMorKind::VPart: out[m] = to.G.mor_map[from.origin[m]]; break;
            case DMorKind::Hat:
                out[m] = to.hat(from.D.src(m), from.hat_cosieve[m], s_mor_map[from.origin[m]]);
                break;
        }
        if (out[m] < 0) throw std::logic_error("levelwise pushout: structure map has a hole");
    }
    return out;
}

}  // namespace

LevelwisePushout levelwise_dwyer_pushout(const DwyerWitness& wit, const SCatFunctor& F) {
    LevelwisePushout out;
    const LevelwiseSCat& S = F.cod;
    {
        auto findings = validate_scat_functor(F);
        if (!findings.empty())
            throw std::invalid_argument("levelwise_dwyer_pushout: bad F: " + findings.front());
    }
    for (int k = 0; k <= S.dim; ++k) {
        Functor fk;
        fk.name = "F" + std::to_string(k);
        fk.dom = F.dom.level[k];
        fk.cod = S.level[k];
        fk.obj_map = F.obj_map;
        fk.mor_map = F.mor_map[k];
        out.per_level.push_back(dwyer_pushout(wit, fk));
    }
    LevelwiseSCat& d = out.scat;
    d.name = "pushout_scat";
    d.dim = S.dim;
    for (auto& po : out.per_level) d.level.push_back(po.D);
    d.face.resize(d.dim + 1);
    d.degen.resize(d.dim + 1);
    for (int k = 1; k <= d.dim; ++k)
        for (int i = 0; i <= k; ++i)
            d.face[k].push_back(
                induced_structure_map(out.per_level[k], out.per_level[k - 1], S.face[k][i]));
    for (int k = 0; k < d.dim; ++k)
        for (int i = 0; i <= k; ++i)
            d.degen[k].push_back(
                induced_structure_map(out.per_level[k], out.per_level[k + 1], S.degen[k][i]));
    {
        auto findings = validate_scat(d);
        if (!findings.empty())
            throw std::logic_error("levelwise_dwyer_pushout: invalid result: " + findings.front());
    }
    out.from_S.name = "J_scat";
    out.from_S.dom = S;
    out.from_S.cod = d;
    out.from_S.obj_map = out.per_level[0].J.obj_map;
    out.from_discB.name = "G_scat";
    out.from_discB.dom = disc(wit.ambient, d.dim);
    out.from_discB.cod = d;
    out.from_discB.obj_map = out.per_level[0].G.obj_map;
    for (int k = 0; k <= d.dim; ++k) {
        out.from_S.mor_map.push_back(out.per_level[k].J.mor_map);
        out.from_discB.mor_map.push_back(out.per_level[k].G.mor_map);
    }
    for (const auto* f : {&out.from_S, &out.from_discB}) {
        auto findings = validate_scat_functor(*f);
        if (!findings.empty())
            throw std::logic_error("levelwise_dwyer_pushout: bad cocone: " + findings.front());
    }
    return out;
}

PresentedLevelwisePushout levelwise_presented_pushout(const Functor& I, const SCatFunctor& F,
                                                      const SaturationOptions& opts) {
    PresentedLevelwisePushout out;
    const LevelwiseSCat& S = F.cod;
    for (int k = 0; k <= S.dim; ++k) {
        Functor fk;
        fk.dom = F.dom.level[k];
        fk.cod = S.level[k];
        fk.obj_map = F.obj_map;
        fk.mor_map = F.mor_map[k];
        out.pp.push_back(pushout_presentation(I, fk));
        out.sat.push_back(saturate(out.pp.back().pres, opts));
        if (!out.sat.back().finite())
            throw guard_error("levelwise_presented_pushout: level " + std::to_string(k) +
                              " inconclusive: " + out.sat.back().stats.note);
    }
    LevelwiseSCat& d = out.scat;
    d.name = "pushout_scat";
    d.dim = S.dim;
    for (auto& s : out.sat) d.level.push_back(s.cat);

    std::vector<OracleCocone> cocones;
    for (int k = 0; k <= S.dim; ++k)
        cocones.push_back(oracle_cocone(out.pp[k], out.sat[k], I.cod, S.level[k]));

    auto structure = [&](int from_level, const std::vector<int>& s_map, int to_level) {
        Functor sk = level_functor(S, from_level, s_map, to_level);
        auto med = mediating_functor(out.pp[from_level], out.sat[from_level],
                                     cocones[to_level].from_B,
                                     compose_functors(cocones[to_level].from_C, sk));
        if (!med) throw std::logic_error("levelwise_presented_pushout: no mediating structure map");
        for (size_t x = 0; x < med->obj_map.size(); ++x)
            if (med->obj_map[x] != static_cast<int>(x))
                throw std::logic_error("levelwise_presented_pushout: structure map moves objects");
        return med->mor_map;
    };
    d.face.resize(d.dim + 1);
    d.degen.resize(d.dim + 1);
    for (int k = 1; k <= d.dim; ++k)
        for (int i = 0; i <= k; ++i) d.face[k].push_back(structure(k, S.face[k][i], k - 1));
    for (int k = 0; k < d.dim; ++k)
        for (int i = 0; i <= k; ++i) d.degen[k].push_back(structure(k, S.degen[k][i], k + 1));
    {
        auto findings = validate_scat(d);
        if (!findings.empty())
            throw std::logic_error("levelwise_presented_pushout: invalid result: " +
                                   findings.front());
    }
    out.from_S.name = "J_scat";
    out.from_S.dom = S;
    out.from_S.cod = d;
    out.from_S.obj_map = cocones[0].from_C.obj_map;
    out.from_discB.name = "G_scat";
    out.from_discB.dom = disc(I.cod, d.dim);
    out.from_discB.cod = d;
    out.from_discB.obj_map = cocones[0].from_B.obj_map;
    for (int k = 0; k <= d.dim; ++k) {
        out.from_S.mor_map.push_back(cocones[k].from_C.mor_map);
        out.from_discB.mor_map.push_back(cocones[k].from_B.mor_map);
    }
    for (const auto* f : {&out.from_S, &out.from_discB}) {
        auto findings = validate_scat_functor(*f);
        if (!findings.empty())
            throw std::logic_error("levelwise_presented_pushout: bad cocone: " + findings.front());
    }
    return out;
}

std::string DKReport::to_string() const {
    std::ostringstream os;
    os << (consistent ? "Consistent" : "Refuted");
    if (!consistent) {
        if (has_witness_pair) os << " at hom pair (" << witness_x << "," << witness_y << ")";
        if (witness_obj >= 0) os << " at object " << witness_obj;
    }
    return os.str();
}

DKReport dk_check(const SCatFunctor& h, int homology_degree) {
    if (h.dom.dim < homology_degree + 1 || h.cod.dim < homology_degree + 1)
        throw std::invalid_argument("dk_check: truncation below homology degree + 1");
    DKReport rep;
    const LevelwiseSCat& s = h.dom;
    const LevelwiseSCat& t = h.cod;
    for (int x = 0; x < s.num_objects(); ++x)
        for (int y = 0; y < s.num_objects(); ++y) {
            auto hs = hom_sset(s, x, y);
            auto ht = hom_sset(t, h.obj_map[x], h.obj_map[y]);
            DKReport::HomVerdict v;
            v.x = x;
            v.y = y;
            // pi0 of the induced map on hom simplicial sets
            std::vector<int> ps(hs.X.counts[0]), pt(ht.X.counts[0]);
            auto component_ids = [](const TruncatedSSet& xset, std::vector<int>& comp) {
                std::vector<int> parent(xset.counts[0]);
                for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
                std::function<int(int)> find = [&](int a) {
                    while (parent[a] != a) a = parent[a] = parent[parent[a]];
                    return a;
                };
                if (xset.dim >= 1)
                    for (int e = 0; e < xset.counts[1]; ++e) {
                        int a = find(xset.face[1][0][e]), b = find(xset.face[1][1][e]);
                        if (a != b) parent[std::max(a, b)] = std::min(a, b);
                    }
                for (size_t i = 0; i < parent.size(); ++i) comp[i] = find(static_cast<int>(i));
            };
            component_ids(hs.X, ps);
            component_ids(ht.X, pt);
            std::map<int, int> image;  // source component -> target component
            bool well = true, inj = true;
            for (int s0 = 0; s0 < hs.X.counts[0]; ++s0) {
                int tv = ht.mor_simplex[0][h.mor_map[0][hs.simplex_mor[0][s0]]];
                auto it = image.find(ps[s0]);
                if (it == image.end())
                    image[ps[s0]] = pt[tv];
                else if (it->second != pt[tv])
                    well = false;
            }
            {
                std::map<int, int> seen;
                for (auto [a, b] : image) {
                    (void)a;
                    if (seen.count(b)) inj = false;
                    seen[b] = 1;
                }
                std::map<int, int> tcomps;
                for (int v0 = 0; v0 < ht.X.counts[0]; ++v0) tcomps[pt[v0]] = 1;
                v.pi0_bijective = well && inj && image.size() == tcomps.size();
            }
            v.homology_agrees = homology_equal(hs.X, ht.X, homology_degree).equal;
            if ((!v.pi0_bijective || !v.homology_agrees) && rep.consistent) {
                rep.consistent = false;
                rep.has_witness_pair = true;
                rep.witness_x = x;
                rep.witness_y = y;
            }
            rep.homs.push_back(v);
        }
    // essential surjectivity of pi0(h)
    auto pt = pi0(t);
    std::vector<char> hit(t.num_objects(), 0);
    for (int x = 0; x < s.num_objects(); ++x) hit[h.obj_map[x]] = 1;
    for (int y = 0; y < t.num_objects(); ++y) {
        bool reachable = false;
        for (int x = 0; x < t.num_objects() && !reachable; ++x)
            if (hit[x] && objects_isomorphic(pt.cat, x, y)) reachable = true;
        if (!reachable) {
            rep.essentially_surjective = false;
            if (rep.consistent) {
                rep.consistent = false;
                rep.witness_obj = y;
            }
            break;
        }
    }
    return rep;
}

namespace {

SCatFunctor induced_comparison(const LevelwisePushout& dprime, const LevelwisePushout& dfull,
                               const SCatFunctor& M) {
    SCatFunctor h;
    h.name = "H";
    h.dom = dprime.scat;
    h.cod = dfull.scat;
    const int nCp = M.dom.num_objects();
    const int nC = M.cod.num_objects();
    h.obj_map.resize(dprime.scat.num_objects());
    for (int x = 0; x < dprime.scat.num_objects(); ++x)
        h.obj_map[x] = x < nCp ? M.obj_map[x] : nC + (x - nCp);
    h.mor_map.resize(dprime.scat.dim + 1);
    for (int k = 0; k <= dprime.scat.dim; ++k) {
        const DwyerPushout& fromk = dprime.per_level[k];
        const DwyerPushout& tok = dfull.per_level[k];
        h.mor_map[k].resize(fromk.D.num_morphisms());
        for (int m = 0; m < fromk.D.num_morphisms(); ++m) {
            switch (fromk.kind[m]) {
                case DMorKind::CPart: h.mor_map[k][m] = M.mor_map[k][fromk.origin[m]]; break;
                case DMorKind::VPart: h.mor_map[k][m] = tok.G.mor_map[fromk.origin[m]]; break;
                case DMorKind::Hat:
                    h.mor_map[k][m] = tok.hat(M.obj_map[fromk.D.src(m)], fromk.hat_cosieve[m],
                                              M.mor_map[k][fromk.origin[m]]);
                    break;
            }
            if (h.mor_map[k][m] < 0)
                throw std::logic_error("induced_comparison: missing image");
        }
    }
    auto findings = validate_scat_functor(h);
    if (!findings.empty())
        throw std::logic_error("induced_comparison: not simplicial: " + findings.front());
    return h;
}

}  // namespace

FlatInstanceReport flat_instance_check(const DwyerWitness& wit, const SCatFunctor& Fprime,
                                       const SCatFunctor& M, int homology_degree) {
    FlatInstanceReport rep;
    rep.m_report = dk_check(M, homology_degree);
    rep.applicable = rep.m_report.consistent;
    auto dprime = levelwise_dwyer_pushout(wit, Fprime);
    auto dfull = levelwise_dwyer_pushout(wit, compose_scat_functors(M, Fprime));
    auto h = induced_comparison(dprime, dfull, M);
    rep.h_report = dk_check(h, homology_degree);
    return rep;
}

FlatInstanceReport flat_instance_check_presented(const Functor& I, const SCatFunctor& Fprime,
                                                 const SCatFunctor& M, int homology_degree,
                                                 const SaturationOptions& opts) {
    FlatInstanceReport rep;
    rep.m_report = dk_check(M, homology_degree);
    rep.applicable = rep.m_report.consistent;
    auto dprime = levelwise_presented_pushout(I, Fprime, opts);
    auto dfull = levelwise_presented_pushout(I, compose_scat_functors(M, Fprime), opts);
    // the comparison at each level is the mediating functor of the cocone
    // (B -> D_k, S'_k -> S_k -> D_k)
    SCatFunctor h;
    h.name = "H";
    h.dom = dprime.scat;
    h.cod = dfull.scat;
    h.mor_map.resize(dprime.scat.dim + 1);
    for (int k = 0; k <= dprime.scat.dim; ++k) {
        Functor mk;
        mk.dom = M.dom.level[k];
        mk.cod = M.cod.level[k];
        mk.obj_map = M.obj_map;
        mk.mor_map = M.mor_map[k];
        Functor toD_C;
        toD_C.dom = M.cod.level[k];
        toD_C.cod = dfull.scat.level[k];
        toD_C.obj_map = dfull.from_S.obj_map;
        toD_C.mor_map = dfull.from_S.mor_map[k];
        Functor toD_B;
        toD_B.dom = I.cod;
        toD_B.cod = dfull.scat.level[k];
        toD_B.obj_map = dfull.from_discB.obj_map;
        toD_B.mor_map = dfull.from_discB.mor_map[k];
        auto med = mediating_functor(dprime.pp[k], dprime.sat[k], toD_B,
                                     compose_functors(toD_C, mk));
        if (!med) throw std::logic_error("flat_instance_check_presented: no mediating comparison");
        if (k == 0) h.obj_map = med->obj_map;
        h.mor_map[k] = med->mor_map;
    }
    {
        auto findings = validate_scat_functor(h);
        if (!findings.empty())
            throw std::logic_error("flat_instance_check_presented: comparison not simplicial: " +
                                   findings.front());
    }
    rep.h_report = dk_check(h, homology_degree);
    return rep;
}

}  // namespace fincat
