#include "fincat/pushout.hpp"

#include <algorithm>
#include <functional>

namespace fincat {

int DwyerPushout::hat(int c_obj, int u_b_obj, int c_mor) const {
    auto it = hat_index_.find({c_obj, u_b_obj, c_mor});
    return it == hat_index_.end() ? -1 : it->second;
}

DwyerPushout dwyer_pushout(const DwyerWitness& wit, const Functor& F) {
    const FinCategory& B = wit.ambient;
    const FinCategory& C = F.cod;
    Subcategory A_sub = full_subcategory(B, wit.sieve_objs);
    if (!table_equal(A_sub.cat, F.dom))
        throw std::invalid_argument("dwyer_pushout: F is not defined on the witness's sieve");
    {
        auto findings = check_witness(wit);
        if (!findings.empty())
            throw std::invalid_argument("dwyer_pushout: invalid witness: " + findings.front());
    }

    DwyerPushout po;
    const int nC = C.num_objects();
    std::vector<int> v_objs;
    for (int x = 0; x < B.num_objects(); ++x)
        if (wit.sieve.classifier[x] == 1) v_objs.push_back(x);
    po.obj_from_C.resize(nC);
    po.obj_from_V.assign(B.num_objects(), -1);
    FinCategory& D = po.D;
    D.name = "pushout";
    for (int c = 0; c < nC; ++c) {
        po.obj_from_C[c] = c;
        D.obj_names.push_back(C.obj_names[c]);
        po.classifier.push_back(0);
    }
    for (int v : v_objs) {
        po.obj_from_V[v] = D.num_objects();
        D.obj_names.push_back(B.obj_names[v]);
        po.classifier.push_back(1);
    }

    std::vector<char> in_u(B.num_objects(), 0);
    for (int u : wit.u_objs) in_u[u] = 1;
    // S(u) = F(R(u)) as a C object
    auto S_of_u = [&](int u) { return F.obj_map[A_sub.obj_from_ambient[wit.retract_obj[u]]]; };
    // F(R(g)) for a morphism of W, as a C morphism
    auto FR_mor = [&](int g) { return F.mor_map[A_sub.mor_from_ambient[wit.retract_mor[g]]]; };

    // morphism blocks: C part, V part, hats ordered by (source, target, f)
    const int mC = C.num_morphisms();
    std::vector<int> v_block;  // B morphisms within V, ascending
    for (int m = 0; m < B.num_morphisms(); ++m)
        if (wit.sieve.classifier[B.src(m)] == 1 && wit.sieve.classifier[B.tgt(m)] == 1)
            v_block.push_back(m);
    std::vector<int> v_mor_to_D(B.num_morphisms(), -1);
    for (int f = 0; f < mC; ++f) {
        D.mor_names.push_back(C.mor_names[f]);
        D.mor_src.push_back(C.src(f));
        D.mor_tgt.push_back(C.tgt(f));
        po.kind.push_back(DMorKind::CPart);
        po.origin.push_back(f);
        po.hat_cosieve.push_back(-1);
    }
    for (int m : v_block) {
        v_mor_to_D[m] = D.num_morphisms();
        D.mor_names.push_back(B.mor_names[m]);
        D.mor_src.push_back(po.obj_from_V[B.src(m)]);
        D.mor_tgt.push_back(po.obj_from_V[B.tgt(m)]);
        po.kind.push_back(DMorKind::VPart);
        po.origin.push_back(m);
        po.hat_cosieve.push_back(-1);
    }
    for (int c = 0; c < nC; ++c)
        for (int u : wit.u_objs)
            for (int f : C.hom(c, S_of_u(u))) {
                po.hat_index_[{c, u, f}] = D.num_morphisms();
                D.mor_names.push_back("hat_" + C.mor_names[f] + "_" + B.obj_names[u]);
                D.mor_src.push_back(c);
                D.mor_tgt.push_back(po.obj_from_V[u]);
                po.kind.push_back(DMorKind::Hat);
                po.origin.push_back(f);
                po.hat_cosieve.push_back(u);
            }
    const int mD = D.num_morphisms();
    if (mD > morphism_guard()) throw guard_error("dwyer_pushout exceeds morphism guard");
    D.id_of.resize(D.num_objects());
    for (int c = 0; c < nC; ++c) D.id_of[c] = C.identity(c);
    for (int v : v_objs) D.id_of[po.obj_from_V[v]] = v_mor_to_D[B.identity(v)];

    D.comp.assign(static_cast<size_t>(mD) * mD, -1);
    auto set = [&](int g, int f, int h) { D.comp[static_cast<size_t>(g) * mD + f] = h; };
    for (int g = 0; g < mD; ++g)
        for (int f = 0; f < mD; ++f) {
            if (!D.composable(g, f)) continue;
            if (po.kind[f] == DMorKind::CPart && po.kind[g] == DMorKind::CPart)
                set(g, f, C.compose(po.origin[g], po.origin[f]));
            else if (po.kind[f] == DMorKind::VPart && po.kind[g] == DMorKind::VPart)
                set(g, f, v_mor_to_D[B.compose(po.origin[g], po.origin[f])]);
            else if (po.kind[f] == DMorKind::CPart && po.kind[g] == DMorKind::Hat)
                set(g, f,
                    po.hat(D.src(f), po.hat_cosieve[g], C.compose(po.origin[g], po.origin[f])));
            else if (po.kind[f] == DMorKind::Hat && po.kind[g] == DMorKind::VPart) {
                // g: u -> u' lies in U since U is a cosieve inside V
                int u2 = B.tgt(po.origin[g]);
                set(g, f,
                    po.hat(D.src(f), u2, C.compose(FR_mor(po.origin[g]), po.origin[f])));
            }
        }

    Functor& J = po.J;
    J.name = "J";
    J.dom = C;
    J.cod = D;
    J.obj_map = po.obj_from_C;
    for (int f = 0; f < mC; ++f) J.mor_map.push_back(f);

    Functor& G = po.G;
    G.name = "G";
    G.dom = B;
    G.cod = D;
    G.obj_map.resize(B.num_objects());
    G.mor_map.resize(B.num_morphisms());
    for (int x = 0; x < B.num_objects(); ++x)
        G.obj_map[x] = wit.sieve.classifier[x] == 0
                           ? po.obj_from_C[F.obj_map[A_sub.obj_from_ambient[x]]]
                           : po.obj_from_V[x];
    for (int m = 0; m < B.num_morphisms(); ++m) {
        int sx = wit.sieve.classifier[B.src(m)], tx = wit.sieve.classifier[B.tgt(m)];
        if (sx == 0 && tx == 0)
            G.mor_map[m] = F.mor_map[A_sub.mor_from_ambient[m]];
        else if (sx == 1 && tx == 1)
            G.mor_map[m] = v_mor_to_D[m];
        else {
            // a -> u with a in A, u necessarily in U: image is the hat of F(R(m))
            int u = B.tgt(m);
            G.mor_map[m] = po.hat(F.obj_map[A_sub.obj_from_ambient[B.src(m)]], u, FR_mor(m));
        }
    }

    // induced adjunction data on the minimal cosieve Y = C ∪ U
    po.S_obj.assign(D.num_objects(), -1);
    po.S_mor.assign(mD, -1);
    po.nu.assign(D.num_objects(), -1);
    for (int c = 0; c < nC; ++c) {
        po.y_objs.push_back(c);
        po.S_obj[c] = c;
        po.nu[c] = D.id_of[c];
    }
    for (int u : wit.u_objs) {
        po.y_objs.push_back(po.obj_from_V[u]);
        po.S_obj[po.obj_from_V[u]] = S_of_u(u);
        po.nu[po.obj_from_V[u]] = po.hat(S_of_u(u), u, C.identity(S_of_u(u)));
    }
    std::sort(po.y_objs.begin(), po.y_objs.end());
    for (int m = 0; m < mD; ++m) {
        if (po.S_obj[D.src(m)] < 0 || po.S_obj[D.tgt(m)] < 0) continue;
        switch (po.kind[m]) {
            case DMorKind::CPart: po.S_mor[m] = po.origin[m]; break;
            case DMorKind::Hat: po.S_mor[m] = po.origin[m]; break;
            case DMorKind::VPart: po.S_mor[m] = FR_mor(po.origin[m]); break;
        }
    }

    auto findings = validate(D);
    if (!findings.empty())
        throw std::logic_error("dwyer_pushout: constructed table invalid: " + findings.front());
    if (!is_functor(J).ok || !is_functor(G).ok)
        throw std::logic_error("dwyer_pushout: cocone legs are not functors");
    return po;
}

std::vector<std::string> check_pushout_formulas(const DwyerPushout& po, const DwyerWitness& wit,
                                                const Functor& F) {
    std::vector<std::string> out;
    const FinCategory& D = po.D;
    const FinCategory& B = wit.ambient;
    const FinCategory& C = F.cod;
    Subcategory A_sub = full_subcategory(B, wit.sieve_objs);
    auto S_of_u = [&](int u) { return F.obj_map[A_sub.obj_from_ambient[wit.retract_obj[u]]]; };

    int nV = 0;
    for (int x = 0; x < B.num_objects(); ++x)
        if (wit.sieve.classifier[x] == 1) ++nV;
    if (D.num_objects() != C.num_objects() + nV)
        out.push_back("object count violates ob D = ob C + ob V");

    std::vector<char> in_u(B.num_objects(), 0);
    for (int u : wit.u_objs) in_u[u] = 1;
    for (int x = 0; x < D.num_objects(); ++x)
        for (int y = 0; y < D.num_objects(); ++y) {
            int have = D.hom_size(x, y);
            int want;
            if (po.classifier[x] == 0 && po.classifier[y] == 0)
                want = C.hom_size(x, y);
            else if (po.classifier[x] == 1 && po.classifier[y] == 1) {
                int bx = -1, by = -1;
                for (int v = 0; v < B.num_objects(); ++v) {
                    if (po.obj_from_V[v] == x) bx = v;
                    if (po.obj_from_V[v] == y) by = v;
                }
                want = B.hom_size(bx, by);
            } else if (po.classifier[x] == 0) {
                int by = -1;
                for (int v = 0; v < B.num_objects(); ++v)
                    if (po.obj_from_V[v] == y) by = v;
                want = in_u[by] ? C.hom_size(x, S_of_u(by)) : 0;
            } else
                want = 0;
            if (have != want)
                out.push_back("hom size D(" + D.obj_names[x] + "," + D.obj_names[y] + ") = " +
                              std::to_string(have) + ", formula gives " + std::to_string(want));
        }

    if (!is_functor(po.J).ok) out.push_back("J is not a functor");
    if (!is_functor(po.G).ok) out.push_back("G is not a functor");
    if (!is_faithful(po.J)) out.push_back("J is not faithful");
    if (!is_full(po.J)) out.push_back("J is not full");
    {
        // the fully-faithful inclusion on the B side is G restricted to V
        std::vector<int> v_objs;
        for (int x = 0; x < B.num_objects(); ++x)
            if (wit.sieve.classifier[x] == 1) v_objs.push_back(x);
        Subcategory vsub = full_subcategory(B, v_objs);
        Functor gv = compose_functors(po.G, vsub.inclusion);
        if (!is_functor(gv).ok) out.push_back("G|V is not a functor");
        if (!is_faithful(gv)) out.push_back("G|V is not faithful");
        if (!is_full(gv)) out.push_back("G|V is not full");
        if (!is_injective_on_objects(gv)) out.push_back("G|V is not injective on objects");
    }
    {
        std::vector<char> hit(D.num_objects(), 0);
        for (int x : po.J.obj_map) hit[x] = 1;
        for (int x : po.G.obj_map) hit[x] = 1;
        if (std::find(hit.begin(), hit.end(), 0) != hit.end())
            out.push_back("J and G are not jointly surjective on objects");
    }
    // the classifier prohibits morphisms from the V part to the C part
    for (int m = 0; m < D.num_morphisms(); ++m)
        if (po.classifier[D.src(m)] == 1 && po.classifier[D.tgt(m)] == 0)
            out.push_back("classifier violated by " + D.mor_names[m]);

    // composition square on every composable triple h: c' -> c, f^: c -> u,
    // g: u -> u' -- the composite must be (S(g) . f . h)^
    for (int g = 0; g < D.num_morphisms(); ++g) {
        if (po.kind[g] != DMorKind::VPart) continue;
        if (po.S_mor[g] < 0) continue;  // not within U
        for (int f = 0; f < D.num_morphisms(); ++f) {
            if (po.kind[f] != DMorKind::Hat || !D.composable(g, f)) continue;
            int gf = D.compose(g, f);
            int want_gf = po.hat(D.src(f), B.tgt(po.origin[g]),
                                 C.compose(po.S_mor[g], po.origin[f]));
            if (gf != want_gf) out.push_back("square fails at g.f^ for " + D.mor_names[f]);
            for (int h = 0; h < D.num_morphisms(); ++h) {
                if (po.kind[h] != DMorKind::CPart || !D.composable(f, h)) continue;
                int whole = D.compose(D.compose(g, f), h);
                int want = po.hat(D.src(h), B.tgt(po.origin[g]),
                                  C.compose(po.S_mor[g], C.compose(po.origin[f], po.origin[h])));
                if (whole != want)
                    out.push_back("square fails at g.f^.h for " + D.mor_names[f]);
            }
        }
    }
    return out;
}

ClosureCheck verify_pushout_dwyer_closure(const DwyerPushout& po) {
    ClosureCheck out;
    std::vector<int> c_part;
    for (int x = 0; x < po.D.num_objects(); ++x)
        if (po.classifier[x] == 0) c_part.push_back(x);
    out.recomputed = is_dwyer(po.D, c_part);

    DwyerWitness stored;
    stored.ambient = po.D;
    stored.sieve_objs = c_part;
    stored.sieve.classifier = po.classifier;
    stored.cosieve_objs = po.y_objs;
    for (int y : po.y_objs)
        if (po.classifier[y] == 1) stored.u_objs.push_back(y);
    stored.retract_obj = po.S_obj;
    stored.retract_mor = po.S_mor;
    stored.counit = po.nu;
    out.stored_witness_findings = check_witness(stored);
    out.ok = out.recomputed.ok && out.stored_witness_findings.empty();
    return out;
}

namespace {

struct ObjProfile {
    std::vector<int> outs, ins;
    int endo = 0;
    bool operator==(const ObjProfile& o) const {
        return endo == o.endo && outs == o.outs && ins == o.ins;
    }
};

ObjProfile profile_of(const FinCategory& c, int x) {
    ObjProfile p;
    p.endo = c.hom_size(x, x);
    for (int y = 0; y < c.num_objects(); ++y) {
        p.outs.push_back(c.hom_size(x, y));
        p.ins.push_back(c.hom_size(y, x));
    }
    std::sort(p.outs.begin(), p.outs.end());
    std::sort(p.ins.begin(), p.ins.end());
    return p;
}

struct IsoSearch {
    const FinCategory& a;
    const FinCategory& b;
    std::vector<int> obj_map, obj_used;
    std::vector<int> mor_map, mor_used;
    std::vector<std::vector<char>> obj_ok;  // candidate matrix from profiles

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
        int s = obj_map[a.src(m)], t = obj_map[a.tgt(m)];
        for (int img = 0; img < b.num_morphisms(); ++img) {
            if (mor_used[img] || b.src(img) != s || b.tgt(img) != t) continue;
            if (a.is_identity(m) != b.is_identity(img)) continue;
            mor_map[m] = img;
            mor_used[img] = 1;
            if (mor_consistent(m) && rec_mor(m + 1)) return true;
            mor_map[m] = -1;
            mor_used[img] = 0;
        }
        return false;
    }

    bool rec_obj(int x) {
        if (x == a.num_objects()) {
            std::fill(mor_map.begin(), mor_map.end(), -1);
            std::fill(mor_used.begin(), mor_used.end(), 0);
            return rec_mor(0);
        }
        for (int img = 0; img < b.num_objects(); ++img) {
            if (obj_used[img] || !obj_ok[x][img]) continue;
            bool fine = true;
            for (int y = 0; y < x && fine; ++y)
                if (a.hom_size(x, y) != b.hom_size(img, obj_map[y]) ||
                    a.hom_size(y, x) != b.hom_size(obj_map[y], img))
                    fine = false;
            if (!fine) continue;
            obj_map[x] = img;
            obj_used[img] = 1;
            if (rec_obj(x + 1)) return true;
            obj_map[x] = -1;
            obj_used[img] = 0;
        }
        return false;
    }
};

}  // namespace

IsoResult iso_check(const FinCategory& c1, const FinCategory& c2, int obj_guard) {
    IsoResult res;
    if (c1.num_objects() != c2.num_objects() || c1.num_morphisms() != c2.num_morphisms()) {
        res.reason = "object or morphism counts differ";
        return res;
    }
    if (c1.num_objects() > obj_guard)
        throw guard_error("iso_check: object count exceeds the exhaustive-search guard");
    IsoSearch s{c1, c2, {}, {}, {}, {}, {}};
    s.obj_ok.assign(c1.num_objects(), std::vector<char>(c2.num_objects(), 0));
    {
        std::vector<ObjProfile> p1, p2;
        for (int x = 0; x < c1.num_objects(); ++x) p1.push_back(profile_of(c1, x));
        for (int x = 0; x < c2.num_objects(); ++x) p2.push_back(profile_of(c2, x));
        for (int x = 0; x < c1.num_objects(); ++x) {
            bool any = false;
            for (int y = 0; y < c2.num_objects(); ++y)
                if (p1[x] == p2[y]) {
                    s.obj_ok[x][y] = 1;
                    any = true;
                }
            if (!any) {
                res.reason = "hom-cardinality profiles differ at " + c1.obj_names[x];
                return res;
            }
        }
    }
    s.obj_map.assign(c1.num_objects(), -1);
    s.obj_used.assign(c2.num_objects(), 0);
    s.mor_map.assign(c1.num_morphisms(), -1);
    s.mor_used.assign(c2.num_morphisms(), 0);
    if (s.rec_obj(0)) {
        res.isomorphic = true;
        res.obj_map = s.obj_map;
        res.mor_map = s.mor_map;
    } else {
        res.reason = "exhaustive search found no isomorphism";
    }
    return res;
}

std::optional<Functor> mediating_functor(const PushoutPresentation& pp,
                                         const SaturationResult& sat, const Functor& H1,
                                         const Functor& H2) {
    if (!sat.finite()) return std::nullopt;
    const FinCategory& E = H1.cod;
    Functor m;
    m.name = "mediate";
    m.dom = sat.cat;
    m.cod = E;
    m.obj_map.assign(sat.cat.num_objects(), -1);
    for (size_t x = 0; x < pp.obj_from_B.size(); ++x) {
        int& slot = m.obj_map[pp.obj_from_B[x]];
        if (slot >= 0 && slot != H1.obj_map[x]) return std::nullopt;
        slot = H1.obj_map[x];
    }
    for (size_t x = 0; x < pp.obj_from_C.size(); ++x) {
        int& slot = m.obj_map[pp.obj_from_C[x]];
        if (slot >= 0 && slot != H2.obj_map[x]) return std::nullopt;
        slot = H2.obj_map[x];
    }
    for (int x : m.obj_map)
        if (x < 0) return std::nullopt;
    m.mor_map.assign(sat.cat.num_morphisms(), -1);
    for (int q = 0; q < sat.cat.num_morphisms(); ++q) {
        int cur = E.identity(m.obj_map[sat.cat.src(q)]);
        for (int g : sat.rep_word[q]) {
            const auto& gen = pp.pres.gens[g];
            int img = gen.origin_cat == 0 ? H1.mor_map[gen.origin_mor] : H2.mor_map[gen.origin_mor];
            if (!E.composable(img, cur)) return std::nullopt;
            cur = E.compose(img, cur);
        }
        m.mor_map[q] = cur;
    }
    if (!is_functor(m).ok) return std::nullopt;
    return m;
}

OracleAgreement check_oracle_agreement(const DwyerPushout& po, const DwyerWitness& wit,
                                       const Functor& F, const SaturationOptions& opts) {
    OracleAgreement out;
    Subcategory A_sub = full_subcategory(wit.ambient, wit.sieve_objs);
    Functor I = A_sub.inclusion;
    I.dom = F.dom;  // same table; adopt F's labels
    auto pp = pushout_presentation(I, F);
    SaturationResult sat;
    try {
        sat = saturate(pp.pres, opts);
    } catch (const guard_error& e) {
        out.detail = std::string("oracle guard: ") + e.what();
        return out;
    }
    out.oracle_finite = sat.finite();
    if (!out.oracle_finite) {
        out.detail = "oracle inconclusive: " + sat.stats.note;
        return out;
    }
    auto med = mediating_functor(pp, sat, po.G, po.J);
    if (!med) {
        out.detail = "no mediating functor from the oracle pushout";
        return out;
    }
    // the mediating functor must be an isomorphism of categories
    if (med->dom.num_objects() != po.D.num_objects() ||
        med->dom.num_morphisms() != po.D.num_morphisms()) {
        out.detail = "oracle and explicit pushout have different sizes";
        return out;
    }
    std::vector<char> obj_hit(po.D.num_objects(), 0), mor_hit(po.D.num_morphisms(), 0);
    for (int x : med->obj_map) obj_hit[x] = 1;
    for (int x : med->mor_map) mor_hit[x] = 1;
    if (std::find(obj_hit.begin(), obj_hit.end(), 0) != obj_hit.end() ||
        std::find(mor_hit.begin(), mor_hit.end(), 0) != mor_hit.end()) {
        out.detail = "mediating functor is not bijective";
        return out;
    }
    auto cocone = oracle_cocone(pp, sat, wit.ambient, F.cod);
    if (!functor_equal(compose_functors(*med, cocone.from_B), po.G) ||
        !functor_equal(compose_functors(*med, cocone.from_C), po.J)) {
        out.detail = "mediating functor does not commute with the cocones";
        return out;
    }
    out.agrees = true;
    out.mediating = std::move(med);
    return out;
}

}  // namespace fincat
