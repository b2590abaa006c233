#include "fincat/dwyer.hpp"

#include <algorithm>

namespace fincat {

SieveCheck is_sieve(const FinCategory& b, const std::vector<int>& subset) {
    SieveCheck out;
    out.witness.classifier.assign(b.num_objects(), 1);
    for (int x : subset) out.witness.classifier[x] = 0;
    for (int m = 0; m < b.num_morphisms(); ++m)
        if (out.witness.classifier[b.src(m)] == 1 && out.witness.classifier[b.tgt(m)] == 0) {
            out.refuting_mor = m;
            return out;
        }
    out.ok = true;
    return out;
}

std::vector<int> minimal_cosieve(const FinCategory& b, const std::vector<int>& subset) {
    std::vector<char> in(b.num_objects(), 0), out(b.num_objects(), 0);
    for (int x : subset) in[x] = 1;
    for (int m = 0; m < b.num_morphisms(); ++m)
        if (in[b.src(m)]) out[b.tgt(m)] = 1;
    for (int x : subset) out[x] = 1;  // identities already imply this
    std::vector<int> w;
    for (int x = 0; x < b.num_objects(); ++x)
        if (out[x]) w.push_back(x);
    return w;
}

std::string DwyerResult::obstruction_name() const {
    switch (obstruction) {
        case DwyerObstruction::None: return "None";
        case DwyerObstruction::NotFull: return "NotFull";
        case DwyerObstruction::NotASieve: return "NotASieve";
        case DwyerObstruction::NoTerminalObject:
            return "NoTerminalObjectAt(" +
                   (obstruction_obj >= 0 ? witness.ambient.obj_names.empty()
                                               ? std::to_string(obstruction_obj)
                                               : witness.ambient.obj_names[obstruction_obj]
                                         : std::string("?")) +
                   ")";
    }
    return "?";
}

DwyerResult is_dwyer(const FinCategory& b, const std::vector<int>& subset) {
    DwyerResult res;
    res.witness.ambient = b;
    res.witness.sieve_objs = subset;
    std::sort(res.witness.sieve_objs.begin(), res.witness.sieve_objs.end());
    res.witness.sieve_objs.erase(
        std::unique(res.witness.sieve_objs.begin(), res.witness.sieve_objs.end()),
        res.witness.sieve_objs.end());
    const auto& a_objs = res.witness.sieve_objs;

    auto sieve = is_sieve(b, a_objs);
    if (!sieve.ok) {
        res.obstruction = DwyerObstruction::NotASieve;
        res.obstruction_mor = sieve.refuting_mor;
        res.detail = "morphism " + b.mor_names[sieve.refuting_mor] + " enters the subset from outside";
        return res;
    }
    res.witness.sieve = sieve.witness;
    res.witness.cosieve_objs = minimal_cosieve(b, a_objs);

    std::vector<char> in_a(b.num_objects(), 0), in_w(b.num_objects(), 0);
    for (int x : a_objs) in_a[x] = 1;
    for (int x : res.witness.cosieve_objs) in_w[x] = 1;
    for (int x : res.witness.cosieve_objs)
        if (!in_a[x]) res.witness.u_objs.push_back(x);

    // choose R(w) and eps_w from terminal objects of the comma categories;
    // for w in A the pair (w, 1_w) is always terminal, which keeps RI = id
    res.witness.retract_obj.assign(b.num_objects(), -1);
    res.witness.counit.assign(b.num_objects(), -1);
    for (int w : res.witness.cosieve_objs) {
        if (in_a[w]) {
            res.witness.retract_obj[w] = w;
            res.witness.counit[w] = b.identity(w);
            continue;
        }
        auto comma = comma_over(b, a_objs, w);
        auto t = find_terminal(comma.cat);
        if (!t) {
            res.obstruction = DwyerObstruction::NoTerminalObject;
            res.obstruction_obj = w;
            res.detail = "the slice of the subset over " + b.obj_names[w] + " has no terminal object";
            return res;
        }
        res.witness.retract_obj[w] = comma.objs[*t].first;
        res.witness.counit[w] = comma.objs[*t].second;
    }

    // R on morphisms of W: the adjunct of g . eps_w under terminality of
    // (R(w'), eps_w'), i.e. the unique r with eps_w' . r = g . eps_w
    res.witness.retract_mor.assign(b.num_morphisms(), -1);
    for (int g = 0; g < b.num_morphisms(); ++g) {
        int w = b.src(g), w2 = b.tgt(g);
        if (!in_w[w] || !in_w[w2]) continue;
        int lhs = b.compose(g, res.witness.counit[w]);  // R(w) -> w2
        int found = -1;
        for (int r : b.hom(res.witness.retract_obj[w], res.witness.retract_obj[w2]))
            if (b.compose(res.witness.counit[w2], r) == lhs) {
                if (found >= 0) {
                    res.obstruction = DwyerObstruction::NoTerminalObject;
                    res.obstruction_obj = w2;
                    res.detail = "adjunct not unique (terminal object defect)";
                    return res;
                }
                found = r;
            }
        if (found < 0) {
            res.obstruction = DwyerObstruction::NoTerminalObject;
            res.obstruction_obj = w2;
            res.detail = "no adjunct for " + b.mor_names[g];
            return res;
        }
        res.witness.retract_mor[g] = found;
    }

    auto findings = check_witness(res.witness);
    if (!findings.empty()) {
        res.obstruction = DwyerObstruction::NoTerminalObject;
        res.detail = "witness equations failed: " + findings.front();
        return res;
    }
    res.ok = true;
    return res;
}

DwyerResult is_dwyer(const Functor& inclusion) {
    DwyerResult res;
    auto chk = is_functor(inclusion);
    if (!chk.ok) {
        res.obstruction = DwyerObstruction::NotFull;
        res.detail = "not a functor: " + chk.first_violation;
        return res;
    }
    if (!is_injective_on_objects(inclusion)) {
        res.obstruction = DwyerObstruction::NotFull;
        res.detail = "not injective on objects";
        return res;
    }
    if (!is_faithful(inclusion)) {
        res.obstruction = DwyerObstruction::NotFull;
        res.detail = "not faithful";
        return res;
    }
    if (!is_full(inclusion)) {
        res.obstruction = DwyerObstruction::NotFull;
        res.detail = "not full";
        return res;
    }
    return is_dwyer(inclusion.cod, inclusion.obj_map);
}

DwyerResult is_co_dwyer(const FinCategory& b, const std::vector<int>& subset) {
    return is_dwyer(opposite(b), subset);
}

std::vector<std::string> check_witness(const DwyerWitness& w) {
    std::vector<std::string> out;
    const FinCategory& b = w.ambient;
    std::vector<char> in_a(b.num_objects(), 0), in_w(b.num_objects(), 0);
    for (int x : w.sieve_objs) in_a[x] = 1;
    for (int x : w.cosieve_objs) in_w[x] = 1;

    // the classifier must be a functor to the walking arrow
    for (int m = 0; m < b.num_morphisms(); ++m)
        if (w.sieve.classifier[b.src(m)] == 1 && w.sieve.classifier[b.tgt(m)] == 0)
            out.push_back("classifier not functorial at " + b.mor_names[m]);

    // W is the minimal cosieve containing A
    if (minimal_cosieve(b, w.sieve_objs) != w.cosieve_objs)
        out.push_back("cosieve is not the minimal one");

    for (int x : w.cosieve_objs) {
        int rx = w.retract_obj[x];
        int eps = w.counit[x];
        if (rx < 0 || !in_a[rx]) {
            out.push_back("R(" + b.obj_names[x] + ") not in the sieve");
            continue;
        }
        if (eps < 0 || b.src(eps) != rx || b.tgt(eps) != x)
            out.push_back("counit at " + b.obj_names[x] + " has wrong endpoints");
        if (in_a[x]) {
            if (rx != x) out.push_back("unit not the identity at " + b.obj_names[x]);
            if (eps != b.identity(x))
                out.push_back("counit not the identity at sieve object " + b.obj_names[x]);
        }
        // (R(x), eps_x) terminal in the slice over x
        auto comma = comma_over(b, w.sieve_objs, x);
        int self = -1;
        for (size_t i = 0; i < comma.objs.size(); ++i)
            if (comma.objs[i] == std::make_pair(rx, eps)) self = static_cast<int>(i);
        if (self < 0) {
            out.push_back("counit pair missing from the slice over " + b.obj_names[x]);
            continue;
        }
        for (int i = 0; i < comma.cat.num_objects(); ++i)
            if (comma.cat.hom_size(i, self) != 1)
                out.push_back("(R, eps) not terminal in the slice over " + b.obj_names[x]);
    }
    // functoriality of R, counit naturality, triangle identity
    for (int g = 0; g < b.num_morphisms(); ++g) {
        if (!in_w[b.src(g)] || !in_w[b.tgt(g)]) continue;
        int rg = w.retract_mor[g];
        if (rg < 0) {
            out.push_back("R undefined on " + b.mor_names[g]);
            continue;
        }
        if (b.src(rg) != w.retract_obj[b.src(g)] || b.tgt(rg) != w.retract_obj[b.tgt(g)] ||
            !in_a[b.src(rg)] || !in_a[b.tgt(rg)])
            out.push_back("R(" + b.mor_names[g] + ") has wrong endpoints");
        else if (b.compose(w.counit[b.tgt(g)], rg) != b.compose(g, w.counit[b.src(g)]))
            out.push_back("counit not natural at " + b.mor_names[g]);
        if (in_a[b.src(g)] && in_a[b.tgt(g)] && rg != g)
            out.push_back("RI != id at " + b.mor_names[g]);
    }
    for (int x : w.cosieve_objs) {
        int eps = w.counit[x];
        if (eps >= 0 && w.retract_mor[eps] != b.identity(w.retract_obj[x]))
            out.push_back("triangle identity fails at " + b.obj_names[x]);
    }
    for (int g = 0; g < b.num_morphisms(); ++g)
        for (int f = 0; f < b.num_morphisms(); ++f) {
            if (!b.composable(g, f)) continue;
            if (!in_w[b.src(f)] || !in_w[b.tgt(f)] || !in_w[b.tgt(g)]) continue;
            if (w.retract_mor[b.compose(g, f)] !=
                b.compose(w.retract_mor[g], w.retract_mor[f]))
                out.push_back("R not functorial at (" + b.mor_names[g] + ", " + b.mor_names[f] + ")");
        }
    return out;
}

std::vector<std::string> check_pseudo_dwyer(const Functor& i, const Functor& j,
                                            const RetractDiagram& d) {
    std::vector<std::string> out;
    auto expect_functor = [&](const Functor& f, const char* nm) {
        auto c = is_functor(f);
        if (!c.ok) out.push_back(std::string(nm) + " is not a functor: " + c.first_violation);
    };
    expect_functor(i, "i");
    expect_functor(j, "j");
    expect_functor(d.sec_dom, "sec_dom");
    expect_functor(d.ret_dom, "ret_dom");
    expect_functor(d.sec_cod, "sec_cod");
    expect_functor(d.ret_cod, "ret_cod");
    if (!out.empty()) return out;
    auto jres = is_dwyer(j);
    if (!jres.ok) out.push_back("j is not a Dwyer map: " + jres.obstruction_name());
    if (!functor_equal(compose_functors(d.ret_dom, d.sec_dom), identity_functor(i.dom)))
        out.push_back("domain retraction is not a left inverse");
    if (!functor_equal(compose_functors(d.ret_cod, d.sec_cod), identity_functor(i.cod)))
        out.push_back("codomain retraction is not a left inverse");
    if (!functor_equal(compose_functors(j, d.sec_dom), compose_functors(d.sec_cod, i)))
        out.push_back("section square does not commute");
    if (!functor_equal(compose_functors(i, d.ret_dom), compose_functors(d.ret_cod, j)))
        out.push_back("retraction square does not commute");
    return out;
}

}  // namespace fincat
