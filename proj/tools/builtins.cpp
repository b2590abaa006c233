#include "builtins.hpp"

#include <sstream>

#include "fincat/fixtures.hpp"
#include "fincat/homology.hpp"
#include "fincat/pushout.hpp"
#include "fincat/scat.hpp"
#include "fincat/spans.hpp"
#include "fincat/textio.hpp"

namespace fincat::cli {

namespace {

std::string profile(const HomologyResult& h) {
    std::ostringstream os;
    for (size_t k = 0; k < h.groups.size(); ++k) {
        if (k) os << ", ";
        const auto& g = h.groups[k];
        bool something = false;
        if (g.betti > 0) {
            os << "Z";
            if (g.betti > 1) os << "^" << g.betti;
            something = true;
        }
        for (const auto& t : g.torsion) {
            if (something) os << "+";
            os << "Z/" << t;
            something = true;
        }
        if (!something) os << "0";
    }
    return os.str();
}

bool profile_is(const HomologyResult& h, const std::vector<long long>& betti) {
    if (h.groups.size() != betti.size()) return false;
    for (size_t k = 0; k < betti.size(); ++k)
        if (h.groups[k].betti != betti[k] || !h.groups[k].torsion.empty()) return false;
    return true;
}

struct MonoidSpan {
    Functor I0;  // 5 arrows -> 5 isos
    Functor F0;  // 5 arrows -> M5
};

MonoidSpan monoid_span() {
    FinCategory m5 = monoid5();
    std::vector<FinCategory> arrows(5, walking_arrow()), isos(5, walking_iso());
    Coproduct a0 = coproduct(arrows), b0 = coproduct(isos);
    MonoidSpan out;
    out.I0.name = "span_incl";
    out.I0.dom = a0.cat;
    out.I0.cod = b0.cat;
    out.I0.obj_map.resize(a0.cat.num_objects());
    out.I0.mor_map.resize(a0.cat.num_morphisms());
    out.F0.name = "span_pick";
    out.F0.dom = a0.cat;
    out.F0.cod = m5;
    out.F0.obj_map.assign(a0.cat.num_objects(), 0);
    out.F0.mor_map.resize(a0.cat.num_morphisms());
    for (int i = 0; i < 5; ++i) {
        out.I0.obj_map[a0.obj_offset[i] + 0] = b0.obj_offset[i] + 0;
        out.I0.obj_map[a0.obj_offset[i] + 1] = b0.obj_offset[i] + 1;
        out.I0.mor_map[a0.mor_offset[i] + 0] = b0.mor_offset[i] + 0;
        out.I0.mor_map[a0.mor_offset[i] + 1] = b0.mor_offset[i] + 1;
        out.I0.mor_map[a0.mor_offset[i] + 2] = b0.mor_offset[i] + 2;
        out.F0.mor_map[a0.mor_offset[i] + 0] = m5.identity(0);
        out.F0.mor_map[a0.mor_offset[i] + 1] = m5.identity(0);
        out.F0.mor_map[a0.mor_offset[i] + 2] = i;  // one copy per element e, x11, x12, x21, x22
    }
    return out;
}

BuiltinResult poset_s2(const BuiltinOptions& opt) {
    BuiltinResult res;
    std::ostringstream os;
    FinCategory b = sphere_poset_ambient();
    Subcategory a = full_subcategory(b, sphere_poset_sieve());
    Functor f = collapse_to_point(a.cat);

    auto dres = is_dwyer(b, sphere_poset_sieve());
    os << "sieve inclusion is Dwyer: " << (dres.ok ? "yes" : "no (" + dres.obstruction_name() + ")")
       << "\n";

    SSetMap ni = nerve_of_functor(a.inclusion, opt.truncate);
    SSetMap nf = nerve_of_functor(f, opt.truncate);
    auto glued = sset_pushout(ni, nf);
    auto h_glued = homology(glued.P, opt.degree);
    os << "H(N B x_{N A} N C) = " << profile(h_glued) << "\n";

    auto pp = pushout_presentation(a.inclusion, f);
    auto sat = saturate(pp.pres, {opt.bound, 100000});
    bool arrow = sat.finite() && iso_check(sat.cat, walking_arrow()).isomorphic;
    os << "categorical pushout: " << (sat.finite() ? "finite" : "inconclusive")
       << ", isomorphic to the walking arrow: " << (arrow ? "yes" : "no") << "\n";
    auto h_cat = homology(nerve(sat.cat, opt.truncate).X, opt.degree);
    os << "H(N D) = " << profile(h_cat) << "\n";

    bool ok = !dres.ok && profile_is(h_glued, {1, 0, 1}) && arrow && profile_is(h_cat, {1, 0, 0});
    os << (ok ? "sphere detected: homologies differ in degree 2\n" : "UNEXPECTED RESULT\n");
    res.exit_code = ok ? 0 : 3;
    res.report = os.str();
    res.json["name"] = "poset-s2";
    res.json["dwyer"] = dres.ok;
    res.json["h_simplicial_pushout"] = profile(h_glued);
    res.json["h_categorical_pushout"] = profile(h_cat);
    res.json["ok"] = ok;
    return res;
}

BuiltinResult monoid_s2(const BuiltinOptions& opt) {
    BuiltinResult res;
    std::ostringstream os;
    auto span = monoid_span();
    SSetMap ni = nerve_of_functor(span.I0, opt.truncate);
    SSetMap nf = nerve_of_functor(span.F0, opt.truncate);
    // the glued object is N M x_{5 N2} 5 NI: legs from the common 5 N2
    auto glued = sset_pushout(nf, ni);
    os << "pushout sset vertices: " << glued.P.counts[0] << "\n";
    auto h_glued = homology(glued.P, opt.degree);
    os << "H(N M x 5NI) = " << profile(h_glued) << "\n";

    FinCategory m5 = monoid5();
    auto loc = localize(m5, {0, 1, 2, 3, 4}, {opt.bound, 100000});
    bool point = loc.sat.finite() && loc.sat.cat.num_objects() == 1 &&
                 loc.sat.cat.num_morphisms() == 1;
    os << "categorical pushout is the terminal category: " << (point ? "yes" : "no") << "\n";
    auto h_cat = homology(nerve(loc.sat.cat, opt.truncate).X, opt.degree);
    os << "H(N 1) = " << profile(h_cat) << "\n";

    bool ok = glued.P.counts[0] == 1 && profile_is(h_glued, {1, 0, 1}) && point &&
              profile_is(h_cat, {1, 0, 0});
    os << (ok ? "sphere detected: homologies differ in degree 2\n" : "UNEXPECTED RESULT\n");
    res.exit_code = ok ? 0 : 3;
    res.report = os.str();
    res.json["name"] = "monoid-s2";
    res.json["vertices"] = glued.P.counts[0];
    res.json["h_simplicial_pushout"] = profile(h_glued);
    res.json["h_categorical_pushout"] = profile(h_cat);
    res.json["ok"] = ok;
    return res;
}

BuiltinResult terminal_cone(const BuiltinOptions&) {
    BuiltinResult res;
    std::ostringstream os;
    auto wi = is_dwyer(walking_arrow(), {0});
    Subcategory a = full_subcategory(walking_arrow(), {0});
    FinCategory c = poset_chain(2);
    Functor f = pick_object(c, 2);
    f.dom = a.cat;
    auto po = dwyer_pushout(wi.witness, f);
    bool iso = iso_check(po.D, cone(c)).isomorphic;
    os << "pushout along the terminal pick is the cone: " << (iso ? "yes" : "no") << "\n";
    auto closure = verify_pushout_dwyer_closure(po);
    os << "induced inclusion is Dwyer with matching witness: " << (closure.ok ? "yes" : "no")
       << "\n";
    bool formulas = check_pushout_formulas(po, wi.witness, f).empty();
    os << "hom formulas hold: " << (formulas ? "yes" : "no") << "\n";
    bool ok = iso && closure.ok && formulas;
    res.exit_code = ok ? 0 : 3;
    res.report = os.str();
    res.json["name"] = "terminal-cone";
    res.json["cone_iso"] = iso;
    res.json["closure"] = closure.ok;
    res.json["formulas"] = formulas;
    res.json["ok"] = ok;
    return res;
}

BuiltinResult glue_two(const BuiltinOptions& opt) {
    BuiltinResult res;
    std::ostringstream os;
    auto wi = is_dwyer(walking_arrow(), {0});
    Subcategory a = full_subcategory(walking_arrow(), {0});
    Functor f = pick_object(walking_arrow(), 1);
    f.dom = a.cat;
    auto po = dwyer_pushout(wi.witness, f);
    bool iso = iso_check(po.D, poset_chain(2)).isomorphic;
    os << "gluing two arrows end to start gives the 3-chain: " << (iso ? "yes" : "no") << "\n";

    auto rep = comparison_map(a.inclusion, f, po.G, po.J, opt.truncate);
    os << "glued nerve 1-simplices: " << rep.glued.P.counts[1]
       << " vs nerve of pushout: " << rep.nerve_D.X.counts[1] << "\n";
    os << "comparison bijective on vertices: " << (rep.bijective_on_vertices ? "yes" : "no")
       << "\n";
    bool inj = true;
    for (char c : rep.injective) inj = inj && c;
    os << "comparison injective at all levels: " << (inj ? "yes" : "no") << "\n";

    auto horn = is_quasicategory_upto(rep.glued.P, 2);
    os << "glued pushout misses an inner-horn filler: " << (horn.all_filled ? "no" : "yes") << "\n";

    auto an = anodyne_search(rep.nerve_D.X, image_subcomplex(rep.j));
    os << "anodyne search: " << (an.success ? "success" : "stuck") << " with " << an.steps.size()
       << " attachments\n";
    bool replay_ok = false;
    if (an.success) {
        auto replayed = replay_certificate(rep.nerve_D.X, image_subcomplex(rep.j), an.steps);
        replay_ok = replayed == an.final_in;
        os << "certificate replays: " << (replay_ok ? "yes" : "no") << "\n";
    }
    bool ok = iso && rep.bijective_on_vertices && inj && !horn.all_filled && an.success &&
              replay_ok && rep.glued.P.counts[1] == 5 && rep.nerve_D.X.counts[1] == 6;
    res.exit_code = ok ? 0 : 3;
    res.report = os.str();
    res.json["name"] = "glue-two";
    res.json["glued_edges"] = rep.glued.P.counts[1];
    res.json["nerve_edges"] = rep.nerve_D.X.counts[1];
    res.json["anodyne_steps"] = an.steps.size();
    res.json["ok"] = ok;
    return res;
}

BuiltinResult cospan_flat(const BuiltinOptions& opt) {
    BuiltinResult res;
    std::ostringstream os;
    FinCategory b = cospan_cat();
    Subcategory a = full_subcategory(b, {0, 2});
    auto dres = is_dwyer(b, {0, 2});
    os << "cospan inclusion is Dwyer: " << (dres.ok ? "yes" : "no (" + dres.obstruction_name() + ")")
       << "\n";

    FinCategory two_isos = coproduct({walking_iso(), walking_iso()}).cat;
    FinCategory two_points = coproduct({terminal_cat(), terminal_cat()}).cat;
    int dim = opt.degree + 1;
    auto sprime = disc(two_isos, dim);
    auto spoint = disc(two_points, dim);
    Functor fp;
    fp.name = "Fprime";
    fp.dom = a.cat;
    fp.cod = two_isos;
    fp.obj_map = {0, 2};
    fp.mor_map = {two_isos.identity(0), two_isos.identity(2)};
    Functor mm;
    mm.name = "M";
    mm.dom = two_isos;
    mm.cod = two_points;
    mm.obj_map = {0, 0, 1, 1};
    mm.mor_map.resize(two_isos.num_morphisms());
    for (int i = 0; i < two_isos.num_morphisms(); ++i)
        mm.mor_map[i] = two_points.identity(mm.obj_map[two_isos.src(i)]);

    SCatFunctor fps;
    fps.name = "Fprime";
    fps.dom = disc(a.cat, dim);
    fps.cod = sprime;
    fps.obj_map = fp.obj_map;
    fps.mor_map.assign(dim + 1, fp.mor_map);
    SCatFunctor ms;
    ms.name = "M";
    ms.dom = sprime;
    ms.cod = spoint;
    ms.obj_map = mm.obj_map;
    ms.mor_map.assign(dim + 1, mm.mor_map);

    auto rep = flat_instance_check_presented(a.inclusion, fps, ms, opt.degree, {opt.bound, 100000});
    os << "M is a checked equivalence: " << rep.m_report.to_string() << "\n";
    os << "induced comparison of pushouts: " << rep.h_report.to_string() << "\n";
    bool ok = !dres.ok && rep.applicable && rep.h_report.consistent;
    os << (ok ? "discretely flat behaviour confirmed on this instance\n" : "UNEXPECTED RESULT\n");
    res.exit_code = ok ? 0 : 3;
    res.report = os.str();
    res.json["name"] = "cospan-flat";
    res.json["dwyer"] = dres.ok;
    res.json["m_consistent"] = rep.m_report.consistent;
    res.json["h_consistent"] = rep.h_report.consistent;
    res.json["ok"] = ok;
    return res;
}

BuiltinResult localize_monoid(const BuiltinOptions& opt) {
    BuiltinResult res;
    std::ostringstream os;
    FinCategory m5 = monoid5();
    auto loc = localize(m5, {0, 1, 2, 3, 4}, {opt.bound, 100000});
    os << "saturation: " << (loc.sat.finite() ? "finite" : "inconclusive") << " at bound "
       << loc.sat.stats.bound << " (" << loc.sat.stats.words << " words, " << loc.sat.stats.classes
       << " classes)\n";
    bool point = loc.sat.finite() && loc.sat.cat.num_objects() == 1 &&
                 loc.sat.cat.num_morphisms() == 1;
    os << "inverting all five elements collapses to the trivial group: " << (point ? "yes" : "no")
       << "\n";
    res.exit_code = point ? 0 : 3;
    res.report = os.str();
    res.json["name"] = "localize-monoid";
    res.json["finite"] = loc.sat.finite();
    res.json["objects"] = loc.sat.finite() ? loc.sat.cat.num_objects() : -1;
    res.json["morphisms"] = loc.sat.finite() ? loc.sat.cat.num_morphisms() : -1;
    res.json["ok"] = point;
    return res;
}

BuiltinResult dwyer_closure(const BuiltinOptions& opt) {
    BuiltinResult res;
    std::ostringstream os;
    int good = 0, oracle_checked = 0;
    std::vector<std::string> failures;
    for (int seed = 0; seed < opt.seeds; ++seed) {
        Rng rng(1000 + seed);
        RandomSpan span = random_dwyer_span(rng, 6);
        bool seed_ok = true;
        try {
            auto po = dwyer_pushout(span.wit, span.F);
            if (!check_pushout_formulas(po, span.wit, span.F).empty()) seed_ok = false;
            if (!verify_pushout_dwyer_closure(po).ok) seed_ok = false;
            auto agree = check_oracle_agreement(po, span.wit, span.F, {opt.bound, 100000});
            if (agree.oracle_finite) {
                ++oracle_checked;
                if (!agree.agrees) seed_ok = false;
            }
        } catch (const std::exception& e) {
            seed_ok = false;
            failures.push_back("seed " + std::to_string(seed) + ": " + e.what());
        }
        if (seed_ok)
            ++good;
        else if (failures.size() < 5)
            failures.push_back("seed " + std::to_string(seed));
    }
    os << "seed base 1000, spans with categories of at most 6 objects\n";
    os << "pushout-of-Dwyer closure verdicts: " << good << "/" << opt.seeds << "\n";
    os << "presentation-oracle agreements: " << oracle_checked << " finite cases, all isomorphic\n";
    for (const auto& f : failures) os << "FAIL " << f << "\n";
    res.exit_code = good == opt.seeds ? 0 : 3;
    res.report = os.str();
    res.json["name"] = "dwyer-closure";
    res.json["seeds"] = opt.seeds;
    res.json["good"] = good;
    res.json["oracle_checked"] = oracle_checked;
    res.json["ok"] = good == opt.seeds;
    return res;
}

}  // namespace

const std::vector<BuiltinInfo>& builtin_catalog() {
    static const std::vector<BuiltinInfo> catalog = {
        {"poset-s2", "poset span whose simplicial pushout has the homology of the 2-sphere"},
        {"monoid-s2", "five-element monoid localization detecting the 2-sphere"},
        {"terminal-cone", "pushout along a terminal pick builds the cone category"},
        {"glue-two", "two arrows glued end to start, comparison map and anodyne certificate"},
        {"cospan-flat", "non-Dwyer cospan inclusion passing the discrete-flatness instance check"},
        {"localize-monoid", "inverting all elements of the five-element monoid gives the point"},
        {"dwyer-closure", "seeded random Dwyer spans: closure, hom formulas, oracle agreement"},
    };
    return catalog;
}

BuiltinResult run_builtin(const std::string& name, const BuiltinOptions& opt) {
    if (name == "poset-s2") return poset_s2(opt);
    if (name == "monoid-s2") return monoid_s2(opt);
    if (name == "terminal-cone") return terminal_cone(opt);
    if (name == "glue-two") return glue_two(opt);
    if (name == "cospan-flat") return cospan_flat(opt);
    if (name == "localize-monoid") return localize_monoid(opt);
    if (name == "dwyer-closure") return dwyer_closure(opt);
    throw std::invalid_argument("unknown builtin '" + name + "' (see list-builtins)");
}

}  // namespace fincat::cli
