#include <doctest.h>

#include "fincat/fixtures.hpp"
#include "fincat/present.hpp"
#include "fincat/pushout.hpp"
#include "fincat/spans.hpp"

using namespace fincat;

namespace {

PresentedCategory iso_presentation() {
    PresentedCategory p;
    p.name = "iso";
    p.obj_names = {"a", "b"};
    p.gens.push_back({"f", 0, 1, -1, -1});
    p.gens.push_back({"g", 1, 0, -1, -1});
    p.rels.push_back({PresPath{0, {0, 1}}, PresPath{0, {}}});  // g.f = 1_a
    p.rels.push_back({PresPath{1, {1, 0}}, PresPath{1, {}}});  // f.g = 1_b
    return p;
}

PresentedCategory monoid5_presentation() {
    // generators e, x11, x12, x21, x22; e is the unit, x_ij . x_kl = x_il
    PresentedCategory p;
    p.name = "m5";
    p.obj_names = {"o"};
    p.gens.push_back({"e", 0, 0, -1, -1});
    int x[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            x[i][j] = static_cast<int>(p.gens.size());
            p.gens.push_back({"x" + std::to_string(i + 1) + std::to_string(j + 1), 0, 0, -1, -1});
        }
    p.rels.push_back({PresPath{0, {0}}, PresPath{0, {}}});  // e = 1
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    p.rels.push_back({PresPath{0, {x[k][l], x[i][j]}}, PresPath{0, {x[i][l]}}});
    return p;
}

}  // namespace

TEST_CASE("saturate: free-living isomorphism closes at bound 3") {
    auto sat = saturate(iso_presentation(), {3, 100000});
    REQUIRE(sat.finite());
    CHECK(sat.cat.num_objects() == 2);
    CHECK(sat.cat.num_morphisms() == 4);
    CHECK(table_equal(sat.cat, walking_iso()));
}

TEST_CASE("saturate: the five-element monoid") {
    auto sat = saturate(monoid5_presentation(), {3, 100000});
    REQUIRE(sat.finite());
    CHECK(sat.cat.num_objects() == 1);
    CHECK(sat.cat.num_morphisms() == 5);
    CHECK(iso_check(sat.cat, monoid5()).isomorphic);
}

TEST_CASE("saturate: small cyclic monoids against hand-computed sizes") {
    // <a | a^3 = a> has elements {1, a, a^2}; <a | a^4 = a^2> has four
    PresentedCategory p;
    p.obj_names = {"o"};
    p.gens.push_back({"t", 0, 0, -1, -1});
    p.rels.push_back({PresPath{0, {0, 0, 0}}, PresPath{0, {0}}});
    auto s = saturate(p, {6, 100000});
    REQUIRE(s.finite());
    CHECK(s.cat.num_morphisms() == 3);
    // a^2 . a^2 = a^2 in this monoid
    int a2 = s.eval_word({0, 0}, 0);
    CHECK(s.cat.compose(a2, a2) == a2);

    PresentedCategory q;
    q.obj_names = {"o"};
    q.gens.push_back({"t", 0, 0, -1, -1});
    q.rels.push_back({PresPath{0, {0, 0, 0, 0}}, PresPath{0, {0, 0}}});
    auto sq = saturate(q, {6, 100000});
    REQUIRE(sq.finite());
    CHECK(sq.cat.num_morphisms() == 4);
    int b2 = sq.eval_word({0, 0}, 0);
    int b3 = sq.eval_word({0, 0, 0}, 0);
    CHECK(sq.cat.compose(b3, b3) == b2);  // a^6 = a^4 = a^2
}

TEST_CASE("saturate: the free monoid stays inconclusive") {
    PresentedCategory p;
    p.obj_names = {"o"};
    p.gens.push_back({"t", 0, 0, -1, -1});
    auto sat = saturate(p, {6, 100000});
    CHECK(!sat.finite());
}

TEST_CASE("saturate is monotone in the bound on closing examples") {
    // forced bounds, no deepening: Finite at L must stay Finite at L+1 with
    // an isomorphic quotient
    for (const auto& p : {iso_presentation(), monoid5_presentation()}) {
        for (int bound = 3; bound <= 5; ++bound) {
            auto lo = saturate(p, {bound, 100000, false});
            auto hi = saturate(p, {bound + 1, 100000, false});
            REQUIRE(lo.finite());
            REQUIRE(hi.finite());
            CHECK(iso_check(lo.cat, hi.cat).isomorphic);
        }
    }
}

TEST_CASE("deepening and forced bounds produce isomorphic quotients") {
    Rng rng(13);
    for (int trial = 0; trial < 8; ++trial) {
        RandomSpan span = random_dwyer_span(rng, 4);
        auto pp = pushout_presentation(span.inclusion, span.F);
        auto deep = saturate(pp.pres, {5, 100000});
        SaturationResult forced;
        try {
            forced = saturate(pp.pres, {5, 100000, false});
        } catch (const guard_error&) {
            continue;
        }
        if (deep.finite() && forced.finite()) CHECK(iso_check(deep.cat, forced.cat).isomorphic);
    }
}

TEST_CASE("presentation_of round-trips through saturate") {
    for (const FinCategory& c :
         {terminal_cat(), walking_arrow(), walking_iso(), poset_chain(2), monoid5(), cospan_cat()}) {
        auto sat = saturate(presentation_of(c), {2, 100000});
        REQUIRE(sat.finite());
        CHECK(iso_check(sat.cat, c).isomorphic);
    }
}

TEST_CASE("presentation_of on the walking arrow needs no relations") {
    auto p = presentation_of(walking_arrow());
    CHECK(p.gens.size() == 1);
    CHECK(p.rels.empty());
    CHECK(presentation_of(terminal_cat()).gens.empty());
}

TEST_CASE("pushout presentation along the identity recovers the other leg") {
    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        FinCategory a = random_category(rng, 4);
        FinCategory c = random_category(rng, 4);
        if (c.num_objects() == 0 && a.num_objects() > 0) continue;
        Functor f = random_functor(rng, a, c);
        auto pp = pushout_presentation(identity_functor(a), f);
        auto sat = saturate(pp.pres, {4, 100000});
        REQUIRE(sat.finite());
        CHECK(iso_check(sat.cat, c).isomorphic);
    }
}

TEST_CASE("glueing two arrows end to start yields the 3-chain") {
    Functor i = pick_object(walking_arrow(), 1, "end");
    Functor f = pick_object(walking_arrow(), 0, "start");
    auto pp = pushout_presentation(i, f);
    auto sat = saturate(pp.pres, {3, 100000});
    REQUIRE(sat.finite());
    CHECK(sat.cat.num_objects() == 3);
    CHECK(sat.cat.num_morphisms() == 6);
    CHECK(iso_check(sat.cat, poset_chain(2)).isomorphic);
    auto cocone = oracle_cocone(pp, sat, walking_arrow(), walking_arrow());
    CHECK(is_functor(cocone.from_B).ok);
    CHECK(is_functor(cocone.from_C).ok);
}

TEST_CASE("monoid span pushout collapses to the point") {
    // M <- 5 copies of the arrow -> 5 copies of the iso
    FinCategory m5 = monoid5();
    std::vector<int> all = {0, 1, 2, 3, 4};
    auto loc = localize(m5, all, {6, 100000});
    REQUIRE(loc.sat.finite());
    CHECK(loc.sat.cat.num_objects() == 1);
    CHECK(loc.sat.cat.num_morphisms() == 1);
    CHECK(is_functor(loc.quotient).ok);
}

TEST_CASE("localize the walking arrow at its arrow") {
    auto loc = localize(walking_arrow(), {2}, {6, 100000});
    REQUIRE(loc.sat.finite());
    CHECK(iso_check(loc.sat.cat, walking_iso()).isomorphic);
}

TEST_CASE("localize at nothing changes nothing") {
    for (const FinCategory& c : {walking_arrow(), poset_chain(2), monoid5()}) {
        auto loc = localize(c, {}, {4, 100000});
        REQUIRE(loc.sat.finite());
        CHECK(iso_check(loc.sat.cat, c).isomorphic);
    }
}

TEST_CASE("oracle pushouts satisfy the universal property against random cocones") {
    Rng rng(17);
    int checked = 0;
    for (int trial = 0; trial < 40 && checked < 20; ++trial) {
        RandomSpan span = random_dwyer_span(rng, 4);
        auto pp = pushout_presentation(span.inclusion, span.F);
        SaturationResult sat;
        try {
            sat = saturate(pp.pres, {5, 100000});
        } catch (const guard_error&) {
            continue;
        }
        if (!sat.finite()) continue;
        FinCategory e = random_category(rng, 3);
        if (e.num_objects() == 0) continue;
        // every cocone (H1, H2) with H1 I = H2 F admits exactly one mediating functor
        auto h1s = enumerate_functors(span.wit.ambient, e, {}, 100000);
        for (const auto& h1 : h1s) {
            Functor h1i = compose_functors(h1, span.inclusion);
            FunctorPins pins;
            pins.obj.assign(span.F.cod.num_objects(), -1);
            pins.mor.assign(span.F.cod.num_morphisms(), -1);
            // H2 F = H1 I pins H2 on the image of F
            bool consistent = true;
            for (int x = 0; x < span.F.dom.num_objects() && consistent; ++x) {
                int& slot = pins.obj[span.F.obj_map[x]];
                if (slot >= 0 && slot != h1i.obj_map[x]) consistent = false;
                slot = h1i.obj_map[x];
            }
            for (int m = 0; m < span.F.dom.num_morphisms() && consistent; ++m) {
                int& slot = pins.mor[span.F.mor_map[m]];
                if (slot >= 0 && slot != h1i.mor_map[m]) consistent = false;
                slot = h1i.mor_map[m];
            }
            if (!consistent) continue;
            for (const auto& h2 : enumerate_functors(span.F.cod, e, pins, 100000)) {
                auto med = mediating_functor(pp, sat, h1, h2);
                REQUIRE(med.has_value());
                auto cocone = oracle_cocone(pp, sat, span.wit.ambient, span.F.cod);
                CHECK(functor_equal(compose_functors(*med, cocone.from_B), h1));
                CHECK(functor_equal(compose_functors(*med, cocone.from_C), h2));
                // uniqueness: any functor commuting with the cocones equals med
                FunctorPins mpins;
                mpins.obj.assign(sat.cat.num_objects(), -1);
                mpins.mor.assign(sat.cat.num_morphisms(), -1);
                for (int x = 0; x < span.wit.ambient.num_objects(); ++x)
                    mpins.obj[cocone.from_B.obj_map[x]] = h1.obj_map[x];
                for (int m = 0; m < span.wit.ambient.num_morphisms(); ++m)
                    mpins.mor[cocone.from_B.mor_map[m]] = h1.mor_map[m];
                for (int x = 0; x < span.F.cod.num_objects(); ++x)
                    mpins.obj[cocone.from_C.obj_map[x]] = h2.obj_map[x];
                for (int m = 0; m < span.F.cod.num_morphisms(); ++m)
                    mpins.mor[cocone.from_C.mor_map[m]] = h2.mor_map[m];
                size_t count = 0;
                for (const auto& cand : enumerate_functors(sat.cat, e, mpins, 100000)) {
                    (void)cand;
                    ++count;
                }
                CHECK(count == 1);
                ++checked;
                break;  // one cocone per H1 keeps the run fast
            }
            if (checked >= 20) break;
        }
    }
    CHECK(checked >= 20);
}
