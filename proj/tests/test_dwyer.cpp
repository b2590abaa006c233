#include <doctest.h>

#include <functional>

#include "fincat/dwyer.hpp"
#include "fincat/fixtures.hpp"
#include "fincat/spans.hpp"

using namespace fincat;

TEST_CASE("sieves in the walking arrow and the cospan") {
    FinCategory two = walking_arrow();
    CHECK(is_sieve(two, {0}).ok);
    auto bad = is_sieve(two, {1});
    CHECK(!bad.ok);
    CHECK(bad.refuting_mor == 2);  // the arrow enters from outside

    CHECK(is_sieve(cospan_cat(), {0, 2}).ok);
    CHECK(is_sieve(cospan_cat(), {1}).ok == false);
}

TEST_CASE("minimal cosieves") {
    CHECK(minimal_cosieve(walking_arrow(), {0}) == std::vector<int>{0, 1});
    CHECK(minimal_cosieve(cospan_cat(), {0, 2}) == std::vector<int>{0, 1, 2});
    auto two_points = coproduct({terminal_cat(), terminal_cat()}).cat;
    CHECK(minimal_cosieve(two_points, {0}) == std::vector<int>{0});
    // idempotent
    auto w = minimal_cosieve(sphere_poset_ambient(), sphere_poset_sieve());
    CHECK(minimal_cosieve(sphere_poset_ambient(), w) == w);
}

TEST_CASE("the vertex inclusion 0 is Dwyer with the expected witness") {
    auto res = is_dwyer(walking_arrow(), {0});
    REQUIRE(res.ok);
    CHECK(res.witness.cosieve_objs == std::vector<int>{0, 1});
    CHECK(res.witness.u_objs == std::vector<int>{1});
    CHECK(res.witness.retract_obj[1] == 0);
    CHECK(res.witness.counit[1] == 2);  // the arrow itself
    CHECK(check_witness(res.witness).empty());
}

TEST_CASE("the vertex inclusion 1 is refuted as a sieve") {
    auto res = is_dwyer(walking_arrow(), {1});
    REQUIRE(!res.ok);
    CHECK(res.obstruction == DwyerObstruction::NotASieve);
    CHECK(res.obstruction_mor == 2);
    CHECK(res.obstruction_name() == "NotASieve");
}

TEST_CASE("two points into the cospan lack a terminal slice at the middle") {
    auto res = is_dwyer(cospan_cat(), {0, 2});
    REQUIRE(!res.ok);
    CHECK(res.obstruction == DwyerObstruction::NoTerminalObject);
    CHECK(res.obstruction_obj == 1);
    CHECK(res.obstruction_name() == "NoTerminalObjectAt(m)");
}

TEST_CASE("a category with terminal object includes Dwyer-ly into its cone") {
    FinCategory a = poset_chain(2);
    FinCategory b = cone(a);
    auto res = is_dwyer(b, {0, 1, 2});
    REQUIRE(res.ok);
    CHECK(res.witness.retract_obj[3] == 2);  // new top retracts onto the old terminal

    // without a terminal object the cone inclusion fails
    FinCategory b2 = cone(coproduct({terminal_cat(), terminal_cat()}).cat);
    auto res2 = is_dwyer(b2, {0, 1});
    REQUIRE(!res2.ok);
    CHECK(res2.obstruction == DwyerObstruction::NoTerminalObject);
    CHECK(res2.obstruction_obj == 2);
}

TEST_CASE("the sphere counterexample sieve is not Dwyer") {
    auto res = is_dwyer(sphere_poset_ambient(), sphere_poset_sieve());
    REQUIRE(!res.ok);
    CHECK(res.obstruction == DwyerObstruction::NoTerminalObject);
    CHECK(res.obstruction_obj == 6);  // the top M
}

TEST_CASE("empty and full sieves are Dwyer") {
    for (const FinCategory& b : {walking_arrow(), cospan_cat(), monoid5()}) {
        auto empty = is_dwyer(b, {});
        CHECK(empty.ok);
        CHECK(empty.witness.cosieve_objs.empty());
        std::vector<int> all;
        for (int x = 0; x < b.num_objects(); ++x) all.push_back(x);
        CHECK(is_dwyer(b, all).ok);
    }
}

TEST_CASE("co-Dwyer flips the refutations") {
    CHECK(is_co_dwyer(walking_arrow(), {1}).ok);
    CHECK(!is_co_dwyer(walking_arrow(), {0}).ok);
    CHECK(is_co_dwyer(terminal_cat(), {0}).ok);
}

TEST_CASE("functor-level checks refuse non-inclusions") {
    auto res = is_dwyer(collapse_to_point(walking_arrow()));
    CHECK(!res.ok);
    CHECK(res.obstruction == DwyerObstruction::NotFull);

    auto fine = is_dwyer(pick_object(walking_arrow(), 0));
    CHECK(fine.ok);

    // full but not a sieve
    auto notsieve = is_dwyer(pick_object(walking_arrow(), 1));
    CHECK(!notsieve.ok);
    CHECK(notsieve.obstruction == DwyerObstruction::NotASieve);
}

TEST_CASE("is_dwyer agrees with exhaustive search for a retraction") {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        FinCategory b = random_category(rng, 5);
        std::vector<int> subset;
        for (int x = 0; x < b.num_objects(); ++x)
            if (rand_int(rng, 0, 1)) subset.push_back(x);
        if (!is_sieve(b, subset).ok) continue;
        auto res = is_dwyer(b, subset);

        // brute force: some functor R: W -> A with identity unit and natural
        // counit making every triangle commute
        auto w_objs = minimal_cosieve(b, subset);
        Subcategory wsub = full_subcategory(b, w_objs);
        Subcategory asub = full_subcategory(b, subset);
        std::vector<char> in_a(b.num_objects(), 0);
        for (int x : subset) in_a[x] = 1;
        bool brute = false;
        FunctorPins pins;
        pins.obj.assign(wsub.cat.num_objects(), -1);
        pins.mor.assign(wsub.cat.num_morphisms(), -1);
        for (int x = 0; x < wsub.cat.num_objects(); ++x)
            if (in_a[wsub.obj_to_ambient[x]])
                pins.obj[x] = asub.obj_from_ambient[wsub.obj_to_ambient[x]];
        for (int m = 0; m < wsub.cat.num_morphisms(); ++m) {
            int amb = wsub.mor_to_ambient[m];
            if (in_a[b.src(amb)] && in_a[b.tgt(amb)]) pins.mor[m] = asub.mor_from_ambient[amb];
        }
        for (const auto& r : enumerate_functors(wsub.cat, asub.cat, pins, 100000)) {
            // counit candidates: for each w one morphism R(w) -> w, natural
            std::vector<std::vector<int>> eps_cands;
            bool possible = true;
            for (int x = 0; x < wsub.cat.num_objects() && possible; ++x) {
                int amb = wsub.obj_to_ambient[x];
                std::vector<int> cands;
                for (int e : b.hom(asub.obj_to_ambient[r.obj_map[x]], amb))
                    if (!in_a[amb] || e == b.identity(amb)) cands.push_back(e);
                if (cands.empty()) possible = false;
                eps_cands.push_back(cands);
            }
            if (!possible) continue;
            std::vector<int> eps(wsub.cat.num_objects(), -1);
            std::function<bool(int)> pick = [&](int x) -> bool {
                if (x == wsub.cat.num_objects()) {
                    for (int m = 0; m < wsub.cat.num_morphisms(); ++m) {
                        int amb = wsub.mor_to_ambient[m];
                        int sx = wsub.obj_from_ambient[b.src(amb)];
                        int tx = wsub.obj_from_ambient[b.tgt(amb)];
                        int ramb = asub.mor_to_ambient[r.mor_map[m]];
                        if (b.compose(eps[tx], ramb) != b.compose(amb, eps[sx])) return false;
                    }
                    // triangle identity R(eps_w) = id, the other half of the adjunction
                    for (int w = 0; w < wsub.cat.num_objects(); ++w) {
                        int rimg = r.mor_map[wsub.mor_from_ambient[eps[w]]];
                        if (rimg != asub.cat.identity(r.obj_map[w])) return false;
                    }
                    return true;
                }
                for (int e : eps_cands[x]) {
                    eps[x] = e;
                    if (pick(x + 1)) return true;
                }
                return false;
            };
            if (pick(0)) {
                brute = true;
                break;
            }
        }
        CHECK(res.ok == brute);
    }
}

TEST_CASE("pseudo-Dwyer verification accepts the identity retract") {
    Functor i = pick_object(walking_arrow(), 0);
    RetractDiagram d;
    d.sec_dom = identity_functor(i.dom);
    d.ret_dom = identity_functor(i.dom);
    d.sec_cod = identity_functor(i.cod);
    d.ret_cod = identity_functor(i.cod);
    CHECK(check_pseudo_dwyer(i, i, d).empty());

    // a broken square is reported
    RetractDiagram bad = d;
    bad.sec_cod = pick_object(walking_arrow(), 1);
    bad.sec_cod.dom = walking_arrow();
    bad.sec_cod.obj_map = {1, 1};
    bad.sec_cod.mor_map = {1, 1, 1};
    CHECK(!check_pseudo_dwyer(i, i, bad).empty());
}
