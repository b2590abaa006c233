#include <doctest.h>

#include "fincat/category.hpp"
#include "fincat/fixtures.hpp"
#include "fincat/spans.hpp"

using namespace fincat;

TEST_CASE("validate accepts the small fixtures") {
    CHECK(validate(terminal_cat()).empty());
    CHECK(validate(walking_arrow()).empty());
    CHECK(validate(walking_iso()).empty());
    CHECK(validate(poset_chain(2)).empty());
    CHECK(validate(cospan_cat()).empty());
    CHECK(validate(span_cat()).empty());
    CHECK(validate(monoid5()).empty());
    CHECK(validate(discrete_cat(0)).empty());
    CHECK(validate(sphere_poset_ambient()).empty());
    CHECK(validate(free_on_dag(3, {{0, 1}, {0, 1}, {1, 2}})).empty());
}

TEST_CASE("validate reports a broken unit law with a witness") {
    FinCategory c = walking_arrow();
    // redefine a . 1_d0 to 1_d0 (ill-typed unit violation)
    c.comp[static_cast<size_t>(2) * 3 + 0] = 0;
    auto findings = validate(c);
    REQUIRE(!findings.empty());
    bool unit = false;
    for (const auto& f : findings)
        if (f.find("unit") != std::string::npos || f.find("endpoint") != std::string::npos)
            unit = true;
    CHECK(unit);
}

TEST_CASE("random mutations of valid tables are detected") {
    Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        FinCategory c = random_category(rng, 4);
        if (c.num_morphisms() < 2) continue;
        FinCategory broken = c;
        // smash one defined composition entry to a different morphism
        int g = rand_int(rng, 0, c.num_morphisms() - 1);
        int f = rand_int(rng, 0, c.num_morphisms() - 1);
        if (!c.composable(g, f)) continue;
        int h = c.compose(g, f);
        int other = (h + 1) % c.num_morphisms();
        broken.comp[static_cast<size_t>(g) * c.num_morphisms() + f] = other;
        CHECK(!validate(broken).empty());
    }
}

TEST_CASE("is_functor on identity and vertex inclusions") {
    CHECK(is_functor(identity_functor(walking_arrow())).ok);
    CHECK(is_functor(pick_object(walking_arrow(), 0)).ok);

    // send the arrow of 2 to an identity while keeping objects apart
    Functor bad;
    bad.dom = walking_arrow();
    bad.cod = walking_arrow();
    bad.obj_map = {0, 1};
    bad.mor_map = {0, 1, 0};
    auto chk = is_functor(bad);
    CHECK(!chk.ok);
    CHECK(chk.first_violation.find("target") != std::string::npos);
}

TEST_CASE("opposite is an involution and flips the arrow") {
    for (const FinCategory& c : {terminal_cat(), walking_arrow(), walking_iso(), poset_chain(2),
                                 cospan_cat(), monoid5()}) {
        FinCategory op = opposite(c);
        CHECK(validate(op).empty());
        CHECK(table_equal(opposite(op), c));
    }
    FinCategory op2 = opposite(walking_arrow());
    CHECK(op2.src(2) == 1);
    CHECK(op2.tgt(2) == 0);
    CHECK(table_equal(opposite(cospan_cat()), span_cat()));
}

TEST_CASE("opposite involution on random categories") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        FinCategory c = random_category(rng, 5);
        CHECK(table_equal(opposite(opposite(c)), c));
    }
}

TEST_CASE("coproduct shapes") {
    auto two_points = coproduct({terminal_cat(), terminal_cat()});
    CHECK(two_points.cat.num_objects() == 2);
    CHECK(two_points.cat.num_morphisms() == 2);
    CHECK(validate(two_points.cat).empty());

    std::vector<FinCategory> five(5, walking_arrow());
    auto c5 = coproduct(five);
    CHECK(c5.cat.num_objects() == 10);
    int nonid = 0;
    for (int m = 0; m < c5.cat.num_morphisms(); ++m)
        if (!c5.cat.is_identity(m)) ++nonid;
    CHECK(nonid == 5);
    for (const auto& inj : c5.injections) CHECK(is_functor(inj).ok);

    CHECK(coproduct({}).cat.num_objects() == 0);
}

TEST_CASE("comma categories over the walking arrow and the cospan") {
    FinCategory two = walking_arrow();
    auto c1 = comma_over(two, {0}, 1);
    REQUIRE(c1.objs.size() == 1);  // (0, a)
    CHECK(c1.objs[0] == std::make_pair(0, 2));
    CHECK(c1.cat.num_morphisms() == 1);
    CHECK(find_terminal(c1.cat).has_value());

    auto c2 = comma_over(two, {0}, 0);
    REQUIRE(c2.objs.size() == 1);  // (0, 1_0)
    CHECK(c2.objs[0] == std::make_pair(0, 0));

    FinCategory cs = cospan_cat();
    auto c3 = comma_over(cs, {0, 2}, 1);
    CHECK(c3.objs.size() == 2);
    CHECK(c3.cat.num_morphisms() == 2);  // identities only
    CHECK(!find_terminal(c3.cat).has_value());
}

TEST_CASE("comma terminality matches the brute-force criterion") {
    Rng rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        FinCategory c = random_category(rng, 4);
        if (c.num_objects() == 0) continue;
        std::vector<int> a;
        for (int x = 0; x < c.num_objects(); ++x)
            if (rand_int(rng, 0, 1)) a.push_back(x);
        int w = rand_int(rng, 0, c.num_objects() - 1);
        auto comma = comma_over(c, a, w);
        // (a0, f) is terminal iff every (a1, g) has exactly one mediating arrow
        bool brute = false;
        for (size_t i = 0; i < comma.objs.size() && !brute; ++i) {
            bool all = true;
            for (size_t j = 0; j < comma.objs.size() && all; ++j) {
                int count = 0;
                auto [a1, g1] = comma.objs[j];
                auto [a0, f0] = comma.objs[i];
                for (int g : c.hom(a1, a0))
                    if (c.compose(f0, g) == g1) ++count;
                if (count != 1) all = false;
            }
            if (all) brute = true;
        }
        CHECK(find_terminal(comma.cat).has_value() == brute);
    }
}

TEST_CASE("cone adds a terminal object") {
    for (const FinCategory& c : {terminal_cat(), walking_arrow(), poset_chain(2), cospan_cat()}) {
        FinCategory coned = cone(c);
        CHECK(validate(coned).empty());
        auto t = find_terminal(coned);
        REQUIRE(t.has_value());
        CHECK(*t == c.num_objects());
    }
}

TEST_CASE("the cone over two points is the cospan shape") {
    FinCategory coned = cone(coproduct({terminal_cat(), terminal_cat()}).cat);
    CHECK(coned.num_objects() == 3);
    CHECK(coned.num_morphisms() == 5);
    CHECK(coned.hom_size(0, 2) == 1);
    CHECK(coned.hom_size(1, 2) == 1);
    CHECK(coned.hom_size(0, 1) == 0);
}

TEST_CASE("functor enumeration counts") {
    // functors [1] -> [1]: monotone endpoint pairs 00, 01, 11
    CHECK(count_functors(walking_arrow(), walking_arrow()) == 3);
    // functors 1 -> C = objects of C
    CHECK(count_functors(terminal_cat(), poset_chain(2)) == 3);
    // functors [2] -> [1] = monotone maps, i.e. upward-closed subsets of [2]
    CHECK(count_functors(poset_chain(2), poset_chain(1)) == 4);
    CHECK(enumerate_functors(walking_iso(), walking_arrow()).size() == 2);  // constants only
}

TEST_CASE("objects_isomorphic sees the walking isomorphism") {
    CHECK(objects_isomorphic(walking_iso(), 0, 1));
    CHECK(!objects_isomorphic(walking_arrow(), 0, 1));
    CHECK(objects_isomorphic(monoid5(), 0, 0));
}
