#include <doctest.h>

#include "fincat/fixtures.hpp"
#include "fincat/present.hpp"
#include "fincat/spans.hpp"
#include "fincat/textio.hpp"

using namespace fincat;

TEST_CASE("category print/parse round-trips the fixtures") {
    for (const FinCategory& c : {terminal_cat(), walking_arrow(), walking_iso(), poset_chain(2),
                                 cospan_cat(), monoid5(), discrete_cat(3), discrete_cat(0)}) {
        std::string text = print_category(c);
        FinCategory back = parse_category(text);
        CHECK(table_equal(back, c));
        CHECK(print_category(back) == text);  // canonical text is a fixed point
    }
}

TEST_CASE("category parse round-trips random normal-form categories") {
    Rng rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        FinCategory c = random_category(rng, 5);
        FinCategory back = parse_category(print_category(c));
        CHECK(table_equal(back, c));
    }
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_category("category C\nobjects: a a\nmorphisms:\ncompose:\n"),
                    parse_error);
    try {
        parse_category("category C\nobjects: a b\nmorphisms:\n  f: a -> zz\ncompose:\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 4);
    }
    // composition must be total: a missing entry is an invalid category
    CHECK_THROWS_AS(
        parse_category("category C\nobjects: a b c\nmorphisms:\n  f: a -> b\n  g: b -> c\n"
                       "  h: a -> c\ncompose:\n"),
        parse_error);
}

TEST_CASE("presentation text round-trip") {
    PresentedCategory p;
    p.name = "iso";
    p.obj_names = {"a", "b"};
    p.gens.push_back({"f", 0, 1, -1, -1});
    p.gens.push_back({"g", 1, 0, -1, -1});
    p.rels.push_back({PresPath{0, {0, 1}}, PresPath{0, {}}});
    p.rels.push_back({PresPath{1, {1, 0}}, PresPath{1, {}}});
    std::string text = print_presentation(p);
    PresentedCategory back = parse_presentation(text);
    CHECK(back.obj_names == p.obj_names);
    REQUIRE(back.gens.size() == 2);
    REQUIRE(back.rels.size() == 2);
    CHECK(back.rels[0].lhs.gens == std::vector<int>{0, 1});
    CHECK(back.rels[0].rhs.gens.empty());
    CHECK(print_presentation(back) == text);

    auto sat = saturate(back, {3, 100000});
    REQUIRE(sat.finite());
    CHECK(table_equal(sat.cat, walking_iso()));
}

TEST_CASE("functor text round-trip against fixed ends") {
    Functor f = pick_object(walking_arrow(), 0);
    std::string text = print_functor(f);
    Functor back = parse_functor(text, f.dom, f.cod);
    CHECK(functor_equal(back, f));

    Functor bang = collapse_to_point(walking_iso());
    Functor b2 = parse_functor(print_functor(bang), bang.dom, bang.cod);
    CHECK(functor_equal(b2, bang));
}

TEST_CASE("sset text round-trip") {
    TruncatedSSet d2 = standard_simplex(2, 3);
    std::string text = print_sset(d2);
    TruncatedSSet back = parse_sset(text);
    CHECK(back.counts == d2.counts);
    CHECK(back.face == d2.face);
    CHECK(back.degen == d2.degen);
    CHECK(print_sset(back) == text);
}

TEST_CASE("witness json embeds a reparsable verified witness") {
    auto res = is_dwyer(walking_arrow(), {0});
    REQUIRE(res.ok);
    std::string j = witness_to_json(res.witness);
    DwyerWitness w = witness_from_json(j);
    CHECK(w.sieve_objs == res.witness.sieve_objs);
    CHECK(w.counit == res.witness.counit);
    CHECK(check_witness(w).empty());
}
