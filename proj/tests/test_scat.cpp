#include <doctest.h>

#include "fincat/fixtures.hpp"
#include "fincat/scat.hpp"
#include "fincat/spans.hpp"

using namespace fincat;

namespace {

// two parallel arrows at level 0 merged by an edge at level 1
LevelwiseSCat merged_pair_fixture() {
    CategoryBuilder b0("pair");
    int x = b0.add_object("x");
    int y = b0.add_object("y");
    b0.add_morphism("f1", x, y);
    b0.add_morphism("f2", x, y);
    FinCategory c0 = b0.build();

    CategoryBuilder b1("pair1");
    b1.add_object("x");
    b1.add_object("y");
    b1.add_morphism("sf1", 0, 1);
    b1.add_morphism("sf2", 0, 1);
    b1.add_morphism("e", 0, 1);
    FinCategory c1 = b1.build();

    LevelwiseSCat s;
    s.name = "merged_pair";
    s.dim = 1;
    s.level = {c0, c1};
    s.face.resize(2);
    s.degen.resize(1);
    // d0(e) = f2, d1(e) = f1, degeneracies are the s-copies
    s.face[1] = {{0, 1, 2, 3, 3}, {0, 1, 2, 3, 2}};
    s.degen[0] = {{0, 1, 2, 3}};
    return s;
}

SCatFunctor scat_functor_from(const Functor& f, const LevelwiseSCat& dom,
                              const LevelwiseSCat& cod) {
    SCatFunctor out;
    out.name = f.name;
    out.dom = dom;
    out.cod = cod;
    out.obj_map = f.obj_map;
    out.mor_map.assign(dom.dim + 1, f.mor_map);
    return out;
}

}  // namespace

TEST_CASE("disc builds valid constant families") {
    for (const FinCategory& c : {terminal_cat(), walking_arrow(), monoid5()}) {
        auto s = disc(c, 3);
        CHECK(validate_scat(s).empty());
        for (int k = 0; k <= 3; ++k) CHECK(table_equal(s.level[k], c));
    }
}

TEST_CASE("the merged-pair fixture validates") {
    auto s = merged_pair_fixture();
    CHECK(validate_scat(s).empty());
}

TEST_CASE("hom simplicial sets of disc are discrete") {
    auto s = disc(walking_arrow(), 3);
    auto h01 = hom_sset(s, 0, 1);
    CHECK(h01.X.counts[0] == 1);
    for (int k = 1; k <= 3; ++k) {
        CHECK(h01.X.counts[k] == 1);
        CHECK(h01.X.degenerate[k][0]);
    }
    auto h10 = hom_sset(s, 1, 0);
    for (int k = 0; k <= 3; ++k) CHECK(h10.X.counts[k] == 0);
    CHECK(validate_sset(h01.X).empty());
    CHECK(validate_sset(h10.X).empty());
}

TEST_CASE("hom sset of the merged pair is connected") {
    auto s = merged_pair_fixture();
    auto h = hom_sset(s, 0, 1);
    CHECK(h.X.counts[0] == 2);
    CHECK(h.X.counts[1] == 3);
    CHECK(path_components(h.X) == 1);
}

TEST_CASE("pi0 of disc is the category itself") {
    for (const FinCategory& c : {walking_arrow(), poset_chain(2), monoid5()}) {
        auto p = pi0(disc(c, 2));
        CHECK(table_equal(p.cat, c));
    }
}

TEST_CASE("pi0 collapses the merged pair") {
    auto p = pi0(merged_pair_fixture());
    CHECK(p.cat.num_objects() == 2);
    CHECK(p.cat.hom_size(0, 1) == 1);
    CHECK(p.mor_class[2] == p.mor_class[3]);
}

TEST_CASE("pi0 reports ill-defined composition on corrupted structure maps") {
    // level 0: x -f1,f2-> y -g-> z with distinct composites; level 1 merges
    // f1 ~ f2 but the corrupted face tables keep the composites apart
    CategoryBuilder b0("c0");
    int x = b0.add_object("x");
    int y = b0.add_object("y");
    int z = b0.add_object("z");
    int f1 = b0.add_morphism("f1", x, y);
    int f2 = b0.add_morphism("f2", x, y);
    int g = b0.add_morphism("g", y, z);
    int h1 = b0.add_morphism("h1", x, z);
    int h2 = b0.add_morphism("h2", x, z);
    b0.set_compose(g, f1, h1);
    b0.set_compose(g, f2, h2);
    FinCategory c0 = b0.build();

    CategoryBuilder b1("c1");
    b1.add_object("x");
    b1.add_object("y");
    b1.add_object("z");
    int e = b1.add_morphism("e", 0, 1);       // will merge f1 ~ f2
    int sg = b1.add_morphism("sg", 1, 2);
    int k1 = b1.add_morphism("k1", 0, 2);
    b1.set_compose(sg, e, k1);
    FinCategory c1 = b1.build();

    LevelwiseSCat s;
    s.dim = 1;
    s.level = {c0, c1};
    s.face.resize(2);
    s.degen.resize(1);
    // d1(e) = f1, d0(e) = f2, but both faces of the composite point at h1:
    // the level-0 classes then compose inconsistently
    s.face[1] = {std::vector<int>(c1.num_morphisms(), -1),
                 std::vector<int>(c1.num_morphisms(), -1)};
    for (int i = 0; i < 3; ++i) s.face[1][0][i] = s.face[1][1][i] = i;
    s.face[1][0][e] = f2;
    s.face[1][1][e] = f1;
    s.face[1][0][sg] = g;
    s.face[1][1][sg] = g;
    s.face[1][0][k1] = h1;
    s.face[1][1][k1] = h1;
    s.degen[0] = {{0, 1, 2, e, e, sg, k1, k1}};
    CHECK(!validate_scat(s).empty());  // the corruption is visible to validation
    CHECK_THROWS_AS(pi0(s), std::logic_error);
}

TEST_CASE("disc preserves pushouts level for level") {
    Rng rng(83);
    for (int trial = 0; trial < 8; ++trial) {
        RandomSpan span = random_dwyer_span(rng, 4);
        auto po = dwyer_pushout(span.wit, span.F);
        auto lw = levelwise_dwyer_pushout(span.wit, disc_functor(span.F, 2));
        CHECK(scat_equal(lw.scat, disc(po.D, 2)));
        // pi0 of the levelwise pushout is the categorical pushout
        auto p = pi0(lw.scat);
        CHECK(table_equal(p.cat, po.D));
    }
}

TEST_CASE("levelwise pushout hom formulas hold at every level") {
    // S: disc(I) fattened is simplest as disc; use the merged pair as C with
    // A = the point mapping to x
    auto s = merged_pair_fixture();
    auto wit = is_dwyer(walking_arrow(), {0});
    REQUIRE(wit.ok);
    Subcategory a = full_subcategory(walking_arrow(), {0});
    SCatFunctor f;
    f.name = "F";
    f.dom = disc(a.cat, 1);
    f.cod = s;
    f.obj_map = {0};
    f.mor_map = {{s.level[0].identity(0)}, {s.level[1].identity(0)}};
    auto lw = levelwise_dwyer_pushout(wit.witness, f);
    CHECK(validate_scat(lw.scat).empty());
    // D(c, u) at level k must biject with C_k(c, F R u); here S(u) = x
    for (int k = 0; k <= 1; ++k) {
        const auto& po = lw.per_level[k];
        int u = po.obj_from_V[1];
        CHECK(lw.scat.level[k].hom_size(0, u) == s.level[k].hom_size(0, 0));
        CHECK(lw.scat.level[k].hom_size(1, u) == s.level[k].hom_size(1, 0));
    }
    // hom ssets of the V part stay discrete
    auto hv = hom_sset(lw.scat, lw.per_level[0].obj_from_V[1], lw.per_level[0].obj_from_V[1]);
    CHECK(hv.X.counts[0] == 1);
    CHECK(hv.X.degenerate[1][0]);
    // no morphisms from the V part back into the C part at any level
    int u = lw.per_level[0].obj_from_V[1];
    for (int k = 0; k <= 1; ++k)
        for (int c = 0; c < 2; ++c) CHECK(lw.scat.level[k].hom_size(u, c) == 0);
}

TEST_CASE("dk_check accepts identities and equivalences") {
    auto s = disc(poset_chain(2), 2);
    CHECK(dk_check(identity_scat_functor(s), 1).consistent);

    // the collapse I -> 1 is an equivalence
    auto m = disc_functor(collapse_to_point(walking_iso()), 2);
    auto rep = dk_check(m, 1);
    CHECK(rep.consistent);
}

TEST_CASE("dk_check refutes the arrow collapse with witness pair (1,0)") {
    auto m = disc_functor(collapse_to_point(walking_arrow()), 2);
    auto rep = dk_check(m, 1);
    CHECK(!rep.consistent);
    REQUIRE(rep.has_witness_pair);
    CHECK(rep.witness_x == 1);
    CHECK(rep.witness_y == 0);
    CHECK(rep.to_string() == "Refuted at hom pair (1,0)");
}

TEST_CASE("dk_check on scat isomorphisms reports all homs good") {
    auto s = merged_pair_fixture();
    auto rep = dk_check(identity_scat_functor(s), 0);
    CHECK(rep.consistent);
    for (const auto& v : rep.homs) {
        CHECK(v.pi0_bijective);
        CHECK(v.homology_agrees);
    }
}

TEST_CASE("flat instance check: identity M") {
    auto wit = is_dwyer(walking_arrow(), {0});
    Subcategory a = full_subcategory(walking_arrow(), {0});
    auto s = disc(walking_iso(), 2);
    SCatFunctor fprime = scat_functor_from(pick_object(walking_iso(), 0), disc(a.cat, 2), s);
    fprime.dom = disc(a.cat, 2);
    auto rep = flat_instance_check(wit.witness, fprime, identity_scat_functor(s), 1);
    CHECK(rep.applicable);
    CHECK(rep.h_report.consistent);
}

TEST_CASE("flat instance check: collapsing the iso over the vertex inclusion") {
    auto wit = is_dwyer(walking_arrow(), {0});
    Subcategory a = full_subcategory(walking_arrow(), {0});
    auto sprime = disc(walking_iso(), 2);
    auto s = disc(terminal_cat(), 2);
    SCatFunctor fprime = scat_functor_from(pick_object(walking_iso(), 0), disc(a.cat, 2), sprime);
    SCatFunctor m = scat_functor_from(collapse_to_point(walking_iso()), sprime, s);
    auto rep = flat_instance_check(wit.witness, fprime, m, 1);
    CHECK(rep.applicable);
    CHECK(rep.m_report.consistent);
    CHECK(rep.h_report.consistent);
}

TEST_CASE("flat instance check for the cospan inclusion via the oracle") {
    // 1 ⊔ 1 into the cospan is not Dwyer yet is discretely flat: the same
    // collapse stays consistent through the presented pushouts
    FinCategory b = cospan_cat();
    Subcategory a = full_subcategory(b, {0, 2});
    FinCategory two_isos = coproduct({walking_iso(), walking_iso()}).cat;
    FinCategory two_points = coproduct({terminal_cat(), terminal_cat()}).cat;
    auto sprime = disc(two_isos, 2);
    auto s = disc(two_points, 2);

    Functor fp;
    fp.name = "Fprime";
    fp.dom = a.cat;
    fp.cod = two_isos;
    fp.obj_map = {0, 2};
    fp.mor_map = {two_isos.identity(0), two_isos.identity(2)};
    REQUIRE(is_functor(fp).ok);
    Functor mm;
    mm.name = "M";
    mm.dom = two_isos;
    mm.cod = two_points;
    mm.obj_map = {0, 0, 1, 1};
    mm.mor_map.assign(two_isos.num_morphisms(), -1);
    for (int i = 0; i < two_isos.num_morphisms(); ++i)
        mm.mor_map[i] = two_points.identity(mm.obj_map[two_isos.src(i)]);
    REQUIRE(is_functor(mm).ok);

    auto rep = flat_instance_check_presented(a.inclusion, scat_functor_from(fp, disc(a.cat, 2), sprime),
                                             scat_functor_from(mm, sprime, s), 1, {5, 100000});
    CHECK(rep.applicable);
    CHECK(rep.m_report.consistent);
    CHECK(rep.h_report.consistent);
}

TEST_CASE("negative control: a non-equivalence M is reported as inapplicable") {
    auto wit = is_dwyer(walking_arrow(), {0});
    Subcategory a = full_subcategory(walking_arrow(), {0});
    auto sprime = disc(walking_arrow(), 2);
    auto s = disc(terminal_cat(), 2);
    SCatFunctor fprime = scat_functor_from(pick_object(walking_arrow(), 0), disc(a.cat, 2), sprime);
    SCatFunctor m = scat_functor_from(collapse_to_point(walking_arrow()), sprime, s);
    auto rep = flat_instance_check(wit.witness, fprime, m, 1);
    CHECK(!rep.applicable);
    CHECK(!rep.m_report.consistent);
}
