#include <doctest.h>

#include <functional>

#include "fincat/fixtures.hpp"
#include "fincat/homology.hpp"
#include "fincat/pushout.hpp"
#include "fincat/spans.hpp"

using namespace fincat;

namespace {

// gcd-of-k-by-k-minors oracle for invariant factors, feasible up to 4x4
BigInt det(const IntMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    const size_t n = rows.size();
    if (n == 1) return m.at(rows[0], cols[0]);
    BigInt sum = 0;
    for (size_t i = 0; i < n; ++i) {
        std::vector<int> rest_rows(rows.begin() + 1, rows.end());
        std::vector<int> rest_cols = cols;
        rest_cols.erase(rest_cols.begin() + i);
        BigInt sub = det(m, rest_rows, rest_cols) * m.at(rows[0], cols[i]);
        if (i % 2 == 0)
            sum += sub;
        else
            sum -= sub;
    }
    return sum;
}

std::vector<BigInt> minor_gcd_factors(const IntMatrix& m) {
    std::vector<BigInt> d;  // d[k] = gcd of all (k+1)x(k+1) minors
    int n = std::min(m.rows, m.cols);
    for (int k = 1; k <= n; ++k) {
        BigInt g = 0;
        std::vector<int> rows(k), cols(k);
        std::function<void(int, int)> pick_rows = [&](int pos, int lo) {
            if (pos == k) {
                std::function<void(int, int)> pick_cols = [&](int cpos, int clo) {
                    if (cpos == k) {
                        g = boost::multiprecision::gcd(g, abs(det(m, rows, cols)));
                        return;
                    }
                    for (int c = clo; c < m.cols; ++c) {
                        cols[cpos] = c;
                        pick_cols(cpos + 1, c + 1);
                    }
                };
                pick_cols(0, 0);
                return;
            }
            for (int r = lo; r < m.rows; ++r) {
                rows[pos] = r;
                pick_rows(pos + 1, r + 1);
            }
        };
        pick_rows(0, 0);
        d.push_back(g);
        if (g == 0) break;
    }
    std::vector<BigInt> factors;
    BigInt prev = 1;
    for (const auto& g : d) {
        if (g == 0) break;
        factors.push_back(g / prev);
        prev = g;
    }
    return factors;
}

TruncatedSSet sphere_pushout_sset(int dim) {
    // nerve pushout of the poset counterexample: N(cone over hexagon) glued
    // with a point along the hexagon
    FinCategory b = sphere_poset_ambient();
    Subcategory a = full_subcategory(b, sphere_poset_sieve());
    Functor f = collapse_to_point(a.cat);
    SSetMap ni = nerve_of_functor(a.inclusion, dim);
    SSetMap nf = nerve_of_functor(f, dim);
    return sset_pushout(ni, nf).P;
}

}  // namespace

TEST_CASE("smith normal form on the frozen examples") {
    IntMatrix id2(2, 2);
    id2.at(0, 0) = 1;
    id2.at(1, 1) = 1;
    auto s = smith_normal_form(id2);
    CHECK(s.invariant_factors == std::vector<BigInt>{1, 1});

    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 4;
    m.at(1, 0) = 6;
    m.at(1, 1) = 8;
    auto s2 = smith_normal_form(m);
    CHECK(s2.invariant_factors == std::vector<BigInt>{2, 4});
    CHECK(s2.rank == 2);

    IntMatrix z(3, 2);
    auto s3 = smith_normal_form(z);
    CHECK(s3.invariant_factors.empty());
    CHECK(s3.rank == 0);
}

TEST_CASE("smith normal form agrees with the minor-gcd oracle") {
    Rng rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix m(rand_int(rng, 1, 4), rand_int(rng, 1, 4));
        for (auto& v : m.a) v = rand_int(rng, -9, 9);
        auto s = smith_normal_form(m);
        auto oracle = minor_gcd_factors(m);
        CHECK(s.invariant_factors == oracle);
    }
}

TEST_CASE("chains of small nerves") {
    auto c0 = chains(standard_simplex(0, 3));
    CHECK(c0.basis[0].size() == 1);
    CHECK(c0.basis[1].empty());

    auto c2 = chains(nerve(walking_arrow(), 2).X);
    CHECK(c2.basis[0].size() == 2);
    CHECK(c2.basis[1].size() == 1);
    CHECK(c2.basis[2].empty());
    REQUIRE(c2.boundary[1].rows == 2);
    CHECK(c2.boundary[1].at(0, 0) == -1);
    CHECK(c2.boundary[1].at(1, 0) == 1);

    auto ci = chains(nerve(walking_iso(), 3).X);
    for (int k = 0; k <= 3; ++k) CHECK(ci.basis[k].size() == 2);
    CHECK(check_boundary_square(ci).empty());
}

TEST_CASE("boundary squares vanish on random nerves and pushouts") {
    Rng rng(57);
    for (int trial = 0; trial < 10; ++trial) {
        FinCategory c = random_category(rng, 4);
        CHECK(check_boundary_square(chains(nerve(c, 3).X)).empty());
    }
    CHECK(check_boundary_square(chains(sphere_pushout_sset(3))).empty());
}

TEST_CASE("H0 rank equals path components") {
    Rng rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        FinCategory c = random_category(rng, 4);
        if (c.num_objects() == 0) continue;
        auto x = nerve(c, 2).X;
        auto h = homology(x, 1);
        CHECK(h.groups[0].betti == path_components(x));
        CHECK(h.groups[0].torsion.empty());
    }
}

TEST_CASE("nerves of categories with terminal objects are acyclic") {
    auto h = homology(nerve(poset_chain(2), 3).X, 2);
    CHECK(h.groups[0].betti == 1);
    CHECK(h.groups[1].betti == 0);
    CHECK(h.groups[2].betti == 0);
    CHECK(h.groups[1].torsion.empty());
    CHECK(h.groups[2].torsion.empty());
}

TEST_CASE("homology is invariant under basis relabeling") {
    // relabel by reversing simplex order at each level via an isomorphic copy
    FinCategory c = cospan_cat();
    auto x = nerve(c, 3).X;
    TruncatedSSet y = x;
    std::vector<std::vector<int>> perm(x.dim + 1);
    for (int k = 0; k <= x.dim; ++k) {
        perm[k].resize(x.counts[k]);
        for (int s0 = 0; s0 < x.counts[k]; ++s0) perm[k][s0] = x.counts[k] - 1 - s0;
    }
    for (int k = 1; k <= x.dim; ++k)
        for (int i = 0; i <= k; ++i)
            for (int s0 = 0; s0 < x.counts[k]; ++s0)
                y.face[k][i][perm[k][s0]] = perm[k - 1][x.face[k][i][s0]];
    for (int k = 0; k < x.dim; ++k)
        for (int i = 0; i <= k; ++i)
            for (int s0 = 0; s0 < x.counts[k]; ++s0)
                y.degen[k][i][perm[k][s0]] = perm[k + 1][x.degen[k][i][s0]];
    y.recompute_degeneracy_flags();
    REQUIRE(validate_sset(y).empty());
    CHECK(homology_equal(x, y, 2).equal);
}

TEST_CASE("the poset counterexample detects the 2-sphere") {
    auto h = homology(sphere_pushout_sset(3), 2);
    CHECK(h.groups[0].betti == 1);
    CHECK(h.groups[1].betti == 0);
    CHECK(h.groups[1].torsion.empty());
    CHECK(h.groups[2].betti == 1);
    CHECK(h.groups[2].torsion.empty());

    // while the categorical pushout is the walking arrow, which is acyclic
    FinCategory b = sphere_poset_ambient();
    Subcategory a = full_subcategory(b, sphere_poset_sieve());
    auto pp = pushout_presentation(a.inclusion, collapse_to_point(a.cat));
    auto sat = saturate(pp.pres, {6, 100000});
    REQUIRE(sat.finite());
    CHECK(iso_check(sat.cat, walking_arrow()).isomorphic);
    auto hq = homology(nerve(sat.cat, 3).X, 2);
    CHECK(hq.groups[0].betti == 1);
    CHECK(hq.groups[1].betti == 0);
    CHECK(hq.groups[2].betti == 0);
    auto cmp = homology_equal(sphere_pushout_sset(3), nerve(sat.cat, 3).X, 2);
    CHECK(!cmp.equal);
}

TEST_CASE("the Dwyer glueing span has equal homology on both sides") {
    // both the glued nerves and the nerve of the 3-chain are contractible
    Functor i = pick_object(walking_arrow(), 1, "end");
    Functor f = pick_object(walking_arrow(), 0, "start");
    auto glued = sset_pushout(nerve_of_functor(i, 3), nerve_of_functor(f, 3));
    auto cmp = homology_equal(glued.P, nerve(poset_chain(2), 3).X, 2);
    CHECK(cmp.equal);
}

TEST_CASE("truncation guard") {
    CHECK_THROWS_AS(homology(nerve(walking_arrow(), 2).X, 2), std::invalid_argument);
    auto h = homology(nerve(walking_arrow(), 3).X, 2);
    CHECK(h.groups[2].reliable);
}

TEST_CASE("the empty simplicial set has trivial homology everywhere") {
    auto x = nerve(discrete_cat(0), 3).X;
    auto h = homology(x, 2);
    for (int k = 0; k <= 2; ++k) {
        CHECK(h.groups[k].betti == 0);
        CHECK(h.groups[k].torsion.empty());
    }
    CHECK(path_components(x) == 0);
}
