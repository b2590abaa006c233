#ifndef FINCAT_HOMOLOGY_HPP
#define FINCAT_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "fincat/sset.hpp"

namespace fincat {

using BigInt = boost::multiprecision::cpp_int;

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<BigInt> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    BigInt& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const BigInt& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);
bool mat_is_zero(const IntMatrix& x);

/// Normalized chains of a truncated simplicial set: bases are the
/// nondegenerate simplices, boundaries alternate-sum the faces with
/// degenerate faces contributing zero.
struct ChainComplex {
    int dim = 0;
    std::vector<std::vector<int>> basis;  // per degree: nondegenerate simplex ids
    std::vector<IntMatrix> boundary;      // boundary[k]: C_k -> C_{k-1}; boundary[0] is 0 x n
};

ChainComplex chains(const TruncatedSSet& x);

/// Every composite of successive boundaries must vanish.
std::vector<std::string> check_boundary_square(const ChainComplex& cc);

struct SmithResult {
    std::vector<BigInt> invariant_factors;  // d1 | d2 | ..., all positive
    int rank = 0;                           // number of nonzero factors
};

/// Smith normal form by unimodular row/column reduction over cpp_int.
SmithResult smith_normal_form(IntMatrix m);

struct HomologyGroup {
    long long betti = 0;
    std::vector<BigInt> torsion;  // invariant factors > 1 of the next boundary
    bool reliable = true;         // false at the truncation dimension
};

struct HomologyResult {
    std::vector<HomologyGroup> groups;  // degrees 0..max_degree
    std::string to_string() const;
};

/// H_k = ker d_k / im d_{k+1} through max_degree; requires the truncation
/// dim >= max_degree + 1 so that every reported degree has its incoming
/// boundary available.
HomologyResult homology(const TruncatedSSet& x, int max_degree);

struct HomologyComparison {
    bool equal = true;
    std::vector<int> differing_degrees;
};

HomologyComparison homology_equal(const TruncatedSSet& x, const TruncatedSSet& y, int max_degree);

/// Number of path components of the 1-skeleton, computed by union-find;
/// the independent oracle for the rank of H_0.
int path_components(const TruncatedSSet& x);

}  // namespace fincat

#endif
