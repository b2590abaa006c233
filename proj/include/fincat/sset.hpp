#ifndef FINCAT_SSET_HPP
#define FINCAT_SSET_HPP

#include <map>
#include <string>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

/// A simplicial set recorded through a fixed dimension, with explicit face
/// and degeneracy tables and degeneracy flags.
struct TruncatedSSet {
    std::string name = "X";
    int dim = 0;
    std::vector<int> counts;                            // per level 0..dim
    std::vector<std::vector<std::vector<int>>> face;    // face[k][i][s], 1 <= k, 0 <= i <= k
    std::vector<std::vector<std::vector<int>>> degen;   // degen[k][i][s], 0 <= k < dim, 0 <= i <= k
    std::vector<std::vector<char>> degenerate;          // flag per simplex

    int simplices(int k) const { return k <= dim ? counts[k] : 0; }
    int d(int k, int i, int s) const { return face[k][i][s]; }
    int s(int k, int i, int s) const { return degen[k][i][s]; }

    void init_tables();  // sizes tables from counts
    void recompute_degeneracy_flags();
};

inline constexpr long long kSimplexGuard = 1000000;

/// Exhaustive check of all simplicial identities within the truncation plus
/// consistency of the degeneracy flags.
std::vector<std::string> validate_sset(const TruncatedSSet& x);

/// The standard n-simplex truncated at dim: k-simplices are weakly
/// increasing (k+1)-tuples in {0..n}.
TruncatedSSet standard_simplex(int n, int dim);

/// A levelwise map commuting with faces and degeneracies.
struct SSetMap {
    TruncatedSSet dom, cod;
    std::vector<std::vector<int>> level;  // level[k][s]
};

std::vector<std::string> validate_sset_map(const SSetMap& f);
bool level_injective(const SSetMap& f, int k);
bool level_surjective(const SSetMap& f, int k);

/// Nerve of a category: k-simplices are composable k-chains (functors
/// [k] -> C), kept with explicit chain data for lookups.
struct Nerve {
    TruncatedSSet X;
    // chain[k][s]: for k = 0 the single object, else the k morphisms in
    // diagrammatic order
    std::vector<std::vector<std::vector<int>>> chain;
    std::vector<std::map<std::vector<int>, int>> index;

    int index_of(int k, const std::vector<int>& ch) const;
};

Nerve nerve(const FinCategory& c, int dim);

/// Levelwise action of a functor on nerves.
SSetMap nerve_of_functor(const Functor& f, int dim);
SSetMap nerve_of_functor(const Functor& f, const Nerve& dom, const Nerve& cod);

/// Levelwise set pushout of Y <-f- X -g-> Z with induced structure maps.
struct SSetPushout {
    TruncatedSSet P;
    SSetMap from_Y, from_Z;
};

SSetPushout sset_pushout(const SSetMap& f, const SSetMap& g);

/// The canonical comparison N B ⨿_{N A} N C -> N D for a categorical pushout
/// cocone (G: B -> D, J: C -> D over I: A -> B, F: A -> C), with per-level
/// injectivity/surjectivity and the 0-simplex bijectivity verdict.
struct ComparisonReport {
    SSetPushout glued;
    Nerve nerve_D;
    SSetMap j;
    std::vector<char> injective;   // per level
    std::vector<char> surjective;  // per level
    bool bijective_on_vertices = false;
};

ComparisonReport comparison_map(const Functor& I, const Functor& F, const Functor& G,
                                const Functor& J, int dim);

/// Inner-horn filling report: every inner horn map with k <= dim must admit
/// a filler; uniqueness is also recorded (nerves fill uniquely).
struct HornReport {
    bool all_filled = true;
    bool unique_fillers = true;
    long long horns = 0;
    // first few unfilled horns as (k, i, faces)
    std::vector<std::tuple<int, int, std::vector<int>>> unfilled;
};

HornReport is_quasicategory_upto(const TruncatedSSet& x, int max_k);

/// One inner-horn attachment: the filler simplex and its i-th face are
/// adjoined; all other faces of the filler lie in the prior subcomplex.
struct AttachStep {
    int k = 0, i = 0;
    int filler = -1;
    int new_face = -1;
    std::vector<int> horn_faces;  // filler's faces, entry i = -1
};

struct AnodyneResult {
    bool success = false;
    std::vector<AttachStep> steps;
    std::vector<std::pair<int, int>> unreached;  // (level, simplex), dims <= dim-1
    std::vector<std::vector<char>> final_in;
};

/// Greedy inner-horn attachment from the subcomplex s0 of x, in lexicographic
/// (k, i, filler) order. Success when every simplex of dimension <= dim-1 is
/// reached; Stuck reports the frontier and refutes nothing.
AnodyneResult anodyne_search(const TruncatedSSet& x, std::vector<std::vector<char>> s0);

/// Replays a certificate from s0, re-checking every step's preconditions.
/// Returns the reached subcomplex; throws on an invalid step.
std::vector<std::vector<char>> replay_certificate(const TruncatedSSet& x,
                                                  std::vector<std::vector<char>> s0,
                                                  const std::vector<AttachStep>& steps);

/// Closure of a set of flagged simplices under faces and degeneracies.
void close_subcomplex(const TruncatedSSet& x, std::vector<std::vector<char>>& in);
bool is_subcomplex(const TruncatedSSet& x, const std::vector<std::vector<char>>& in);

/// The image subcomplex of a map.
std::vector<std::vector<char>> image_subcomplex(const SSetMap& f);

}  // namespace fincat

#endif
