#ifndef FINCAT_SPANS_HPP
#define FINCAT_SPANS_HPP

#include <cstdint>
#include <random>

#include "fincat/dwyer.hpp"

namespace fincat {

/// All randomness flows through mt19937 with hand-rolled bounded draws so
/// that seeded runs are identical across platforms.
using Rng = std::mt19937;

int rand_int(Rng& rng, int lo, int hi);  // inclusive bounds

/// A random thin category from a random DAG's reachability order.
FinCategory random_poset(Rng& rng, int max_objects);

/// A random free category on a sparse DAG (paths as morphisms).
FinCategory random_path_category(Rng& rng, int max_objects);

/// A random small category: posets, path categories and standard fixtures,
/// occasionally glued by coproducts.
FinCategory random_category(Rng& rng, int max_objects);

/// A uniformly-shuffled functor dom -> cod found by randomized backtracking;
/// dom empty or cod nonempty is required (the constant functor always
/// exists when cod is inhabited).
Functor random_functor(Rng& rng, const FinCategory& dom, const FinCategory& cod);

/// A random span B <- A -> C whose left leg carries a verified Dwyer
/// witness. Generation retries candidate sieves until is_dwyer accepts, so
/// the witness is always sound by construction of the checker, not the
/// generator.
struct RandomSpan {
    DwyerWitness wit;   // over B, sieve = A
    Functor F;          // A -> C, dom matching the sieve subcategory
    Functor inclusion;  // A -> B
};

RandomSpan random_dwyer_span(Rng& rng, int max_objects, bool faithful_leg = false);

}  // namespace fincat

#endif
