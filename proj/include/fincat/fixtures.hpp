#ifndef FINCAT_FIXTURES_HPP
#define FINCAT_FIXTURES_HPP

#include "fincat/category.hpp"

namespace fincat {

/// The terminal category: one object, one identity.
FinCategory terminal_cat();

/// The free-living arrow: objects 0, 1 and one morphism 0 -> 1.
FinCategory walking_arrow();

/// The free-living isomorphism: objects 0, 1 and inverse arrows f, g.
FinCategory walking_iso();

/// The linear poset [n] with objects 0..n and a unique arrow i -> j for i <= j.
FinCategory poset_chain(int n);

/// Discrete category on n objects.
FinCategory discrete_cat(int n);

/// The cospan shape l -> m <- r.
FinCategory cospan_cat();

/// The span shape l <- m -> r.
FinCategory span_cat();

/// Monoid on {e, x11, x12, x21, x22} with x_ij x_kl = x_il, as a one-object
/// category.
FinCategory monoid5();

/// Adds a fresh terminal object to c (the cone c^>).
FinCategory cone(const FinCategory& c);

/// Thin category of a partial order given by its covering/edge list
/// (reflexive-transitive closure is taken).
FinCategory poset_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                             const std::vector<std::string>& names = {});

/// Free category on a finite acyclic graph: morphisms are directed paths.
FinCategory free_on_dag(int n, const std::vector<std::pair<int, int>>& edges,
                        const std::vector<std::string>& edge_names = {});

/// The 7-object poset B of the sphere counterexample: a hexagonal zigzag
/// T, L, R, P, Q, S (whose nerve is a circle) under a top element M.
FinCategory sphere_poset_ambient();

/// The object subset of sphere_poset_ambient() spanning the hexagon.
std::vector<int> sphere_poset_sieve();

/// Functor picking one object of c: terminal_cat() -> c.
Functor pick_object(const FinCategory& c, int obj, const std::string& name = "pt");

/// The unique functor c -> terminal_cat().
Functor collapse_to_point(const FinCategory& c);

}  // namespace fincat

#endif
