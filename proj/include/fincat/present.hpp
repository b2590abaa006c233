#ifndef FINCAT_PRESENT_HPP
#define FINCAT_PRESENT_HPP

#include <string>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

struct PresGenerator {
    std::string name;
    int src = 0;
    int tgt = 0;
    // provenance for pushout presentations: 0 = left leg (B), 1 = right leg (C),
    // -1 = none; origin_mor is the morphism index in that category.
    int origin_cat = -1;
    int origin_mor = -1;
};

/// A composable chain of generators in diagrammatic order (first applied
/// first); empty chain = identity at `at`.
struct PresPath {
    int at = 0;  // source object; redundant for nonempty paths
    std::vector<int> gens;

    int src(const std::vector<PresGenerator>& g) const {
        return gens.empty() ? at : g[gens.front()].src;
    }
    int tgt(const std::vector<PresGenerator>& g) const {
        return gens.empty() ? at : g[gens.back()].tgt;
    }
};

struct PresRelation {
    PresPath lhs, rhs;
};

struct PresentedCategory {
    std::string name = "P";
    std::vector<std::string> obj_names;
    std::vector<PresGenerator> gens;
    std::vector<PresRelation> rels;

    int num_objects() const { return static_cast<int>(obj_names.size()); }
};

/// Checks well-formedness: composable chains, parallel relation sides.
std::vector<std::string> validate_presentation(const PresentedCategory& p);

struct SaturationStats {
    long long words = 0;
    long long classes = 0;
    int bound = 0;
    std::string note;
};

struct SaturationOptions {
    int max_word_len = 6;
    long long word_cap = 100000;  // resource guard on enumerated words
    // deepening tries small bounds first; turning it off forces the literal
    // bound, which the monotonicity property tests rely on
    bool deepening = true;
};

/// Result of bounded congruence-closure saturation. On Finite the emitted
/// category is valid and every relation holds under the word -> morphism
/// evaluation; Inconclusive never claims anything.
struct SaturationResult {
    enum class Status { Finite, Inconclusive };
    Status status = Status::Inconclusive;
    FinCategory cat;
    std::vector<int> gen_mor;                // generator -> morphism of cat
    std::vector<std::vector<int>> rep_word;  // morphism -> shortest-lex generator word
    SaturationStats stats;

    bool finite() const { return status == Status::Finite; }

    /// Evaluates a generator chain (diagrammatic order) in the emitted
    /// category; only meaningful on Finite.
    int eval_word(const std::vector<int>& gens, int at_obj) const;
    int eval_path(const PresPath& p) const;
};

/// Enumerates composable generator words up to the bound, closes the
/// congruence generated by the relations under one-generator whiskering on
/// both sides, and emits the quotient when every class of words of length
/// <= bound has a representative of length < bound. The emitted table is
/// re-validated and all relations re-checked before Finite is declared.
SaturationResult saturate(const PresentedCategory& p, const SaturationOptions& opts = {});

/// Presentation with one generator per non-identity morphism and one
/// relation per entry of the composition table.
PresentedCategory presentation_of(const FinCategory& c);

/// Presentation of the pushout of B <-I- A -F-> C: objects are the pushout
/// of object sets, generators the non-identity morphisms of B and C (with
/// provenance), relations both composition tables plus I(a) = F(a) for every
/// morphism a of A.
struct PushoutPresentation {
    PresentedCategory pres;
    std::vector<int> obj_from_B;  // B object -> presentation object
    std::vector<int> obj_from_C;
    std::vector<int> gen_from_B;  // B morphism -> generator (-1 for identities)
    std::vector<int> gen_from_C;
};

PushoutPresentation pushout_presentation(const Functor& I, const Functor& F);

/// Cocone functors B -> Q and C -> Q into the saturated pushout.
struct OracleCocone {
    Functor from_B;
    Functor from_C;
};

OracleCocone oracle_cocone(const PushoutPresentation& pp, const SaturationResult& sat,
                           const FinCategory& B, const FinCategory& C);

/// Gabriel-Zisman localization: pushout of C <- ∐_sigma 2 -> ∐_sigma I,
/// one free-living-isomorphism copy per listed morphism, computed through
/// the presentation engine.
struct LocalizationResult {
    SaturationResult sat;
    Functor quotient;  // C -> localized category, when Finite
};

LocalizationResult localize(const FinCategory& c, const std::vector<int>& sigma,
                            const SaturationOptions& opts = {});

}  // namespace fincat

#endif
