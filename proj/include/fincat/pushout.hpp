#ifndef FINCAT_PUSHOUT_HPP
#define FINCAT_PUSHOUT_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "fincat/dwyer.hpp"
#include "fincat/present.hpp"

namespace fincat {

enum class DMorKind { CPart, VPart, Hat };

/// The pushout D of B <- A -> C computed by the explicit hom formulas for a
/// Dwyer inclusion A into B:
///   D(c,c') = C(c,c'),  D(v,v') = B(v,v'),  D(c,u) = C(c, S(u)) via the hat
/// bijection nu_u . (-), and empty otherwise. Objects are the C objects
/// followed by the V objects; morphisms are the C block, then the V block,
/// then the hat block ordered by (source, target, underlying C morphism).
struct DwyerPushout {
    FinCategory D;
    Functor J;  // C -> D
    Functor G;  // B -> D
    std::vector<int> classifier;  // D object -> 0 (C part) / 1 (V part)

    std::vector<int> obj_from_C;  // C object -> D object
    std::vector<int> obj_from_V;  // B object -> D object, -1 outside V

    std::vector<DMorKind> kind;    // per D morphism
    std::vector<int> origin;       // CPart/Hat: C morphism; VPart: B morphism
    std::vector<int> hat_cosieve;  // Hat: the B object u in U; -1 otherwise

    // induced right adjoint left inverse (J -| S, nu) on the minimal cosieve
    // Y = C ∪ U of the C part in D
    std::vector<int> y_objs;  // D objects, ascending
    std::vector<int> S_obj;   // D object -> C object on Y, -1 outside
    std::vector<int> S_mor;   // D morphism within Y -> C morphism, -1 otherwise
    std::vector<int> nu;      // D object u -> the D morphism nu_u, -1 outside Y

    int hat(int c_obj, int u_b_obj, int c_mor) const;  // D morphism id

private:
    friend DwyerPushout dwyer_pushout(const DwyerWitness&, const Functor&);
    std::map<std::tuple<int, int, int>, int> hat_index_;
};

/// Explicit pushout of the Dwyer witness along F: A -> C. The witness's
/// sieve objects must name the domain of F (same order as F's objects).
DwyerPushout dwyer_pushout(const DwyerWitness& wit, const Functor& F);

/// Checks the §2 structure of a computed pushout literally: hom cardinality
/// formula |D(c,u)| = |C(c, F(R(u)))|, the emptiness pattern, joint object
/// surjectivity, full faithfulness of J and G, and commutation of the mixed
/// composition square on every composable triple. Empty result = all good.
std::vector<std::string> check_pushout_formulas(const DwyerPushout& po, const DwyerWitness& wit,
                                                const Functor& F);

/// Runs is_dwyer on the induced inclusion J: C -> D and verifies that the
/// stored (S, nu) data is itself a valid witness (the recomputed one may
/// differ by the deterministic terminal-object choice).
struct ClosureCheck {
    DwyerResult recomputed;
    std::vector<std::string> stored_witness_findings;
    bool ok = false;
};

ClosureCheck verify_pushout_dwyer_closure(const DwyerPushout& po);

/// Isomorphism-of-categories search: exhaustive over object bijections with
/// hom-profile pruning, then morphism assignment by backtracking. Guarded.
struct IsoResult {
    bool isomorphic = false;
    std::vector<int> obj_map;  // c1 object -> c2 object
    std::vector<int> mor_map;
    std::string reason;
};

IsoResult iso_check(const FinCategory& c1, const FinCategory& c2, int obj_guard = 9);

/// The mediating functor out of a saturated pushout determined by a cocone
/// (H1: B -> E, H2: C -> E with H1 I = H2 F), by evaluating representative
/// generator words. Returns nullopt if the evaluation is not functorial.
std::optional<Functor> mediating_functor(const PushoutPresentation& pp,
                                         const SaturationResult& sat, const Functor& H1,
                                         const Functor& H2);

/// Cross-check of the explicit construction against the presentation oracle:
/// the canonical comparison functor must be an isomorphism.
struct OracleAgreement {
    bool oracle_finite = false;
    bool agrees = false;
    std::string detail;
    std::optional<Functor> mediating;  // oracle pushout -> explicit pushout, when it agrees
};

OracleAgreement check_oracle_agreement(const DwyerPushout& po, const DwyerWitness& wit,
                                       const Functor& F, const SaturationOptions& opts = {});

}  // namespace fincat

#endif
