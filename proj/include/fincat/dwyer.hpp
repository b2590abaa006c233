#ifndef FINCAT_DWYER_HPP
#define FINCAT_DWYER_HPP

#include <string>
#include <vector>

#include "fincat/category.hpp"

namespace fincat {

/// 0/1 object classifier of a sieve; extends to a functor to the walking
/// arrow exactly when no morphism leaves the complement into the sieve.
struct SieveWitness {
    std::vector<int> classifier;  // object -> 0 (sieve) / 1 (complement)
};

struct SieveCheck {
    bool ok = false;
    SieveWitness witness;
    int refuting_mor = -1;  // a morphism from the complement into the subset
};

SieveCheck is_sieve(const FinCategory& b, const std::vector<int>& subset);

/// Smallest cosieve containing the given objects: the objects receiving an
/// arrow from the subset. Idempotent.
std::vector<int> minimal_cosieve(const FinCategory& b, const std::vector<int>& subset);

enum class DwyerObstruction { None, NotFull, NotASieve, NoTerminalObject };

/// Full witness data for a Dwyer inclusion A into B: the sieve classifier,
/// the minimal cosieve W containing A, U = W minus A, the retraction
/// R: W -> A with identity unit, and the counit components eps_w: R(w) -> w.
/// All invariants are machine-checked on construction.
struct DwyerWitness {
    FinCategory ambient;            // B
    std::vector<int> sieve_objs;    // A, ascending
    SieveWitness sieve;
    std::vector<int> cosieve_objs;  // W, ascending
    std::vector<int> u_objs;        // U = W ∩ V, ascending
    std::vector<int> retract_obj;   // B object -> A object, -1 outside W
    std::vector<int> retract_mor;   // B morphism within W -> morphism within A, -1 otherwise
    std::vector<int> counit;        // B object w -> morphism R(w) -> w, -1 outside W

    bool in_sieve(int obj) const { return sieve.classifier[obj] == 0; }
    bool in_cosieve(int obj) const { return retract_obj[obj] >= 0; }
};

struct DwyerResult {
    bool ok = false;
    DwyerWitness witness;
    DwyerObstruction obstruction = DwyerObstruction::None;
    int obstruction_obj = -1;  // NoTerminalObject: the cosieve object
    int obstruction_mor = -1;  // NotASieve: the refuting morphism
    std::string detail;

    std::string obstruction_name() const;
};

/// Decides the Dwyer property of the full subcategory inclusion spanned by
/// `subset`. Obstructions are reported in the fixed order: sieve first, then
/// missing terminal objects by ascending object index.
DwyerResult is_dwyer(const FinCategory& b, const std::vector<int>& subset);

/// Functor form: first verifies that the functor is injective on objects,
/// full and faithful (obstruction NotFull otherwise), then decides on the
/// image subset.
DwyerResult is_dwyer(const Functor& inclusion);

DwyerResult is_co_dwyer(const FinCategory& b, const std::vector<int>& subset);

/// Re-runs every witness equation (unit identity, counit naturality,
/// triangle identities, terminality of (R(w), eps_w) in each comma category).
/// Returns findings; empty means the witness is sound.
std::vector<std::string> check_witness(const DwyerWitness& w);

/// Verifies a user-supplied retract diagram exhibiting `i` as a retract of
/// the Dwyer map `j`: section/retraction pairs on both ends with commuting
/// squares. No search is performed.
struct RetractDiagram {
    Functor sec_dom;  // dom(i) -> dom(j)
    Functor ret_dom;  // dom(j) -> dom(i)
    Functor sec_cod;  // cod(i) -> cod(j)
    Functor ret_cod;  // cod(j) -> cod(i)
};

std::vector<std::string> check_pseudo_dwyer(const Functor& i, const Functor& j,
                                            const RetractDiagram& d);

}  // namespace fincat

#endif
