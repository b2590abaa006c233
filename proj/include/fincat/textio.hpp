#ifndef FINCAT_TEXTIO_HPP
#define FINCAT_TEXTIO_HPP

#include <stdexcept>
#include <string>

#include "fincat/category.hpp"
#include "fincat/dwyer.hpp"
#include "fincat/present.hpp"
#include "fincat/sset.hpp"

namespace fincat {

struct parse_error : std::runtime_error {
    int line = 0;
    parse_error(const std::string& msg, int line_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

/// Category text format. Identities are implicit; `1_<object>` names them in
/// composition right-hand sides. The printer emits the canonical form, which
/// reparses to an identical category when the input keeps identities at
/// indices 0..n-1.
///
///   category C
///   objects: a b c
///   morphisms:
///     f: a -> b
///     g: b -> c
///     h: a -> c
///   compose:
///     g . f = h
std::string print_category(const FinCategory& c);
FinCategory parse_category(const std::string& text);

/// Presentation format: as above with `generators:` and a `relations:` block
/// of `path = path` lines, `.` composing right to left, `1_x` the empty path.
std::string print_presentation(const PresentedCategory& p);
PresentedCategory parse_presentation(const std::string& text);

/// Functor format against known end categories:
///   functor F
///   objects:
///     a -> x
///   morphisms:
///     f -> g
std::string print_functor(const Functor& f);
Functor parse_functor(const std::string& text, const FinCategory& dom, const FinCategory& cod);

/// Level-by-level simplicial set tables:
///   sset X
///   dim: 2
///   count 0: 3
///   face 1 0: 1 2 2
///   degen 0 0: 0 1 2
std::string print_sset(const TruncatedSSet& x);
TruncatedSSet parse_sset(const std::string& text);

/// Witness serialization (JSON text) embedding the ambient category, for
/// `check-dwyer --out` and `flat-check`.
std::string witness_to_json(const DwyerWitness& w);
DwyerWitness witness_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace fincat

#endif
