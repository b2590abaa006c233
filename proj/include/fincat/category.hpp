#ifndef FINCAT_CATEGORY_HPP
#define FINCAT_CATEGORY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <string>
#include <vector>

namespace fincat {

/// Thrown when a configurable resource guard (morphism count, word count,
/// simplex count, search size) is exceeded.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite category stored with a total composition table.
///
/// Objects and morphisms are dense integer indices; labels are decorative.
/// compose(g, f) is defined exactly when tgt(f) == src(g); undefined entries
/// of the table hold -1. Construction helpers keep identities at indices
/// 0..num_objects()-1 (identity of object i is morphism i), but validate()
/// accepts any layout that satisfies the axioms.
struct FinCategory {
    std::string name = "C";
    std::vector<std::string> obj_names;
    std::vector<std::string> mor_names;
    std::vector<int> mor_src;
    std::vector<int> mor_tgt;
    std::vector<int> id_of;       // object -> identity morphism
    std::vector<int32_t> comp;    // comp[g * num_morphisms + f], -1 undefined

    int num_objects() const { return static_cast<int>(obj_names.size()); }
    int num_morphisms() const { return static_cast<int>(mor_src.size()); }

    int src(int m) const { return mor_src[m]; }
    int tgt(int m) const { return mor_tgt[m]; }
    int identity(int x) const { return id_of[x]; }
    bool is_identity(int m) const { return id_of[mor_src[m]] == m && mor_src[m] == mor_tgt[m]; }
    bool composable(int g, int f) const { return mor_tgt[f] == mor_src[g]; }

    /// g after f; -1 when not composable or the table entry is unset.
    int compose(int g, int f) const {
        return comp[static_cast<size_t>(g) * mor_src.size() + f];
    }

    std::vector<int> hom(int x, int y) const;
    int hom_size(int x, int y) const;

    /// Composes a chain given in diagrammatic order (first applied first).
    /// Empty chain yields the identity of `at`.
    int compose_chain(const std::vector<int>& chain, int at) const;
};

/// Cap on morphisms of any constructed category; mutable for callers that
/// need to lower or raise the desk-scale default of 10^4.
int& morphism_guard();

/// Structural equality of the underlying tables; ignores all labels.
bool table_equal(const FinCategory& a, const FinCategory& b);

/// Checks every category axiom exhaustively and returns one finding per
/// violated equation, with witnesses. Empty result means valid.
std::vector<std::string> validate(const FinCategory& c);

bool is_valid(const FinCategory& c);

/// Incremental construction: add all objects, then morphisms, then set
/// compositions of non-identity pairs. build() installs identities at
/// indices 0..n-1, fills unit compositions and verifies the axioms.
class CategoryBuilder {
public:
    explicit CategoryBuilder(std::string name = "C") { cat_.name = std::move(name); }

    int add_object(std::string label = "");
    int add_morphism(std::string label, int src, int tgt);
    void set_compose(int g, int f, int h);

    int identity(int x) const { return x; }
    FinCategory build(bool verify = true) const;

private:
    FinCategory cat_;
    bool sealed_objects_ = false;
    std::vector<std::tuple<int, int, int>> comps_;
};

/// A functor between finite categories, carrying copies of both ends.
struct Functor {
    std::string name = "F";
    FinCategory dom;
    FinCategory cod;
    std::vector<int> obj_map;
    std::vector<int> mor_map;

    int on_obj(int x) const { return obj_map[x]; }
    int on_mor(int m) const { return mor_map[m]; }
};

struct FunctorCheck {
    bool ok = true;
    std::string first_violation;
};

/// Verifies src/tgt/identity/composition preservation; reports the first
/// violated equation.
FunctorCheck is_functor(const Functor& f);

Functor identity_functor(const FinCategory& c);
Functor compose_functors(const Functor& g, const Functor& f);  // g after f
bool functor_equal(const Functor& a, const Functor& b);

bool is_injective_on_objects(const Functor& f);
bool is_faithful(const Functor& f);
bool is_full(const Functor& f);

/// src/tgt swapped, table transposed. Involutive at table level.
FinCategory opposite(const FinCategory& c);
Functor opposite(const Functor& f);

struct Coproduct {
    FinCategory cat;
    std::vector<Functor> injections;
    std::vector<int> obj_offset;
    std::vector<int> mor_offset;
};

Coproduct coproduct(const std::vector<FinCategory>& parts);

/// Full subcategory on the given objects, plus the inclusion functor.
struct Subcategory {
    FinCategory cat;
    Functor inclusion;
    std::vector<int> obj_to_ambient;
    std::vector<int> mor_to_ambient;
    std::vector<int> obj_from_ambient;  // -1 outside
    std::vector<int> mor_from_ambient;  // -1 outside
};

Subcategory full_subcategory(const FinCategory& c, const std::vector<int>& objects);

/// The slice A over w inside C: objects are pairs (a, f: a -> w) with a in
/// the (full) subcategory spanned by `a_objects`; morphisms (a,f) -> (a',f')
/// are g: a -> a' with f' . g = f.
struct CommaCategory {
    FinCategory cat;
    std::vector<std::pair<int, int>> objs;  // (object of C, morphism a -> w)
    std::vector<int> mor_underlying;        // comma morphism -> morphism of C
};

CommaCategory comma_over(const FinCategory& c, const std::vector<int>& a_objects, int w);

/// Least-index object receiving exactly one morphism from every object.
std::optional<int> find_terminal(const FinCategory& c);

/// True when x and y are isomorphic objects (a two-sided inverse pair exists).
bool objects_isomorphic(const FinCategory& c, int x, int y);

/// Partial functor assignment used to constrain enumeration; -1 = free.
struct FunctorPins {
    std::vector<int> obj;  // empty or size = dom objects
    std::vector<int> mor;  // empty or size = dom morphisms
};

/// Exhaustive backtracking enumeration of functors dom -> cod satisfying the
/// pins. Stops after `cap` functors (guard_error beyond). Deterministic
/// order.
std::vector<Functor> enumerate_functors(const FinCategory& dom, const FinCategory& cod,
                                        const FunctorPins& pins = {}, size_t cap = 200000);

/// Counts functors satisfying the pins without materializing them.
size_t count_functors(const FinCategory& dom, const FinCategory& cod,
                      const FunctorPins& pins = {}, size_t cap = 200000);

}  // namespace fincat

#endif
