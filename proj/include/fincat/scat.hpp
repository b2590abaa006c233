#ifndef FINCAT_SCAT_HPP
#define FINCAT_SCAT_HPP

#include <string>
#include <vector>

#include "fincat/dwyer.hpp"
#include "fincat/homology.hpp"
#include "fincat/pushout.hpp"
#include "fincat/sset.hpp"

namespace fincat {

/// A simplicial category as a truncated identity-on-objects simplicial
/// object in categories: one FinCategory per level over a shared object set,
/// with face/degeneracy functors given by their morphism maps.
struct LevelwiseSCat {
    std::string name = "S";
    int dim = 0;
    std::vector<FinCategory> level;                    // size dim + 1
    std::vector<std::vector<std::vector<int>>> face;   // face[k][i]: level k mor -> level k-1 mor
    std::vector<std::vector<std::vector<int>>> degen;  // degen[k][i]: level k mor -> level k+1 mor

    int num_objects() const { return level.empty() ? 0 : level[0].num_objects(); }
};

/// Levelwise validity, identity-on-objects functoriality of all structure
/// maps, and the simplicial identities among them.
std::vector<std::string> validate_scat(const LevelwiseSCat& s);

/// disc: the constant levelwise family on a category.
LevelwiseSCat disc(const FinCategory& c, int dim);

bool scat_equal(const LevelwiseSCat& a, const LevelwiseSCat& b);

/// The hom simplicial set S(x, y): k-simplices are level-k morphisms x -> y.
struct HomSSet {
    TruncatedSSet X;
    std::vector<std::vector<int>> simplex_mor;  // per level: simplex -> morphism
    std::vector<std::vector<int>> mor_simplex;  // per level: morphism -> simplex or -1
};

HomSSet hom_sset(const LevelwiseSCat& s, int x, int y);

/// Path components of each hom simplicial set, with the induced composition.
/// Requires dim >= 1. Composition well-definedness is re-checked.
struct Pi0Result {
    FinCategory cat;
    std::vector<int> mor_class;  // level-0 morphism -> pi0 morphism
};

Pi0Result pi0(const LevelwiseSCat& s);

/// A simplicial functor between levelwise simplicial categories: one object
/// map, one morphism map per level, commuting with the structure maps.
struct SCatFunctor {
    std::string name = "H";
    LevelwiseSCat dom, cod;
    std::vector<int> obj_map;
    std::vector<std::vector<int>> mor_map;  // per level
};

std::vector<std::string> validate_scat_functor(const SCatFunctor& f);

SCatFunctor disc_functor(const Functor& f, int dim);
SCatFunctor identity_scat_functor(const LevelwiseSCat& s);
SCatFunctor compose_scat_functors(const SCatFunctor& g, const SCatFunctor& f);

/// Levelwise explicit Dwyer pushout of disc A -> S along the witness; the
/// structure maps are induced through the hat tables. Also returns the
/// levelwise cocone functors.
struct LevelwisePushout {
    LevelwiseSCat scat;
    std::vector<DwyerPushout> per_level;
    SCatFunctor from_S;       // J levelwise
    SCatFunctor from_discB;   // G levelwise
};

LevelwisePushout levelwise_dwyer_pushout(const DwyerWitness& wit, const SCatFunctor& F);

/// Levelwise pushout through the presentation oracle, for spans whose left
/// leg need not be Dwyer: every level is saturated independently and the
/// structure maps are the mediating functors. Throws guard_error if any
/// level is inconclusive.
struct PresentedLevelwisePushout {
    LevelwiseSCat scat;
    std::vector<PushoutPresentation> pp;
    std::vector<SaturationResult> sat;
    SCatFunctor from_S;
    SCatFunctor from_discB;
};

PresentedLevelwisePushout levelwise_presented_pushout(const Functor& I, const SCatFunctor& F,
                                                      const SaturationOptions& opts = {});

/// Dwyer-Kan necessary-condition report for a simplicial functor: per object
/// pair, bijectivity of pi0 on homs and equality of hom homology through the
/// degree bound; essential surjectivity of pi0 of the functor. Consistent
/// means every checked condition holds; it is not a proof of equivalence.
struct DKReport {
    struct HomVerdict {
        int x = 0, y = 0;
        bool pi0_bijective = false;
        bool homology_agrees = false;
    };
    bool consistent = true;
    std::vector<HomVerdict> homs;
    bool essentially_surjective = true;
    // first failure witness
    bool has_witness_pair = false;
    int witness_x = -1, witness_y = -1;
    int witness_obj = -1;  // essential-surjectivity failure

    std::string to_string() const;
};

DKReport dk_check(const SCatFunctor& h, int homology_degree);

/// Builds both levelwise pushouts of the witness along F' and M . F', the
/// induced comparison functor H between them, and reports dk_check(H).
/// M must itself be dk_check-consistent (the hypothesis of the flatness
/// property); this is verified and reported.
struct FlatInstanceReport {
    DKReport m_report;  // the hypothesis on M
    DKReport h_report;  // the conclusion on the induced H
    bool applicable = false;
};

FlatInstanceReport flat_instance_check(const DwyerWitness& wit, const SCatFunctor& Fprime,
                                       const SCatFunctor& M, int homology_degree);

/// Same check with pushouts computed by the presentation oracle, usable for
/// non-Dwyer inclusions I: A -> B.
FlatInstanceReport flat_instance_check_presented(const Functor& I, const SCatFunctor& Fprime,
                                                 const SCatFunctor& M, int homology_degree,
                                                 const SaturationOptions& opts = {});

}  // namespace fincat

#endif
