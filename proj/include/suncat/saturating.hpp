// Active permutations of a supercard, maximum saturating sets via constrained
// bipartite matching, the optimum count chi, rotation/reflection structure,
// and the cyclic/dihedral classification of the automorphism part.
#pragma once

#include <optional>
#include <vector>

#include "suncat/canon.hpp"
#include "suncat/deck.hpp"
#include "suncat/families.hpp"
#include "suncat/graph.hpp"

namespace suncat {

enum class SatStatus { ok, unsupported_regime, hypothesis_not_met };

enum class CycleActionKind { none, rotation, reflection };

struct CycleAction {
    CycleActionKind kind = CycleActionKind::none;
    int alpha = 0;
    bool operator==(const CycleAction&) const = default;
};

enum class WImageClass { unknown, d_leaf, peripheral_non_d_leaf, adjacent_to_peripheral };

const char* w_image_class_name(WImageClass c);

// One realized active permutation lambda, together with its defining pair
// a = lambda^{-1}(v), b = lambda(w) and the classification flags.
struct SaturatingElement {
    Permutation lambda;
    int a = -1;
    int b = -1;
    bool in_BG = false;
    CycleAction action;
    bool in_tilde = false;
    WImageClass w_image_class = WImageClass::unknown;
};

struct SaturatingSet {
    std::vector<SaturatingElement> elements;
    bool contains_identity = false;
};

// The defining card equation: lambda((G+ - w) - a) = (G+ - v) - lambda(w).
bool card_equation_holds(const Graph& gplus, int v, int w, const Permutation& lambda);

// lambda(G+ - w) = G+ - lambda(w), the extra membership condition for B^G.
bool bg_membership_holds(const Graph& gplus, int w, const Permutation& lambda);

// A compatible pair (a, b): (G+ - w) - a and (G+ - v) - b are isomorphic,
// carrying a witness map (original ids; -1 at w and a).
struct CompatibilityEdge {
    int a;
    int b;
    std::vector<int> iso;
};

struct Compatibility {
    SatStatus status = SatStatus::ok;
    int v = -1;
    int w = -1;
    std::vector<CompatibilityEdge> edges;
};

// Requires non-isomorphic cards at v and w (else unsupported_regime).
Compatibility build_compatibility(const Graph& gplus, int v, int w);

struct SatResult {
    SatStatus status = SatStatus::ok;
    SaturatingSet set;
};

// |set| equals b(G+ - w, G+ - v); identity included; every element verified.
SatResult maximum_saturating_set(const Graph& gplus, int v, int w);

struct ChiResult {
    SatStatus status = SatStatus::ok;
    std::size_t chi = 0;
    SaturatingSet set;  // a G+-optimum maximum saturating set
};

// Two-level objective: size first (always b), then |X ∩ B^G|, solved as a
// 0/1-cost maximum matching with the identity edge forced.
ChiResult chi_and_optimum(const Graph& gplus, int v, int w);

// Fill in_BG, cycle action, in_tilde and the w-image class for a verified
// element of a sunshine supercard.
SaturatingElement classify_element(const SunshineSupercard& sc, SaturatingElement e);

CycleAction cycle_action_of(const SunshineSupercard& sc, const Permutation& p);

// Replace a tilde element whose mu+2 image lands on x_{nu-2} or x_{nu+2} by an
// equivalent permutation in B^U with the same a and b. Absent when the
// hypothesis fails.
std::optional<SaturatingElement> promote_to_BU(const SunshineSupercard& sc,
                                               const SaturatingElement& e);

struct PhiSubgroup {
    int delta = 0;
    SaturatingElement generator;  // the rotation phi: x_i -> x_{delta+i}
    std::size_t order = 0;        // c / delta
};

// Least positive cycle shift under which the degree sequence is invariant;
// absent when no non-trivial rotation is an automorphism.
std::optional<PhiSubgroup> delta_and_phi(const SunshineSupercard& sc);

enum class GroupKindTag { cyclic, dihedral, not_a_group, other_group };

struct GroupKind {
    GroupKindTag tag = GroupKindTag::not_a_group;
    std::size_t order = 0;
};

const char* group_kind_name(GroupKindTag t);

struct OptimumAutResult {
    SatStatus status = SatStatus::ok;
    SaturatingSet set;       // full maximum saturating set extending X_Aut
    std::size_t aut_count = 0;  // |X_Aut|
    GroupKind kind;
    int delta = 0;
    std::size_t phi_order = 0;
};

// Evaluates the two cyclic cases of the classification theorem; otherwise
// constructs the reflection pi (leaf-adjusted if necessary) and returns the
// dihedral set Phi ∪ Phi·pi, extended to a full maximum saturating set.
OptimumAutResult optimum_aut_set(const SunshineSupercard& sc);

// Decision procedure for B^U = Aut(U+): scans rotation and reflection shift
// candidates against the leaf-count vector.
bool bu_equals_aut(const SunshineSupercard& sc);

// All cycle shifts alpha with a rotation automorphism, and all beta with a
// reflection automorphism x_i -> x_{beta-i}.
std::vector<int> rotation_shifts(const SunshineSupercard& sc);
std::vector<int> reflection_shifts(const SunshineSupercard& sc);

// The rotation and reflection permutations themselves (leaves mapped index-wise).
Permutation rotation_permutation(const SunshineSupercard& sc, int alpha);
Permutation reflection_permutation(const SunshineSupercard& sc, int beta);

}  // namespace suncat
