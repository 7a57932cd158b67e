#pragma once

// Property predicates over families and family pairs: intersecting /
// Sperner checks, two-part trace properties, cross-Sperner pairs, and the
// lattice and difference operators. Two evaluation routes are provided for
// the two-part properties: a pairwise conflict test (`violates`) and a
// trace-family evaluation straight from the definitions; they must agree.

#include "twopart/core.hpp"

#include <optional>

namespace twopart {

enum class PropertyId {
    IntersectingLenient,
    IntersectingStrict,
    Sperner,
    TwoPartSperner,
    TwoI,
    TwoI2S,
    OneI1S,
    CrossSpernerPair,
};

// Lenient: every pair of distinct members intersects, so {emptyset} and all
// singleton families pass. Strict: additionally the empty set is not a
// member (equivalently, every ordered pair, a set with itself included,
// intersects).
enum class IntersectMode { Lenient, Strict };

enum class TraceSide { OnX1, OnX2 };

const char* property_name(PropertyId p);
bool is_two_part_property(PropertyId p);

bool is_intersecting(const SetFamily& f, IntersectMode mode);
bool is_sperner(const SetFamily& f);

// Trace family on `side`: members whose trace on the opposite (fixed) part
// equals `fixed`, restricted to the requested side. Element ids are kept,
// so the result lives on the same ground set with masks inside that side.
SetFamily trace_family(const SetFamily& f, const GroundSplit& split, TraceSide side,
                       SubsetMask fixed);

// Pairwise conflict between two distinct subsets under a two-part property.
bool violates(PropertyId p, SubsetMask s, SubsetMask t, const GroundSplit& split);

// Whole-family evaluation by the pairwise route (no distinct pair violates).
bool satisfies(PropertyId p, const SetFamily& f, const GroundSplit& split);

// Whole-family evaluation by trace families, straight from the definitions.
// Agrees with `satisfies` on every input; kept separate so the two routes
// can be checked against each other.
bool satisfies_by_traces(PropertyId p, const SetFamily& f, const GroundSplit& split);

// First violating pair in mask order, if any.
std::optional<std::pair<SubsetMask, SubsetMask>> find_violation(PropertyId p,
                                                                const SetFamily& f,
                                                                const GroundSplit& split);

// Both families strict-intersecting and no cross containment F <= G or
// G <= F (inclusive, so a shared member already violates).
bool is_cross_sperner_pair(const FamilyPair& p);
std::optional<std::pair<SubsetMask, SubsetMask>> find_cross_violation(const FamilyPair& p);

// Difference family {F \ F' : F, F' in the family}; contains the empty set
// whenever the input is nonempty.
SetFamily delta_family(const SetFamily& f);

// All pairwise intersections / unions across two families on one ground set.
SetFamily meet_family(const SetFamily& f, const SetFamily& g);
SetFamily join_family(const SetFamily& f, const SetFamily& g);

// All supersets / subsets of members within [0,n).
SetFamily up_closure(const SetFamily& f, int n);
SetFamily down_closure(const SetFamily& f, int n);

// LYM-type sum: sum over members of 1/C(n,|F|-1) for |F| <= n/2 and
// 1/C(n,|F|) for |F| > n/2. Requires a strict-intersecting Sperner family.
BigRatio gkk_lym_sum(const SetFamily& f, int n);

}  // namespace twopart
