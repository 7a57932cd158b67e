#pragma once

// Lower-bound constructions: chain and canonical partitions of a power set
// into intersecting (Sperner) classes, the product construction gluing one
// partition per part, and the named extremal families built from them.

#include "twopart/core.hpp"

namespace twopart {

// Pairing of class indices between two partitions, injective on both sides.
struct Matching {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

// Union over matched class pairs of {A | (B << k)}. PA lives on X1 (ground
// size k), PB on X2 (ground size n-k); PB masks are shifted into place.
SetFamily product_family(const LabeledPartition& pa, const LabeledPartition& pb,
                         const Matching& matching, const GroundSplit& split);

// Largest-with-largest matching (ties by original class order) and the
// resulting product size, sum of matched size products.
std::pair<Matching, BigCount> descending_match(const ClassSizeProfile& a,
                                               const ClassSizeProfile& b);

// Partition of 2^[0,y) into y intersecting classes of sizes 2^{y-1},...,1
// (class i = sets with minimum element i) plus a final {emptyset} class.
// Prefix sums of the class sizes meet the Kleitman union bound exactly.
LabeledPartition chain_partition(int y);
ClassSizeProfile chain_class_sizes(int y);

// Partition of 2^[0,y) into intersecting Sperner classes: full levels above
// y/2, per-level star classes, and per-level tail classes on the last
// 2l-1 elements.
LabeledPartition canonical_partition(int y);

// Class sizes of canonical_partition by formula only; valid for any y.
ClassSizeProfile canonical_class_sizes(int y);

// Uniform intersecting pair on [0,y): i-sets majorizing the first half, and
// remaining i-sets majorizing the second half.
FamilyPair ff_pair(int y, int i);

// Sizes of the ff_pair classes by closed-form sums (no materialization).
std::pair<BigCount, BigCount> ff_pair_sizes(long long y, long long i);

// Canonical partition with all levels i in the replacement window
// [y/2 - (beta/(2*sqrt2))*sqrt(y), y/2] rewritten: star and tail classes of
// a replaced level become the two ff_pair classes, leftover i-sets go to a
// discard class labeled UNUSED that no matching should touch. Levels whose
// ff_pair is empty are kept as-is. The window test is done in exact rational
// arithmetic on squared quantities.
LabeledPartition modified_canonical_partition(int y, const BigRatio& beta);

// Whether level i of a ground set of size y falls in the replacement window.
bool ff_replacement_level(long long y, long long i, const BigRatio& beta);

// 2I family for k = 1: {x1} paired with the star of the first X2 element,
// {emptyset} paired with the near-star avoiding it. Size (3/8)*2^n.
SetFamily two_i_singleton(int n);

// 2I family for equal parts from chain partitions; size (2^n + 2)/3.
SetFamily two_i_equal(int n);

// 2I2S family for a small first part: canonical classes of X1 sorted by
// decreasing size, class i paired with the full level x2/2 + i of X2.
SetFamily two_i2s_smallpart(const GroundSplit& split);

// 2I2S family for equal parts: product of (optionally modified) canonical
// partitions of both halves under the descending matching.
SetFamily two_i2s_equal(int n, bool modified = false, const BigRatio& beta = BigRatio(0));

// Exact size of two_i2s_equal by formula alone; include_empty adds the
// {emptyset} x {emptyset} product class. Valid for any n divisible by 4.
// threads > 1 splits the level sums (exact arithmetic, order-independent).
BigCount two_i2s_equal_count(int n, bool modified, const BigRatio& beta, bool include_empty,
                             int threads = 1);

enum class CrossVariant { StarEmpty, TwoStars, Threshold };

// Extremal cross-Sperner pairs with |F| + |G| = 2^{n-1}: a full star with
// the empty family, two disjoint relative stars, or the size-threshold pair
// (member sets containing element 0 of size <= k vs. avoiders of size >= k).
FamilyPair cross_sperner_pair_example(int n, CrossVariant variant, int threshold_k = -1);

// Product of two stars, one per part; size 2^{n-2}, a 1I1S family.
SetFamily one_i1s_product(const GroundSplit& split, int star_a, int star_b);

}  // namespace twopart
