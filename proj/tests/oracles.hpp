#pragma once

// Test-only oracles, independent of the implementation paths they check.

#include "twopart/core.hpp"
#include "twopart/properties.hpp"

#include <random>
#include <vector>

namespace twopart::oracle {

// Binomials by the additive Pascal recurrence only.
inline std::vector<std::vector<BigCount>> pascal_triangle(int rows) {
    std::vector<std::vector<BigCount>> tri(rows + 1);
    for (int n = 0; n <= rows; ++n) {
        tri[n].assign(n + 1, 0);
        tri[n][0] = tri[n][n] = 1;
        for (int k = 1; k < n; ++k) tri[n][k] = tri[n - 1][k - 1] + tri[n - 1][k];
    }
    return tri;
}

// Family with member masks taken from the bits of `bits` (works for n <= 5).
inline SetFamily family_of_bits(std::uint64_t bits, int n) {
    std::vector<SubsetMask> masks;
    for (int m = 0; m < (1 << n); ++m)
        if (bits >> m & 1) masks.push_back(static_cast<SubsetMask>(m));
    return normalize_family(std::move(masks), n);
}

// Largest family satisfying the property, by enumerating all 2^(2^n)
// families. Only sensible for n <= 3.
inline std::size_t brute_force_optimum(PropertyId p, const GroundSplit& split) {
    const int count = 1 << split.n;
    std::size_t best = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << count); ++bits) {
        SetFamily f = family_of_bits(bits, split.n);
        if (f.size() > best && satisfies(p, f, split)) best = f.size();
    }
    return best;
}

// Set-algebra helpers over sorted mask vectors.
inline SetFamily family_union(const SetFamily& a, const SetFamily& b) {
    std::vector<SubsetMask> u = a.masks;
    u.insert(u.end(), b.masks.begin(), b.masks.end());
    return normalize_family(std::move(u), a.n);
}

inline SetFamily family_minus(const SetFamily& a, const SetFamily& b) {
    SetFamily out(a.n);
    for (SubsetMask m : a.masks)
        if (!b.contains(m)) out.masks.push_back(m);
    return out;
}

inline bool family_subset(const SetFamily& a, const SetFamily& b) {
    for (SubsetMask m : a.masks)
        if (!b.contains(m)) return false;
    return true;
}

inline bool family_disjoint(const SetFamily& a, const SetFamily& b) {
    for (SubsetMask m : a.masks)
        if (b.contains(m)) return false;
    return true;
}

// One ordered cross-Sperner intersecting pair run through the closure
// objects of the cross-Sperner theorem's proof.
struct CrossClosureOutcome {
    bool meet_in_dprime = false;
    bool join_in_uprime = false;
    bool fg_vs_closures_disjoint = false;
    bool uprime_dprime_disjoint = false;
    bool size_bounds = false;
    bool all() const {
        return meet_in_dprime && join_in_uprime && fg_vs_closures_disjoint &&
               uprime_dprime_disjoint && size_bounds;
    }
};

inline CrossClosureOutcome cross_closure_check(const FamilyPair& p, int n) {
    const SetFamily fg = family_union(p.first, p.second);
    const SetFamily uprime = family_minus(up_closure(fg, n), fg);
    const SetFamily dprime = family_minus(down_closure(fg, n), fg);
    CrossClosureOutcome out;
    out.meet_in_dprime = family_subset(meet_family(p.first, p.second), dprime);
    out.join_in_uprime = family_subset(join_family(p.first, p.second), uprime);
    out.fg_vs_closures_disjoint =
        family_disjoint(p.first, p.second) && family_disjoint(p.first, uprime) &&
        family_disjoint(p.first, dprime) && family_disjoint(p.second, uprime) &&
        family_disjoint(p.second, dprime);
    out.uprime_dprime_disjoint = family_disjoint(uprime, dprime);
    out.size_bounds =
        p.first.size() <= dprime.size() && p.second.size() <= dprime.size();
    return out;
}

// Deterministic random family generator for property tests.
inline SetFamily random_family(std::mt19937_64& rng, int n, double density) {
    std::vector<SubsetMask> masks;
    const SubsetMask full = full_mask(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const std::uint64_t universe = std::uint64_t{1} << n;
    if (universe <= 4096) {
        for (SubsetMask m = 0; m <= full; ++m)
            if (coin(rng) < density) masks.push_back(m);
    } else {
        const int draws = static_cast<int>(density * 64) + 8;
        for (int t = 0; t < draws; ++t) masks.push_back(rng() & full);
    }
    return normalize_family(std::move(masks), n);
}

}  // namespace twopart::oracle
