#pragma once

// Exact extremal searches and exhaustive theorem scans. Every kernel has a
// serial reference path (threads == 1) and an OpenMP path (threads != 1);
// the optimum value is identical across thread counts, only witnesses and
// node counts may differ. Timeouts raise, they never degrade to a
// best-so-far answer.

#include "twopart/core.hpp"
#include "twopart/properties.hpp"

#include <chrono>
#include <optional>

namespace twopart {

struct SearchOptions {
    int threads = 1;  // 1 = serial reference, 0 = all hardware threads
    std::chrono::milliseconds time_limit{0};  // 0 = unlimited
};

// One vertex per subset mask; edges join pairs violating the property.
struct ConflictGraph {
    PropertyId property{};
    GroundSplit split;
    int n_vertices = 0;
    int words = 0;
    std::vector<std::uint64_t> adj;  // row-major bitset, n_vertices * words

    bool edge(int u, int v) const {
        return adj[static_cast<std::size_t>(u) * words + (v >> 6)] >> (v & 63) & 1;
    }
    int degree(int u) const;
};

ConflictGraph conflict_graph(PropertyId p, const GroundSplit& split,
                             const SearchOptions& opts = {});

struct SearchResult {
    PropertyId property{};
    GroundSplit split;
    BigCount optimum;
    SetFamily witness;                       // single-family searches, or the union
    std::optional<FamilyPair> witness_pair;  // pair searches
    std::vector<SetFamily> witness_parts;    // per-class witnesses of union searches
    std::uint64_t nodes_explored = 0;
    bool exact = true;
    std::uint64_t extremal_count = 0;  // pair searches: ordered optima found
};

// Exact maximum independent set by branch and bound with a greedy
// clique-cover bound. Witness re-validated against the property before
// returning.
SearchResult max_independent_set(const ConflictGraph& g, const SearchOptions& opts = {});

// Exact maximum of |F| + |G| over intersecting cross-Sperner pairs,
// with the number of ordered extremal pairs.
SearchResult max_cross_sperner_sum(int n, const SearchOptions& opts = {});

// Exact maximum of |F_1 u ... u F_m| over m-tuples of strict-intersecting
// families (Kleitman's bound 2^n - 2^{n-m} is attained).
SearchResult max_union_intersecting(int n, int m, const SearchOptions& opts = {});

// Exact maximum of |F u G| over pairs of strict-intersecting Sperner
// families; n odd.
SearchResult max_union_isp_pair(int n, const SearchOptions& opts = {});

enum class ScanSuite { MaricaSchonheim, AhlswedeDaykin, DownclosedIntersecting, GkkLym };

const char* scan_suite_name(ScanSuite s);

struct ScanOptions {
    int threads = 1;
    std::uint64_t samples = 0;  // Ahlswede-Daykin beyond the exhaustive range
    std::uint64_t seed = 0;
};

struct ScanReport {
    ScanSuite suite{};
    int n = 0;
    std::uint64_t instances_scanned = 0;
    std::vector<std::string> violations;  // empty iff the theorem holds on the range
    std::uint64_t extremal_count = 0;     // instances attaining the bound
};

ScanReport run_theorem_scan(ScanSuite suite, int n, const ScanOptions& opts = {});

// Enumeration helpers shared by scans, searches and tests. Families are
// bitsets over the 2^n subset masks, so n <= 5.
std::vector<std::uint64_t> enumerate_intersecting_families(int n);          // strict
std::vector<std::uint64_t> enumerate_intersecting_sperner_families(int n);  // strict
std::vector<std::uint64_t> enumerate_downward_closed_families(int n);

SetFamily family_from_bitset(std::uint64_t bits, int n);

}  // namespace twopart
