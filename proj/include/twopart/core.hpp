#pragma once

// Ground-set splits, bitmask set families, labeled partitions and exact
// arbitrary-precision arithmetic. Everything downstream builds on these
// types; all values are immutable after construction and safe to share
// across threads.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twopart {

using BigCount = boost::multiprecision::cpp_int;
using BigRatio = boost::multiprecision::cpp_rational;

// One subset of the ground set, element i <-> bit i.
using SubsetMask = std::uint64_t;

// Thrown when an operation would exceed its enumeration / search budget.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a search hits its wall-clock budget. Never carries a
// partial optimum.
struct timeout_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Largest n for which a single family can be materialized in one mask word.
inline constexpr int kMaxGroundSize = 62;

// Guard for operations that walk or materialize a full power set.
// Default 24, overridable through the TWOPART_MAX_N environment variable.
int materialization_limit();
void require_materializable(int n);

inline SubsetMask full_mask(int n) {
    return n <= 0 ? 0 : (~SubsetMask{0} >> (64 - n));
}

int popcount_mask(SubsetMask m);

// Ground set [0,n) split into X1 = {0..k-1} and X2 = {k..n-1}.
struct GroundSplit {
    int n = 0;
    int k = 0;

    GroundSplit() = default;
    GroundSplit(int n_, int k_) : n(n_), k(k_) {
        if (n < 0 || n > kMaxGroundSize || k < 0 || k > n)
            throw std::invalid_argument("GroundSplit: need 0 <= k <= n <= 62");
    }

    SubsetMask part1() const { return full_mask(k); }
    SubsetMask part2() const { return full_mask(n) ^ full_mask(k); }
    int size1() const { return k; }
    int size2() const { return n - k; }
};

// Sorted, deduplicated family of subsets over a fixed ground set.
struct SetFamily {
    int n = 0;
    std::vector<SubsetMask> masks;  // strictly increasing

    SetFamily() = default;
    explicit SetFamily(int n_) : n(n_) {}

    std::size_t size() const { return masks.size(); }
    bool empty() const { return masks.empty(); }
    bool contains(SubsetMask m) const;

    bool operator==(const SetFamily&) const = default;
};

// Sorts, deduplicates and validates raw masks against the ground size.
SetFamily normalize_family(std::vector<SubsetMask> raw, int n);

struct FamilyPair {
    SetFamily first;
    SetFamily second;

    FamilyPair() = default;
    FamilyPair(SetFamily f, SetFamily g) : first(std::move(f)), second(std::move(g)) {
        if (first.n != second.n)
            throw std::invalid_argument("FamilyPair: ground sizes differ");
    }
};

struct LabeledClass {
    std::string label;
    SetFamily family;
};

// Ordered list of disjoint families over one ground set. `complete`
// asserts that the classes partition the whole power set.
struct LabeledPartition {
    int n = 0;
    std::vector<LabeledClass> classes;
    bool complete = false;

    // Disjointness of all classes, and the power-set cover when `complete`.
    bool check_valid() const;
};

struct ClassSizeProfile {
    int n = 0;
    std::vector<std::pair<std::string, BigCount>> sizes;

    BigCount total() const;
};

// C(n,k), exact; 0 whenever k < 0, k > n or n < 0.
BigCount binomial(long long n, long long k);

// Factorial-backed evaluator for hot loops; build once, then read-only
// (and therefore safe to share across threads).
class BinomialCache {
  public:
    explicit BinomialCache(long long max_n);
    BigCount operator()(long long n, long long k) const;

  private:
    std::vector<BigCount> fact_;
};

BigCount pow2(long long e);

// floor(sqrt(v)) for v >= 0, exact.
long long isqrt_floor(long long v);

std::string ratio_string(const BigRatio& r);        // "p/q" ("p" when q == 1)
std::string ratio_decimal(const BigRatio& r, int digits = 6);

}  // namespace twopart
