#pragma once

// Exact-rational evaluation of the ratio sequences and coverage fractions
// behind the equal-part 2I2S size analysis, checked at finite n. No
// floating point anywhere; windows on limiting values are asserted by the
// callers as exact rational comparisons.

#include "twopart/core.hpp"

namespace twopart {

struct SProfile {
    BigCount s;      // squared-class-size sum at one level
    BigRatio ratio;  // s / C(n/2, i)^2
};

// S_i = C(2i-1,i)^2 + sum_k C(n/2-1-k, i-1)^2 against C(n/2,i)^2.
SProfile s_profile(long long n, long long i);

struct RatioSeries {
    long long n = 0;
    long long i = 0;
    // r_l = C(n/2-l, i-1)/C(n/2,i) for l = 1..n/2-2i+1, then the closing
    // term C(2i-1,i)/C(n/2,i); indices are the l values.
    std::vector<std::pair<long long, BigRatio>> terms;
    // d_l = r_l / r_{l-1} over the regular terms, l = 2..n/2-2i+1.
    std::vector<std::pair<long long, BigRatio>> d_terms;
    BigRatio sum;  // always exactly 1
};

RatioSeries rd_sequences(long long n, long long i);

struct F1Profile {
    BigCount f1;          // sum of C(n/2,i)^2 over the top half of levels
    BigRatio ratio;       // f1 / C(n, n/2)
    bool vandermonde_ok;  // 2*f1 + C(n/2,n/4)^2 == C(n,n/2)
};

F1Profile f1_profile(long long n);

// Sum of squares of a nonincreasing positive sequence with total 1.
BigRatio fact3_ratio(const std::vector<BigRatio>& a);

// Fraction of 2^y covered by the levels s >= ceil(y/2) - K*floor(sqrt(y)).
BigRatio coverage_fraction(long long y, long long K);

// (|G1| + |G2|) / C(y,i) for the ff_pair classes at level i.
BigRatio ff_coverage(long long y, long long i);

struct ConstructionRatio {
    long long n = 0;
    BigCount count;
    BigRatio ratio;  // count / C(n, n/2)
};

// two_i2s_equal_count(n, ..., include_empty=true) / C(n, n/2) for each n,
// output sorted by n. threads > 1 evaluates the entries in parallel.
std::vector<ConstructionRatio> construction_ratio_series(std::vector<long long> ns,
                                                         bool modified, const BigRatio& beta,
                                                         int threads = 1);

}  // namespace twopart
