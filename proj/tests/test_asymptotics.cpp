#include "twopart/asymptotics.hpp"

#include "doctest.h"
#include "twopart/constructions.hpp"

using namespace twopart;

TEST_CASE("s_profile exact values") {
    const SProfile s82 = s_profile(8, 2);
    CHECK(s82.s == 18);
    CHECK(s82.ratio == BigRatio(1, 2));
    const SProfile s81 = s_profile(8, 1);
    CHECK(s81.s == 4);
    CHECK(s81.ratio == BigRatio(1, 4));
    CHECK_THROWS_AS(s_profile(8, 3), std::invalid_argument);
    CHECK_THROWS_AS(s_profile(10, 1), std::invalid_argument);
}

TEST_CASE("s_profile equals the squared canonical class sizes of one level") {
    for (int n = 4; n <= 64; n += 4) {
        const auto prof = canonical_class_sizes(n / 2);
        for (int i = 1; i <= n / 4; ++i) {
            BigCount sum = 0;
            const std::string star_prefix = "star" + std::to_string(i) + ".";
            const std::string tail = "tail" + std::to_string(i);
            for (const auto& [label, size] : prof.sizes)
                if (label.rfind(star_prefix, 0) == 0 || label == tail) sum += size * size;
            REQUIRE(s_profile(n, i).s == sum);
        }
    }
}

TEST_CASE("s_profile ratio window near n/4 at n = 4096") {
    const long long n = 4096;
    const long long i = n / 4 - isqrt_floor(n);  // ceil(sqrt(4096)) = 64 exactly
    const SProfile sp = s_profile(n, i);
    CHECK(sp.ratio > BigRatio(30, 100));
    CHECK(sp.ratio < BigRatio(37, 100));
}

TEST_CASE("rd sequences") {
    const RatioSeries r81 = rd_sequences(8, 1);
    REQUIRE(r81.terms.size() == 4);
    for (const auto& [l, r] : r81.terms) CHECK(r == BigRatio(1, 4));
    CHECK(r81.sum == 1);

    const RatioSeries r409 = rd_sequences(40, 9);
    REQUIRE(r409.d_terms.size() >= 1);
    CHECK(r409.d_terms[0].first == 2);
    CHECK(r409.d_terms[0].second == BigRatio(11, 19));
    // 1/2 + (m - l/2 + 3/2)/(n/2 - l + 1) with m = n/4 - i = 1, l = 2
    CHECK(BigRatio(1, 2) + BigRatio(2 * 1 - 2 + 3, 2 * (20 - 2 + 1)) == BigRatio(11, 19));

    CHECK(r409.terms[0].second == BigRatio(9, 20));  // r_1 = i/(n/2)
    CHECK_THROWS_AS(rd_sequences(12, 4), std::invalid_argument);
}

TEST_CASE("rd sum and ratio identity for every valid (n, i) up to 256") {
    for (long long n = 4; n <= 256; n += 4)
        for (long long i = 1; i <= n / 4; ++i) {
            const RatioSeries rs = rd_sequences(n, i);
            REQUIRE(rs.sum == 1);
            REQUIRE(rs.terms[0].second == BigRatio(i, n / 2));
            for (const auto& [l, d] : rs.d_terms)
                REQUIRE(d == BigRatio(n / 2 - l - i + 2, n / 2 - l + 1));
        }
}

TEST_CASE("f1 profile") {
    const F1Profile f8 = f1_profile(8);
    CHECK(f8.f1 == 17);
    CHECK(f8.vandermonde_ok);
    const F1Profile f4 = f1_profile(4);
    CHECK(f4.f1 == 1);
    CHECK(f4.vandermonde_ok);
    for (long long n = 4; n <= 256; n += 4) REQUIRE(f1_profile(n).vandermonde_ok);
    const F1Profile big = f1_profile(4096);
    CHECK(big.ratio > BigRatio(45, 100));
    CHECK(big.ratio < BigRatio(1, 2));
}

TEST_CASE("fact3 ratio") {
    CHECK(fact3_ratio({BigRatio(1, 2), BigRatio(1, 4), BigRatio(1, 8), BigRatio(1, 16),
                       BigRatio(1, 16)}) == BigRatio(43, 128));
    CHECK(fact3_ratio({BigRatio(1)}) == 1);
    CHECK(fact3_ratio({BigRatio(1, 2), BigRatio(1, 2)}) == BigRatio(1, 2));
    CHECK_THROWS_AS(fact3_ratio({BigRatio(1, 4), BigRatio(3, 4)}), std::invalid_argument);
    CHECK_THROWS_AS(fact3_ratio({BigRatio(1, 2), BigRatio(1, 4)}), std::invalid_argument);
    CHECK_THROWS_AS(fact3_ratio({}), std::invalid_argument);
}

TEST_CASE("coverage fraction") {
    CHECK(coverage_fraction(16, 1) == BigRatio(64839, 65536));
    CHECK(coverage_fraction(4, 0) == BigRatio(11, 16));
    CHECK(coverage_fraction(9, 3) == 1);
    CHECK(coverage_fraction(25, 5) == 1);
    for (long long y : {5, 12, 20, 33}) {
        BigRatio prev = 0;
        for (long long K = 0; K <= 8; ++K) {
            const BigRatio c = coverage_fraction(y, K);
            REQUIRE(c >= prev);
            // trivial bound: at most lo levels are missing, each of size at
            // most the middle binomial
            const long long lo = std::max<long long>(0, (y + 1) / 2 - K * isqrt_floor(y));
            const BigCount missing = BigCount(lo) * binomial(y, y / 2);
            const BigRatio bound = BigRatio(1) - BigRatio(missing, pow2(y));
            REQUIRE(c >= bound);
            prev = c;
        }
        REQUIRE(prev == 1);
    }
}

TEST_CASE("ff coverage") {
    CHECK(ff_coverage(4, 2) == BigRatio(1, 3));
    CHECK(ff_coverage(4, 3) == 1);
    for (long long i = 1; i <= 12; ++i) REQUIRE(ff_coverage(12, i) <= 1);
}

TEST_CASE("construction ratio series") {
    const auto single = construction_ratio_series({8}, false, BigRatio(0));
    REQUIRE(single.size() == 1);
    CHECK(single[0].count == 40);
    CHECK(single[0].ratio == BigRatio(4, 7));

    const auto series =
        construction_ratio_series({8, 16, 32, 64, 128, 256, 512, 1024}, false, BigRatio(0));
    REQUIRE(series.size() == 8);
    for (std::size_t t = 1; t < series.size(); ++t)
        REQUIRE(series[t].ratio > series[t - 1].ratio);
    CHECK(series.back().ratio > BigRatio(55, 100));
    CHECK(series.back().ratio < BigRatio(2, 3));

    const auto par =
        construction_ratio_series({8, 16, 32, 64, 128, 256, 512, 1024}, false, BigRatio(0), 4);
    for (std::size_t t = 0; t < series.size(); ++t) REQUIRE(par[t].ratio == series[t].ratio);

    CHECK_THROWS_AS(construction_ratio_series({10}, false, BigRatio(0)), std::invalid_argument);
}

TEST_CASE("equal-part count at n = 1024 sits inside its limiting window") {
    const BigCount count = two_i2s_equal_count(1024, false, BigRatio(0), true);
    const BigCount whole = binomial(1024, 512);
    CHECK(2 * count > whole);       // ratio > 1/2
    CHECK(3 * count < 2 * whole);   // ratio < 2/3
}
