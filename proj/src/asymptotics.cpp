#include "twopart/asymptotics.hpp"

#include "twopart/constructions.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>

namespace twopart {

namespace {

void require_quarter(long long n, const char* who) {
    if (n < 4 || n % 4 != 0)
        throw std::invalid_argument(std::string(who) + ": n must be divisible by 4");
}

}  // namespace

SProfile s_profile(long long n, long long i) {
    require_quarter(n, "s_profile");
    if (i < 1 || i > n / 4) throw std::invalid_argument("s_profile: need 1 <= i <= n/4");
    const long long y = n / 2;
    const BinomialCache binom(y);
    BigCount s = binom(2 * i - 1, i) * binom(2 * i - 1, i);
    for (long long k = 0; k <= y - 2 * i; ++k)
        s += binom(y - 1 - k, i - 1) * binom(y - 1 - k, i - 1);
    const BigCount c = binom(y, i);
    return {s, BigRatio(s, c * c)};
}

RatioSeries rd_sequences(long long n, long long i) {
    require_quarter(n, "rd_sequences");
    if (i < 1 || i > n / 4) throw std::invalid_argument("rd_sequences: need 1 <= i <= n/4");
    const long long y = n / 2;
    const BinomialCache binom(y);
    const BigCount denom = binom(y, i);

    RatioSeries out;
    out.n = n;
    out.i = i;
    out.sum = 0;
    for (long long l = 1; l <= y - 2 * i + 1; ++l) {
        BigRatio r(binom(y - l, i - 1), denom);
        out.sum += r;
        out.terms.emplace_back(l, std::move(r));
    }
    BigRatio closing(binom(2 * i - 1, i), denom);
    out.sum += closing;
    out.terms.emplace_back(y - 2 * i + 2, std::move(closing));

    for (long long l = 2; l <= y - 2 * i + 1; ++l) {
        const BigRatio& prev = out.terms[l - 2].second;
        const BigRatio& cur = out.terms[l - 1].second;
        out.d_terms.emplace_back(l, cur / prev);
    }
    return out;
}

F1Profile f1_profile(long long n) {
    require_quarter(n, "f1_profile");
    const long long y = n / 2;
    const BinomialCache binom(n);
    BigCount f1 = 0;
    for (long long i = n / 4 + 1; i <= y; ++i) f1 += binom(y, i) * binom(y, i);
    const BigCount middle = binom(y, n / 4);
    const BigCount whole = binom(n, y);
    F1Profile out;
    out.f1 = f1;
    out.ratio = BigRatio(f1, whole);
    out.vandermonde_ok = 2 * f1 + middle * middle == whole;
    return out;
}

BigRatio fact3_ratio(const std::vector<BigRatio>& a) {
    if (a.empty()) throw std::invalid_argument("fact3_ratio: empty sequence");
    BigRatio sum = 0, sq = 0;
    for (std::size_t t = 0; t < a.size(); ++t) {
        if (a[t] <= 0) throw std::invalid_argument("fact3_ratio: terms must be positive");
        if (t > 0 && a[t] > a[t - 1])
            throw std::invalid_argument("fact3_ratio: terms must be nonincreasing");
        sum += a[t];
        sq += a[t] * a[t];
    }
    if (sum != 1) throw std::invalid_argument("fact3_ratio: terms must sum to 1");
    return sq;
}

BigRatio coverage_fraction(long long y, long long K) {
    if (y < 1) throw std::invalid_argument("coverage_fraction: y must be >= 1");
    if (K < 0) throw std::invalid_argument("coverage_fraction: K must be >= 0");
    const long long lo = std::max<long long>(0, (y + 1) / 2 - K * isqrt_floor(y));
    const BinomialCache binom(y);
    BigCount covered = 0;
    for (long long s = lo; s <= y; ++s) covered += binom(y, s);
    return BigRatio(covered, pow2(y));
}

BigRatio ff_coverage(long long y, long long i) {
    if (i < 1 || i > y) throw std::invalid_argument("ff_coverage: need 1 <= i <= y");
    auto [s1, s2] = ff_pair_sizes(y, i);
    return BigRatio(s1 + s2, binomial(y, i));
}

std::vector<ConstructionRatio> construction_ratio_series(std::vector<long long> ns,
                                                         bool modified, const BigRatio& beta,
                                                         int threads) {
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    for (long long n : ns) require_quarter(n, "construction_ratio_series");

    std::vector<ConstructionRatio> out(ns.size());
    const auto eval = [&](std::size_t t) {
        const long long n = ns[t];
        const BigCount count = two_i2s_equal_count(static_cast<int>(n), modified, beta,
                                                   /*include_empty=*/true);
        out[t] = {n, count, BigRatio(count, binomial(n, n / 2))};
    };
#ifdef _OPENMP
    const int tc = threads == 0 ? omp_get_max_threads() : threads;
    if (tc > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(tc)
        for (std::size_t t = 0; t < ns.size(); ++t) eval(t);
    } else
#endif
    {
        (void)threads;
        for (std::size_t t = 0; t < ns.size(); ++t) eval(t);
    }
    return out;
}

}  // namespace twopart
