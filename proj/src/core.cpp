#include "twopart/core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>

namespace twopart {

int materialization_limit() {
    static const int limit = [] {
        if (const char* env = std::getenv("TWOPART_MAX_N")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && v > 0 && v <= kMaxGroundSize) return static_cast<int>(v);
        }
        return 24;
    }();
    return limit;
}

void require_materializable(int n) {
    if (n < 0) throw std::invalid_argument("negative ground size");
    if (n > materialization_limit())
        throw resource_limit_error("ground size " + std::to_string(n) +
                                   " exceeds materialization limit " +
                                   std::to_string(materialization_limit()) +
                                   " (set TWOPART_MAX_N to raise)");
}

int popcount_mask(SubsetMask m) { return std::popcount(m); }

bool SetFamily::contains(SubsetMask m) const {
    return std::binary_search(masks.begin(), masks.end(), m);
}

SetFamily normalize_family(std::vector<SubsetMask> raw, int n) {
    if (n < 0 || n > kMaxGroundSize)
        throw std::invalid_argument("normalize_family: ground size out of range");
    const SubsetMask full = full_mask(n);
    for (SubsetMask m : raw)
        if (m & ~full)
            throw std::invalid_argument("normalize_family: mask has bits outside [0,n)");
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    SetFamily f(n);
    f.masks = std::move(raw);
    return f;
}

bool LabeledPartition::check_valid() const {
    if (n < 0 || n > kMaxGroundSize) return false;
    std::vector<SubsetMask> all;
    for (const auto& c : classes) {
        if (c.family.n != n) return false;
        all.insert(all.end(), c.family.masks.begin(), c.family.masks.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    if (complete) {
        if (n > kMaxGroundSize - 1) return false;
        if (all.size() != (std::size_t{1} << n)) return false;
    }
    return true;
}

BigCount ClassSizeProfile::total() const {
    BigCount t = 0;
    for (const auto& [label, s] : sizes) t += s;
    return t;
}

BigCount binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigCount r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

BinomialCache::BinomialCache(long long max_n) {
    if (max_n < 0) max_n = 0;
    fact_.resize(static_cast<std::size_t>(max_n) + 1);
    fact_[0] = 1;
    for (long long i = 1; i <= max_n; ++i) fact_[i] = fact_[i - 1] * i;
}

BigCount BinomialCache::operator()(long long n, long long k) const {
    if (k < 0 || n < 0 || k > n) return 0;
    if (static_cast<std::size_t>(n) >= fact_.size()) return binomial(n, k);
    return fact_[n] / (fact_[k] * fact_[n - k]);
}

BigCount pow2(long long e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    return BigCount{1} << e;
}

long long isqrt_floor(long long v) {
    if (v < 0) throw std::invalid_argument("isqrt_floor: negative input");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

std::string ratio_string(const BigRatio& r) {
    const BigCount num = boost::multiprecision::numerator(r);
    const BigCount den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string ratio_decimal(const BigRatio& r, int digits) {
    // Annotation only: exact values travel as "p/q" strings.
    BigCount num = boost::multiprecision::numerator(r);
    BigCount den = boost::multiprecision::denominator(r);
    const bool neg = num < 0;
    if (neg) num = -num;
    BigCount ip = num / den;
    BigCount rem = num % den;
    std::string out = (neg ? "-" : "") + ip.str();
    if (digits <= 0) return out;
    out += '.';
    for (int i = 0; i < digits; ++i) {
        rem *= 10;
        out += static_cast<char>('0' + static_cast<int>(rem / den));
        rem %= den;
    }
    return out;
}

}  // namespace twopart
