#include "twopart/constructions.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>

namespace twopart {

namespace {

// Canonical split of a ground set of even size y into first/second half.
SubsetMask half_mask(int y) { return full_mask(y / 2); }

int ceil_half_plus(int y) { return (y + 2) / 2; }  // ceil((y+1)/2)

std::vector<std::size_t> descending_order(const ClassSizeProfile& p) {
    std::vector<std::size_t> idx(p.sizes.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return p.sizes[a].second > p.sizes[b].second;
    });
    return idx;
}

ClassSizeProfile partition_profile(const LabeledPartition& p) {
    ClassSizeProfile prof;
    prof.n = p.n;
    for (const auto& c : p.classes)
        prof.sizes.emplace_back(c.label, BigCount(c.family.size()));
    return prof;
}

}  // namespace

SetFamily product_family(const LabeledPartition& pa, const LabeledPartition& pb,
                         const Matching& matching, const GroundSplit& split) {
    if (pa.n != split.size1() || pb.n != split.size2())
        throw std::invalid_argument("product_family: partition ground sizes do not match split");
    require_materializable(split.n);
    std::vector<bool> used_a(pa.classes.size(), false), used_b(pb.classes.size(), false);
    std::vector<SubsetMask> out;
    for (auto [ia, ib] : matching.pairs) {
        if (ia >= pa.classes.size() || ib >= pb.classes.size())
            throw std::invalid_argument("product_family: matching index out of range");
        if (used_a[ia] || used_b[ib])
            throw std::invalid_argument("product_family: matching reuses a class");
        used_a[ia] = used_b[ib] = true;
        for (SubsetMask a : pa.classes[ia].family.masks)
            for (SubsetMask b : pb.classes[ib].family.masks)
                out.push_back(a | (b << split.k));
    }
    return normalize_family(std::move(out), split.n);
}

std::pair<Matching, BigCount> descending_match(const ClassSizeProfile& a,
                                               const ClassSizeProfile& b) {
    const auto ia = descending_order(a);
    const auto ib = descending_order(b);
    Matching m;
    BigCount value = 0;
    const std::size_t count = std::min(ia.size(), ib.size());
    for (std::size_t t = 0; t < count; ++t) {
        m.pairs.emplace_back(ia[t], ib[t]);
        value += a.sizes[ia[t]].second * b.sizes[ib[t]].second;
    }
    return {std::move(m), std::move(value)};
}

LabeledPartition chain_partition(int y) {
    if (y < 0) throw std::invalid_argument("chain_partition: y must be >= 0");
    require_materializable(y);
    LabeledPartition p;
    p.n = y;
    p.complete = true;
    for (int i = 0; i < y; ++i) {
        LabeledClass c;
        c.label = "min" + std::to_string(i);
        c.family.n = y;
        // sets whose minimum element is i
        const int free_bits = y - i - 1;
        for (SubsetMask t = 0; t < (SubsetMask{1} << free_bits); ++t)
            c.family.masks.push_back((SubsetMask{1} << i) | (t << (i + 1)));
        std::sort(c.family.masks.begin(), c.family.masks.end());
        p.classes.push_back(std::move(c));
    }
    LabeledClass empty_class;
    empty_class.label = "empty";
    empty_class.family.n = y;
    empty_class.family.masks.push_back(0);
    p.classes.push_back(std::move(empty_class));
    return p;
}

ClassSizeProfile chain_class_sizes(int y) {
    if (y < 0) throw std::invalid_argument("chain_class_sizes: y must be >= 0");
    ClassSizeProfile prof;
    prof.n = y;
    for (int i = 0; i < y; ++i)
        prof.sizes.emplace_back("min" + std::to_string(i), pow2(y - i - 1));
    prof.sizes.emplace_back("empty", 1);
    return prof;
}

namespace {

std::string level_label(int k) { return "level" + std::to_string(k); }
std::string star_label(int i, int j) {
    return "star" + std::to_string(i) + "." + std::to_string(j);
}
std::string tail_label(int l) { return "tail" + std::to_string(l); }
std::string ff_label(int i, int which) {
    return "ff" + std::to_string(i) + "." + std::to_string(which);
}

// Shared layout of the canonical partition: class labels in output order.
// Levels descending, then star classes by (level, j), then tail classes.
std::vector<std::string> canonical_labels(int y) {
    const int hi = ceil_half_plus(y);
    std::vector<std::string> labels;
    for (int k = y; k >= hi; --k) labels.push_back(level_label(k));
    for (int i = 1; i <= hi - 1; ++i)
        for (int j = 1; j <= y - 2 * i + 1; ++j) labels.push_back(star_label(i, j));
    for (int l = 0; l <= hi - 1; ++l) labels.push_back(tail_label(l));
    return labels;
}

// Class of one mask in the canonical partition of [0,y).
std::string canonical_class_of(SubsetMask m, int y) {
    const int hi = ceil_half_plus(y);
    const int sz = std::popcount(m);
    if (sz >= hi) return level_label(sz);
    if (sz == 0) return tail_label(0);
    const int j = std::countr_zero(m) + 1;  // 1-based index of the minimum element
    if (j <= y - 2 * sz + 1) return star_label(sz, j);
    return tail_label(sz);
}

LabeledPartition bucket_partition(int y, const std::vector<std::string>& order,
                                  const std::vector<std::string>& class_of_mask) {
    LabeledPartition p;
    p.n = y;
    std::unordered_map<std::string, std::size_t> index;
    for (const auto& label : order) {
        index.emplace(label, p.classes.size());
        LabeledClass c;
        c.label = label;
        c.family.n = y;
        p.classes.push_back(std::move(c));
    }
    for (SubsetMask m = 0; m < (SubsetMask{1} << y); ++m)
        p.classes[index.at(class_of_mask[m])].family.masks.push_back(m);
    std::erase_if(p.classes, [](const LabeledClass& c) { return c.family.empty(); });
    return p;
}

}  // namespace

LabeledPartition canonical_partition(int y) {
    if (y < 1) throw std::invalid_argument("canonical_partition: y must be >= 1");
    require_materializable(y);
    std::vector<std::string> class_of(std::size_t{1} << y);
    for (SubsetMask m = 0; m < (SubsetMask{1} << y); ++m)
        class_of[m] = canonical_class_of(m, y);
    LabeledPartition p = bucket_partition(y, canonical_labels(y), class_of);
    p.complete = true;
    return p;
}

ClassSizeProfile canonical_class_sizes(int y) {
    if (y < 1) throw std::invalid_argument("canonical_class_sizes: y must be >= 1");
    const int hi = ceil_half_plus(y);
    ClassSizeProfile prof;
    prof.n = y;
    for (int k = y; k >= hi; --k) prof.sizes.emplace_back(level_label(k), binomial(y, k));
    for (int i = 1; i <= hi - 1; ++i)
        for (int j = 1; j <= y - 2 * i + 1; ++j)
            prof.sizes.emplace_back(star_label(i, j), binomial(y - j, i - 1));
    prof.sizes.emplace_back(tail_label(0), 1);
    for (int l = 1; l <= hi - 1; ++l)
        prof.sizes.emplace_back(tail_label(l), binomial(2 * l - 1, l));
    return prof;
}

FamilyPair ff_pair(int y, int i) {
    if (y < 2 || y % 2 != 0) throw std::invalid_argument("ff_pair: y must be even and >= 2");
    if (i < 1 || i > y) throw std::invalid_argument("ff_pair: need 1 <= i <= y");
    require_materializable(y);
    const SubsetMask h1 = half_mask(y);
    SetFamily g1(y), g2(y);
    for (SubsetMask m = 0; m < (SubsetMask{1} << y); ++m) {
        if (std::popcount(m) != i) continue;
        if (4 * std::popcount(m & h1) > y)
            g1.masks.push_back(m);
        else if (4 * std::popcount(m & ~h1 & full_mask(y)) > y)
            g2.masks.push_back(m);
    }
    return FamilyPair(std::move(g1), std::move(g2));
}

std::pair<BigCount, BigCount> ff_pair_sizes(long long y, long long i) {
    if (y < 2 || y % 2 != 0) throw std::invalid_argument("ff_pair_sizes: y must be even and >= 2");
    const long long h = y / 2;
    BigCount s1 = 0, s2 = 0;
    for (long long a = 0; a <= h; ++a) {
        if (4 * a > y) s1 += binomial(h, a) * binomial(h, i - a);
        // second class: majority in the second half, minority in the first
        if (4 * a > y && 4 * (i - a) <= y && i - a >= 0)
            s2 += binomial(h, a) * binomial(h, i - a);
    }
    return {std::move(s1), std::move(s2)};
}

bool ff_replacement_level(long long y, long long i, const BigRatio& beta) {
    if (beta < 0) throw std::invalid_argument("ff_replacement_level: beta must be >= 0");
    if (i > y / 2 || i < 0) return false;
    // y/2 - i <= (beta / (2*sqrt 2)) * sqrt(y), squared to stay rational
    const BigCount d = y / 2 - i;
    return BigRatio(8 * d * d) <= beta * beta * y;
}

LabeledPartition modified_canonical_partition(int y, const BigRatio& beta) {
    if (y < 2 || y % 2 != 0)
        throw std::invalid_argument("modified_canonical_partition: y must be even and >= 2");
    require_materializable(y);

    const int hi = ceil_half_plus(y);
    std::vector<bool> replaced(static_cast<std::size_t>(y / 2) + 1, false);
    for (int i = 0; i <= y / 2; ++i) {
        if (!ff_replacement_level(y, i, beta)) continue;
        if (i == 0) continue;  // ff_pair is empty at level 0; keep the {emptyset} class
        auto [s1, s2] = ff_pair_sizes(y, i);
        if (s1 + s2 == 0) continue;  // nothing to replace the level with
        replaced[i] = true;
    }

    const SubsetMask h1 = half_mask(y);
    std::vector<std::string> class_of(std::size_t{1} << y);
    for (SubsetMask m = 0; m < (SubsetMask{1} << y); ++m) {
        const int sz = std::popcount(m);
        if (sz <= y / 2 && replaced[sz]) {
            if (4 * std::popcount(m & h1) > y)
                class_of[m] = ff_label(sz, 1);
            else if (4 * std::popcount(m & ~h1 & full_mask(y)) > y)
                class_of[m] = ff_label(sz, 2);
            else
                class_of[m] = "UNUSED";
        } else {
            class_of[m] = canonical_class_of(m, y);
        }
    }

    std::vector<std::string> order;
    for (int k = y; k >= hi; --k) order.push_back(level_label(k));
    for (int i = 1; i <= hi - 1; ++i)
        if (!replaced[i])
            for (int j = 1; j <= y - 2 * i + 1; ++j) order.push_back(star_label(i, j));
    for (int l = 0; l <= hi - 1; ++l)
        if (!replaced[l]) order.push_back(tail_label(l));
    for (int i = 1; i <= y / 2; ++i)
        if (replaced[i]) {
            order.push_back(ff_label(i, 1));
            order.push_back(ff_label(i, 2));
        }
    order.push_back("UNUSED");

    LabeledPartition p = bucket_partition(y, order, class_of);
    p.complete = false;
    return p;
}

SetFamily two_i_singleton(int n) {
    if (n < 3) throw std::invalid_argument("two_i_singleton: n must be >= 3");
    require_materializable(n);
    std::vector<SubsetMask> out;
    // X2 = {1..n-1}; pair {0} with the star of element 1, {} with the
    // element-2 star avoiding element 1.
    for (SubsetMask t = 0; t < (SubsetMask{1} << (n - 1)); ++t) {
        const SubsetMask b = t << 1;
        if (b & 0b10)
            out.push_back(b | 1);
        else if (b & 0b100)
            out.push_back(b);
    }
    return normalize_family(std::move(out), n);
}

SetFamily two_i_equal(int n) {
    if (n < 0 || n % 2 != 0) throw std::invalid_argument("two_i_equal: n must be even");
    require_materializable(n);
    const int y = n / 2;
    const LabeledPartition chain = chain_partition(y);
    Matching identity;
    for (std::size_t i = 0; i < chain.classes.size(); ++i) identity.pairs.emplace_back(i, i);
    return product_family(chain, chain, identity, GroundSplit(n, y));
}

SetFamily two_i2s_smallpart(const GroundSplit& split) {
    const int x1 = split.size1(), x2 = split.size2();
    if (x1 < 1) throw std::invalid_argument("two_i2s_smallpart: X1 must be nonempty");
    if (x2 % 2 != 0) throw std::invalid_argument("two_i2s_smallpart: |X2| must be even");
    require_materializable(split.n);

    const LabeledPartition part1 = canonical_partition(x1);
    const auto order = descending_order(partition_profile(part1));
    const std::size_t m = std::min<std::size_t>(order.size(), static_cast<std::size_t>(x2 / 2));

    std::vector<SubsetMask> out;
    for (std::size_t t = 0; t < m; ++t) {
        const int level = x2 / 2 + static_cast<int>(t) + 1;
        for (SubsetMask h = 0; h < (SubsetMask{1} << x2); ++h) {
            if (std::popcount(h) != level) continue;
            for (SubsetMask f : part1.classes[order[t]].family.masks)
                out.push_back(f | (h << x1));
        }
    }
    return normalize_family(std::move(out), split.n);
}

namespace {

// Matching of a partition against itself, UNUSED classes excluded, sorted
// by decreasing class size on both sides.
Matching self_descending_match(const LabeledPartition& p) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < p.classes.size(); ++i)
        if (p.classes[i].label != "UNUSED") keep.push_back(i);
    ClassSizeProfile prof;
    prof.n = p.n;
    for (std::size_t i : keep)
        prof.sizes.emplace_back(p.classes[i].label, BigCount(p.classes[i].family.size()));
    auto [match, value] = descending_match(prof, prof);
    Matching out;
    for (auto [a, b] : match.pairs) out.pairs.emplace_back(keep[a], keep[b]);
    return out;
}

}  // namespace

SetFamily two_i2s_equal(int n, bool modified, const BigRatio& beta) {
    if (n < 4 || n % 4 != 0)
        throw std::invalid_argument("two_i2s_equal: n must be divisible by 4");
    require_materializable(n);
    const int y = n / 2;
    const LabeledPartition part =
        modified ? modified_canonical_partition(y, beta) : canonical_partition(y);
    return product_family(part, part, self_descending_match(part), GroundSplit(n, y));
}

BigCount two_i2s_equal_count(int n, bool modified, const BigRatio& beta, bool include_empty,
                             int threads) {
    if (n < 4 || n % 4 != 0)
        throw std::invalid_argument("two_i2s_equal_count: n must be divisible by 4");
    const long long y = n / 2;
    const BinomialCache binom(y);

    BigCount total = 0;
    for (long long k = y / 2 + 1; k <= y; ++k) total += binom(y, k) * binom(y, k);

    // star and tail contributions per level, or the ff replacement squares
    std::vector<BigCount> level_sum(static_cast<std::size_t>(y / 2) + 1);
    const auto level_term = [&](long long i) -> BigCount {
        if (modified && i >= 1 && ff_replacement_level(y, i, beta)) {
            auto [s1, s2] = ff_pair_sizes(y, i);
            if (s1 + s2 > 0) return s1 * s1 + s2 * s2;
        }
        BigCount acc = binom(2 * i - 1, i) * binom(2 * i - 1, i);
        for (long long k = 0; k <= y - 2 * i; ++k)
            acc += binom(y - 1 - k, i - 1) * binom(y - 1 - k, i - 1);
        return acc;
    };
#ifdef _OPENMP
    const int t = threads == 0 ? omp_get_max_threads() : threads;
    if (t > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(t)
        for (long long i = 1; i <= y / 2; ++i) level_sum[i] = level_term(i);
    } else
#endif
    {
        (void)threads;
        for (long long i = 1; i <= y / 2; ++i) level_sum[i] = level_term(i);
    }
    for (long long i = 1; i <= y / 2; ++i) total += level_sum[i];

    // the {emptyset} class survives every modification, so its product
    // class always contributes exactly one set
    if (include_empty) total += 1;
    return total;
}

FamilyPair cross_sperner_pair_example(int n, CrossVariant variant, int threshold_k) {
    if (n < 1) throw std::invalid_argument("cross_sperner_pair_example: n must be >= 1");
    require_materializable(n);
    SetFamily f(n), g(n);
    switch (variant) {
        case CrossVariant::StarEmpty:
            for (SubsetMask m = 0; m < (SubsetMask{1} << n); ++m)
                if (m & 1) f.masks.push_back(m);
            break;
        case CrossVariant::TwoStars:
            if (n < 2) throw std::invalid_argument("cross_sperner_pair_example: two-stars needs n >= 2");
            for (SubsetMask m = 0; m < (SubsetMask{1} << n); ++m) {
                if ((m & 1) && !(m & 2)) f.masks.push_back(m);
                if (!(m & 1) && (m & 2)) g.masks.push_back(m);
            }
            break;
        case CrossVariant::Threshold:
            if (threshold_k < 0 || 2 * threshold_k < n || threshold_k > n)
                throw std::invalid_argument(
                    "cross_sperner_pair_example: threshold needs n/2 <= k <= n");
            for (SubsetMask m = 0; m < (SubsetMask{1} << n); ++m) {
                const int sz = std::popcount(m);
                if ((m & 1) && sz <= threshold_k) f.masks.push_back(m);
                if (!(m & 1) && sz >= threshold_k) g.masks.push_back(m);
            }
            break;
    }
    return FamilyPair(std::move(f), std::move(g));
}

SetFamily one_i1s_product(const GroundSplit& split, int star_a, int star_b) {
    if (split.k < 1 || split.n - split.k < 1)
        throw std::invalid_argument("one_i1s_product: both parts must be nonempty");
    if (star_a < 0 || star_a >= split.k || star_b < split.k || star_b >= split.n)
        throw std::invalid_argument("one_i1s_product: star elements must lie in their parts");
    require_materializable(split.n);
    const SubsetMask bit_a = SubsetMask{1} << star_a, bit_b = SubsetMask{1} << star_b;
    std::vector<SubsetMask> out;
    for (SubsetMask a = 0; a < (SubsetMask{1} << split.k); ++a) {
        if (!(a & bit_a)) continue;
        for (SubsetMask t = 0; t < (SubsetMask{1} << (split.n - split.k)); ++t) {
            const SubsetMask b = t << split.k;
            if (b & bit_b) out.push_back(a | b);
        }
    }
    return normalize_family(std::move(out), split.n);
}

}  // namespace twopart
