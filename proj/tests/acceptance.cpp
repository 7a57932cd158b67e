// Acceptance suite: runs every contract criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include "twopart/asymptotics.hpp"
#include "twopart/constructions.hpp"
#include "twopart/properties.hpp"
#include "twopart/search.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>

using namespace twopart;

namespace {

struct Criterion {
    int id;
    std::string name;
    std::function<bool(std::ostream&)> run;
};

SearchOptions fast() {
    SearchOptions o;
    o.threads = 0;  // all hardware threads; the optimum value is thread-count independent
    return o;
}

BigCount mis_optimum(PropertyId p, int n, int k) {
    return max_independent_set(conflict_graph(p, GroundSplit(n, k), fast()), fast()).optimum;
}

bool crit1_one_i1s(std::ostream& log) {
    bool ok = true;
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= n - 1; ++k) {
            const BigCount want = pow2(n - 2);
            const BigCount got = mis_optimum(PropertyId::OneI1S, n, k);
            const SetFamily built = one_i1s_product(GroundSplit(n, k), 0, k);
            const bool here = got == want && BigCount(built.size()) == want &&
                              satisfies(PropertyId::OneI1S, built, GroundSplit(n, k));
            if (!here) {
                log << " (n=" << n << ",k=" << k << ": search=" << got << " want=" << want << ")";
                ok = false;
            }
        }
    return ok;
}

bool crit2_two_i_singleton(std::ostream& log) {
    bool ok = true;
    for (int n : {3, 4, 5, 6}) {
        const BigCount want = 3 * pow2(n - 3);
        const BigCount got = mis_optimum(PropertyId::TwoI, n, 1);
        const SetFamily built = two_i_singleton(n);
        const bool here = got == want && BigCount(built.size()) == want &&
                          satisfies(PropertyId::TwoI, built, GroundSplit(n, 1));
        if (!here) {
            log << " (n=" << n << ": search=" << got << " want=" << want << ")";
            ok = false;
        }
    }
    return ok;
}

bool crit3_two_i_equal(std::ostream& log) {
    bool ok = true;
    for (int n : {2, 4, 6, 8}) {
        const SetFamily f = two_i_equal(n);
        if (BigCount(f.size()) * 3 != pow2(n) + 2 ||
            !satisfies(PropertyId::TwoI, f, GroundSplit(n, n / 2))) {
            log << " (construction failed at n=" << n << ")";
            ok = false;
        }
    }
    if (mis_optimum(PropertyId::TwoI, 4, 2) != 6) {
        log << " (search at n=4,k=2 != 6)";
        ok = false;
    }
    const BigCount v6 = mis_optimum(PropertyId::TwoI, 6, 3);
    log << " [reported 2I optimum at n=6,k=3: " << v6 << "]";
    if (v6 < 22 || v6 > 24) {
        log << " (outside [22,24])";
        ok = false;
    }
    return ok;
}

bool crit4_cross_sperner(std::ostream& log) {
    bool ok = true;
    for (int n : {2, 3, 4}) {
        const SearchResult r = max_cross_sperner_sum(n, fast());
        if (r.optimum != pow2(n - 1)) {
            log << " (search n=" << n << ": " << r.optimum << " != " << pow2(n - 1) << ")";
            ok = false;
        }
    }
    for (int n = 1; n <= 10; ++n) {
        std::vector<FamilyPair> pairs;
        pairs.push_back(cross_sperner_pair_example(n, CrossVariant::StarEmpty));
        if (n >= 2) pairs.push_back(cross_sperner_pair_example(n, CrossVariant::TwoStars));
        for (int k = (n + 1) / 2; k <= n; ++k)
            pairs.push_back(cross_sperner_pair_example(n, CrossVariant::Threshold, k));
        for (const auto& p : pairs)
            if (!is_cross_sperner_pair(p) ||
                BigCount(p.first.size() + p.second.size()) != pow2(n - 1)) {
                log << " (example failed at n=" << n << ")";
                ok = false;
            }
    }
    return ok;
}

bool crit5_kleitman(std::ostream& log) {
    bool ok = true;
    for (int y = 1; y <= 16; ++y) {
        const auto prof = chain_class_sizes(y);
        const LabeledPartition part = chain_partition(y);
        BigCount prefix = 0;
        for (int j = 1; j <= y; ++j) {
            prefix += BigCount(part.classes[j - 1].family.size());
            if (prefix != pow2(y) - pow2(y - j) ||
                prof.sizes[j - 1].second != BigCount(part.classes[j - 1].family.size())) {
                log << " (prefix sums broken at y=" << y << ",j=" << j << ")";
                ok = false;
            }
        }
    }
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 2}}) {
        const SearchResult r = max_union_intersecting(n, m, fast());
        if (r.optimum != pow2(n) - pow2(n - m)) {
            log << " (union search (" << n << "," << m << ")=" << r.optimum << ")";
            ok = false;
        }
    }
    return ok;
}

bool crit6_two_part_sperner(std::ostream& log) {
    bool ok = true;
    for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {5, 2}}) {
        const BigCount want = binomial(n, (n + 1) / 2);
        const BigCount got = mis_optimum(PropertyId::TwoPartSperner, n, k);
        if (got != want) {
            log << " ((" << n << "," << k << "): " << got << " != " << want << ")";
            ok = false;
        }
    }
    return ok;
}

bool crit7_canonical(std::ostream& log) {
    bool ok = true;
    for (int y = 1; y <= 12; ++y) {
        const LabeledPartition p = canonical_partition(y);
        if (!p.complete || !p.check_valid()) {
            log << " (partition invalid at y=" << y << ")";
            ok = false;
        }
        const auto prof = canonical_class_sizes(y);
        if (prof.sizes.size() != p.classes.size()) {
            log << " (class count mismatch at y=" << y << ")";
            ok = false;
            continue;
        }
        for (std::size_t c = 0; c < p.classes.size(); ++c) {
            if (!is_sperner(p.classes[c].family) ||
                !is_intersecting(p.classes[c].family, IntersectMode::Lenient)) {
                log << " (class " << p.classes[c].label << " fails at y=" << y << ")";
                ok = false;
            }
            if (prof.sizes[c].second != BigCount(p.classes[c].family.size())) {
                log << " (size mismatch " << p.classes[c].label << " at y=" << y << ")";
                ok = false;
            }
        }
    }
    std::vector<BigCount> census;
    for (const auto& c : canonical_partition(4).classes)
        census.push_back(BigCount(c.family.size()));
    if (census != std::vector<BigCount>{1, 4, 1, 1, 1, 3, 1, 1, 3}) {
        log << " (census at y=4 differs)";
        ok = false;
    }
    return ok;
}

bool crit8_two_i2s_equal(std::ostream& log) {
    bool ok = true;
    const SetFamily f8 = two_i2s_equal(8);
    if (f8.size() != 40 || !satisfies(PropertyId::TwoI2S, f8, GroundSplit(8, 4)) ||
        two_i2s_equal_count(8, false, BigRatio(0), true) != 40) {
        log << " (n=8 construction/count mismatch)";
        ok = false;
    }
    const auto series =
        construction_ratio_series({8, 16, 32, 64, 128, 256, 512, 1024}, false, BigRatio(0), 0);
    for (std::size_t t = 1; t < series.size(); ++t)
        if (!(series[t].ratio > series[t - 1].ratio)) {
            log << " (series not increasing at n=" << series[t].n << ")";
            ok = false;
        }
    const BigRatio last = series.back().ratio;
    log << " [ratio(1024) = " << ratio_decimal(last, 6) << "]";
    if (!(last > BigRatio(55, 100) && last < BigRatio(2, 3))) {
        log << " (n=1024 ratio outside (0.55, 2/3))";
        ok = false;
    }
    return ok;
}

bool crit9_two_i2s_smallpart(std::ostream& log) {
    bool ok = true;
    for (auto [n, k] : std::vector<std::pair<int, int>>{{7, 1}, {8, 2}, {10, 2}}) {
        const SetFamily f = two_i2s_smallpart(GroundSplit(n, k));
        std::vector<BigCount> sizes;
        for (const auto& [label, s] : canonical_class_sizes(k).sizes) sizes.push_back(s);
        std::sort(sizes.begin(), sizes.end(), std::greater<>());
        const int x2 = n - k;
        BigCount want = 0;
        for (std::size_t i = 0; i < sizes.size() && static_cast<int>(i) < x2 / 2; ++i)
            want += sizes[i] * binomial(x2, x2 / 2 + static_cast<int>(i) + 1);
        if (BigCount(f.size()) != want ||
            !satisfies(PropertyId::TwoI2S, f, GroundSplit(n, k))) {
            log << " ((" << n << "," << k << "): size=" << f.size() << " want=" << want << ")";
            ok = false;
        }
    }
    return ok;
}

bool crit10_scans(std::ostream& log) {
    bool ok = true;
    ScanOptions opts;
    opts.threads = 0;
    const auto expect = [&](ScanSuite suite, int n, std::uint64_t instances) {
        const ScanReport r = run_theorem_scan(suite, n, opts);
        if (!r.violations.empty() || (instances != 0 && r.instances_scanned != instances)) {
            log << " (" << scan_suite_name(suite) << " n=" << n << ": "
                << r.violations.size() << " violations, " << r.instances_scanned
                << " scanned)";
            ok = false;
        }
    };
    expect(ScanSuite::MaricaSchonheim, 4, 65536);
    expect(ScanSuite::AhlswedeDaykin, 3, 65536);
    expect(ScanSuite::DownclosedIntersecting, 3, 20);
    expect(ScanSuite::DownclosedIntersecting, 4, 168);
    expect(ScanSuite::GkkLym, 3, 0);
    expect(ScanSuite::GkkLym, 4, 0);
    return ok;
}

bool crit11_gkk_corollary(std::ostream& log) {
    bool ok = true;
    for (int n : {3, 5}) {
        const int l = (n - 1) / 2;
        const BigCount want = binomial(n, l + 1) + binomial(n, l + 2);
        const SearchResult r = max_union_isp_pair(n, fast());
        if (r.optimum != want) {
            log << " (n=" << n << ": " << r.optimum << " != " << want << ")";
            ok = false;
        }
    }
    return ok;
}

bool crit12_asymptotics(std::ostream& log) {
    bool ok = true;
    for (long long n = 4; n <= 256; n += 4)
        for (long long i = 1; i <= n / 4; ++i) {
            const RatioSeries rs = rd_sequences(n, i);
            if (rs.sum != 1) {
                log << " (r-sum != 1 at n=" << n << ",i=" << i << ")";
                ok = false;
            }
            for (const auto& [l, d] : rs.d_terms)
                if (d != BigRatio(n / 2 - l - i + 2, n / 2 - l + 1)) {
                    log << " (d identity fails at n=" << n << ",i=" << i << ",l=" << l << ")";
                    ok = false;
                }
        }
    for (long long n = 4; n <= 256; n += 4)
        if (!f1_profile(n).vandermonde_ok) {
            log << " (vandermonde fails at n=" << n << ")";
            ok = false;
        }
    const SProfile s82 = s_profile(8, 2);
    if (s82.s != 18 || s82.ratio != BigRatio(1, 2)) {
        log << " (s_profile(8,2) != (18, 1/2))";
        ok = false;
    }
    const SProfile deep = s_profile(4096, 4096 / 4 - isqrt_floor(4096));
    log << " [S_i ratio at n=4096: " << ratio_decimal(deep.ratio, 6) << "]";
    if (!(deep.ratio > BigRatio(30, 100) && deep.ratio < BigRatio(37, 100))) {
        log << " (outside (0.30, 0.37))";
        ok = false;
    }
    return ok;
}

bool crit13_proof_internals(std::ostream& log) {
    bool ok = true;

    // pairwise vs trace-family evaluation, exhaustive n <= 4
    for (int n = 0; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
            const GroundSplit split(n, k);
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (1 << n)); ++bits) {
                const SetFamily f = oracle::family_of_bits(bits, n);
                for (PropertyId p : {PropertyId::TwoI, PropertyId::TwoPartSperner,
                                     PropertyId::TwoI2S, PropertyId::OneI1S})
                    if (satisfies(p, f, split) != satisfies_by_traces(p, f, split)) {
                        log << " (route disagreement n=" << n << ",k=" << k << ")";
                        ok = false;
                    }
            }
        }

    // downward-closed corollary, exhaustive n <= 4 (via the scan kernel)
    for (int n = 3; n <= 4; ++n)
        if (!run_theorem_scan(ScanSuite::DownclosedIntersecting, n).violations.empty()) {
            log << " (downclosed corollary violated at n=" << n << ")";
            ok = false;
        }

    // cross-Sperner closure objects over every valid pair, n <= 4, exactly
    // as stated: meet <= D', join <= U', F,G,U',D' pairwise disjoint,
    // |F| <= |D'|, |G| <= |D'|
    std::uint64_t pairs_checked = 0, disjoint_failures = 0, other_failures = 0;
    std::string first_example;
    for (int n = 2; n <= 4; ++n) {
        const auto families = enumerate_intersecting_families(n);
        for (std::uint64_t fb : families) {
            const SetFamily f = family_from_bitset(fb, n);
            for (std::uint64_t gb : families) {
                const FamilyPair pair(f, family_from_bitset(gb, n));
                if (!is_cross_sperner_pair(pair)) continue;
                ++pairs_checked;
                const auto r = oracle::cross_closure_check(pair, n);
                if (!r.meet_in_dprime || !r.join_in_uprime || !r.fg_vs_closures_disjoint ||
                    !r.size_bounds)
                    ++other_failures;
                if (!r.uprime_dprime_disjoint) {
                    ++disjoint_failures;
                    if (first_example.empty()) {
                        std::ostringstream ex;
                        ex << "n=" << n << " F-bits=0x" << std::hex << fb << " G-bits=0x" << gb;
                        first_example = ex.str();
                    }
                }
            }
        }
    }
    log << " [closure pairs checked: " << pairs_checked << "]";
    if (other_failures) {
        log << " (" << other_failures << " meet/join/size sub-claim failures)";
        ok = false;
    }
    if (disjoint_failures) {
        log << " (U' and D' overlap for " << disjoint_failures
            << " pairs, first at " << first_example
            << "; the disjointness of the two closure systems fails whenever a family "
               "contains nested members with a gap, so it cannot hold for general "
               "intersecting cross-Sperner pairs)";
        ok = false;
    }
    return ok;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "1I1S optimum 2^(n-2) and attaining product", crit1_one_i1s},
        {2, "2I singleton-part optimum (3/8)*2^n", crit2_two_i_singleton},
        {3, "2I equal parts: construction and search window", crit3_two_i_equal},
        {4, "cross-Sperner maximum 2^(n-1) and extremal examples", crit4_cross_sperner},
        {5, "Kleitman prefix sums and union search", crit5_kleitman},
        {6, "2-part Sperner optimum C(n, ceil(n/2))", crit6_two_part_sperner},
        {7, "canonical partition validity and census", crit7_canonical},
        {8, "2I2S equal parts: size 40, count agreement, ratio series", crit8_two_i2s_equal},
        {9, "2I2S small part matches the level-sum count", crit9_two_i2s_smallpart},
        {10, "theorem scans report zero violations", crit10_scans},
        {11, "union of two intersecting Sperner families", crit11_gkk_corollary},
        {12, "ratio sequences, Vandermonde identity, S_i windows", crit12_asymptotics},
        {13, "proof-internal invariants, exhaustive n <= 4", crit13_proof_internals},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::ostringstream detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail << " (exception: " << e.what() << ")";
        }
        if (!ok) ++failures;
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.name
                  << detail.str() << "\n";
    }
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criterion(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
