// Benchmark: serial reference kernels (threads = 1) against the OpenMP
// variants, verifying on the way that both produce identical results.
//
//   twopart_bench [threads]

#ifdef _OPENMP
#include <omp.h>
#endif

#include "twopart/constructions.hpp"
#include "twopart/search.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace twopart;

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-34s %10.2f ms %10.2f ms  x%-5.2f %s\n", name.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, equal ? "equal" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    int threads = 0;  // all hardware threads
    if (argc > 1) threads = std::atoi(argv[1]);
#ifdef _OPENMP
    const int effective = threads > 0 ? threads : omp_get_max_threads();
#else
    const int effective = 1;
#endif
    std::printf("serial reference vs OpenMP kernels (%d threads)\n", effective);
    std::printf("%-34s %13s %13s  %-6s %s\n", "kernel", "serial", "parallel", "spdup", "check");

    ScanOptions ser, par;
    ser.threads = 1;
    par.threads = threads;

    {
        ScanReport a, b;
        const double s = time_ms([&] { a = run_theorem_scan(ScanSuite::MaricaSchonheim, 4, ser); });
        const double p = time_ms([&] { b = run_theorem_scan(ScanSuite::MaricaSchonheim, 4, par); });
        report("scan marica-schonheim n=4", s, p,
               a.extremal_count == b.extremal_count && a.violations == b.violations);
    }
    {
        ScanReport a, b;
        const double s = time_ms([&] { a = run_theorem_scan(ScanSuite::AhlswedeDaykin, 3, ser); });
        const double p = time_ms([&] { b = run_theorem_scan(ScanSuite::AhlswedeDaykin, 3, par); });
        report("scan ahlswede-daykin n=3", s, p, a.extremal_count == b.extremal_count);
    }
    {
        ScanReport a, b;
        const double s =
            time_ms([&] { a = run_theorem_scan(ScanSuite::DownclosedIntersecting, 4, ser); });
        const double p =
            time_ms([&] { b = run_theorem_scan(ScanSuite::DownclosedIntersecting, 4, par); });
        report("scan downclosed n=4", s, p, a.extremal_count == b.extremal_count);
    }
    {
        ScanReport a, b;
        const double s = time_ms([&] { a = run_theorem_scan(ScanSuite::GkkLym, 4, ser); });
        const double p = time_ms([&] { b = run_theorem_scan(ScanSuite::GkkLym, 4, par); });
        report("scan gkk-lym n=4", s, p, a.extremal_count == b.extremal_count);
    }
    {
        SearchOptions so, po;
        so.threads = 1;
        po.threads = threads;
        ConflictGraph g1, g2;
        const double s =
            time_ms([&] { g1 = conflict_graph(PropertyId::TwoPartSperner, GroundSplit(11, 5), so); });
        const double p =
            time_ms([&] { g2 = conflict_graph(PropertyId::TwoPartSperner, GroundSplit(11, 5), po); });
        report("conflict graph 2ps n=11", s, p, g1.adj == g2.adj);

        SearchResult r1, r2;
        const ConflictGraph g = conflict_graph(PropertyId::TwoI, GroundSplit(6, 3), po);
        const double ms = time_ms([&] { r1 = max_independent_set(g, so); });
        const double mp = time_ms([&] { r2 = max_independent_set(g, po); });
        report("max independent set 2i n=6", ms, mp, r1.optimum == r2.optimum);

        SearchResult c1, c2;
        const double cs = time_ms([&] { c1 = max_cross_sperner_sum(4, so); });
        const double cp = time_ms([&] { c2 = max_cross_sperner_sum(4, po); });
        report("cross-sperner search n=4", cs, cp,
               c1.optimum == c2.optimum && c1.extremal_count == c2.extremal_count);

        SearchResult u1, u2;
        const double us = time_ms([&] { u1 = max_union_isp_pair(5, so); });
        const double up = time_ms([&] { u2 = max_union_isp_pair(5, po); });
        report("isp pair union n=5", us, up, u1.optimum == u2.optimum);
    }
    {
        BigCount a, b;
        const double s = time_ms([&] { a = two_i2s_equal_count(1024, false, BigRatio(0), true, 1); });
        const double p =
            time_ms([&] { b = two_i2s_equal_count(1024, false, BigRatio(0), true, threads); });
        report("2i2s equal count n=1024", s, p, a == b);
    }
    return 0;
}
