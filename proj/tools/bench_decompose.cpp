// Benchmark of the windowed decomposition kernel: the OpenMP-parallel
// ind_decompose against the single-thread reference ind_decompose_serial,
// on a character touching all seven induced modules the identity checks use.
//
// Usage: bench_decompose [cutoff ...]   (default: 12 18 24)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "g2char/charring.hpp"
#include "g2char/hcmod.hpp"

using namespace g2char;

namespace {

double run_ms(const std::function<VirtualCharacter()>& f, VirtualCharacter& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> cutoffs;
    for (int i = 1; i < argc; ++i)
        cutoffs.push_back(std::atoi(argv[i]));
    if (cutoffs.empty())
        cutoffs = {12, 18, 24};

    RootSystem rs = build_g2();
    // All induced modules appearing in the identity checks, with mixed signs.
    VirtualCharacter chi = r_O8(rs) + r_O8_closure(rs) + discrepancy_series_finite(rs);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("decompose benchmark: %zu induced terms, %d thread(s)\n",
                chi.term_count(), threads);
    std::printf("%8s %8s %14s %16s %14s %9s\n", "cutoff", "keys", "serial (ms)",
                "parallel (ms)", "warm (ms)", "speedup");

    for (int n : cutoffs) {
        TruncationWindow window{n};
        VirtualCharacter serial(Basis::irr), parallel(Basis::irr), warm(Basis::irr);
        double t_serial =
            run_ms([&] { return ind_decompose_serial(rs, chi, window); }, serial);

        MultiplicityEngine engine(rs);
        double t_parallel =
            run_ms([&] { return ind_decompose(rs, engine, chi, window); }, parallel);
        double t_warm =
            run_ms([&] { return ind_decompose(rs, engine, chi, window); }, warm);

        if (!(serial == parallel) || !(parallel == warm)) {
            std::fprintf(stderr, "MISMATCH between serial and parallel results at %d\n", n);
            return 1;
        }
        std::printf("%8d %8zu %14.1f %16.1f %14.1f %8.2fx\n", n, window.size(), t_serial,
                    t_parallel, t_warm, t_serial / t_parallel);
    }
    return 0;
}
