// Timing comparison of the OpenMP kernels against their serial reference
// implementations: skew-symmetrisation, delta-matrix construction and the
// free-algebra permutation sums.

#include "atiyah/basis.hpp"
#include "atiyah/compare.hpp"
#include "atiyah/freealg.hpp"
#include "atiyah/parallel.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace atiyah;

namespace {

double time_of(const std::function<void()> &fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void report(const char *name, double serial, double parallel) {
    std::printf("%-34s serial %8.3fs   parallel %8.3fs   speedup %5.2fx\n", name, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main(int argc, char **argv) {
    int threads = argc > 1 ? std::atoi(argv[1]) : 0;
    set_parallelism_width(threads);
    std::printf("parallel kernels vs serial references (%d worker threads)\n",
                parallelism_width());

    {
        CechCochain c = atiyah_cocycle(4);
        CechCochain a, b;
        double ts = time_of([&] { a = skew_symmetrise_serial(c); });
        double tp = time_of([&] { b = skew_symmetrise(c); });
        if (a != b)
            std::printf("MISMATCH in skew_symmetrise!\n");
        report("skew_symmetrise (4,4)", ts, tp);
    }
    {
        DeltaMatrix a, b;
        double ts = time_of([&] { a = build_delta_matrix_serial(3, 7); });
        double tp = time_of([&] { b = build_delta_matrix(3, 7); });
        if (a.columns != b.columns)
            std::printf("MISMATCH in build_delta_matrix!\n");
        report("delta matrix (3,7) -> (4,7)", ts, tp);
    }
    {
        FreeWordPolynomial a, b;
        double ts = time_of([&] { a = permutation_sum_base_serial(6); });
        double tp = time_of([&] { b = permutation_sum_base(6); });
        if (a != b)
            std::printf("MISMATCH in permutation_sum_base!\n");
        report("permutation sum A, k=6", ts, tp);
    }
    return 0;
}
