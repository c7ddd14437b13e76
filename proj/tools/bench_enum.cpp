// Compares the serial and OpenMP committee-argmax kernels on Chamberlin-
// Courant style workloads and checks that their outputs agree.

#include "msv/score_rules.hpp"
#include "msv/simulation.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace msv;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main(int argc, char** argv) {
    int m = argc > 1 ? std::atoi(argv[1]) : 24;
    int k = argc > 2 ? std::atoi(argv[2]) : 8;
    int n = argc > 3 ? std::atoi(argv[3]) : 60;
    std::uint64_t seed = argc > 4 ? std::strtoull(argv[4], nullptr, 10) : 42;

    SimConfig cfg;
    cfg.n_gauss = m * 2 / 5;
    cfg.n_uniform = m - cfg.n_gauss;
    cfg.n_voters = n;
    std::vector<Point2D> cands, voters;
    sample_instance(cfg, seed, cands, voters);
    Election e = profile_from_points(cands, voters);

    ScoreRule cc{Norm::LMax, gamma_borda()};
    Committee pool = full_pool(e);
    EnumOptions opt;
    opt.cap = UINT64_MAX;

    std::printf("m=%d k=%d n=%d C(m,k)=%llu", m, k, n,
                static_cast<unsigned long long>(choose(m, k)));
#ifdef _OPENMP
    std::printf(" threads=%d\n", omp_get_max_threads());
#else
    std::printf(" threads=1 (no OpenMP)\n");
#endif

    opt.parallel = false;
    auto t0 = std::chrono::steady_clock::now();
    WinnerSet serial = stage_winners(cc, e, pool, k, opt);
    auto t1 = std::chrono::steady_clock::now();

    opt.parallel = true;
    auto t2 = std::chrono::steady_clock::now();
    WinnerSet parallel = stage_winners(cc, e, pool, k, opt);
    auto t3 = std::chrono::steady_clock::now();

    double ts = seconds(t0, t1), tp = seconds(t2, t3);
    std::printf("serial:   %.3f s  (%zu winner(s))\n", ts, serial.committees.size());
    std::printf("parallel: %.3f s  (%zu winner(s))\n", tp, parallel.committees.size());
    std::printf("speedup:  %.2fx\n", tp > 0 ? ts / tp : 0.0);

    if (serial.committees != parallel.committees || serial.max_score != parallel.max_score) {
        std::printf("MISMATCH between serial and parallel results\n");
        return 1;
    }
    std::printf("results identical\n");
    return 0;
}
