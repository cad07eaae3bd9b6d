// Serial vs OpenMP exhaustive enumeration of minimal diagnoses and conflicts.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mbd/conflicts.hpp"
#include "mbd/generator.hpp"

using namespace mbd;

int main(int argc, char** argv) {
    int instances = argc > 1 ? std::atoi(argv[1]) : 20;
    std::mt19937_64 rng(argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 11);
    RandomSpec spec;
    spec.min_axioms = 10;
    spec.max_axioms = 14;
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("instance,axioms,threads,serial_ms,parallel_ms,diagnoses,conflicts,agree\n");
    int bad = 0;
    for (int i = 0; i < instances; ++i) {
        DiagnosisProblem p = random_problem(rng, spec);
        auto factory = default_oracle_factory();
        auto t0 = std::chrono::steady_clock::now();
        auto ds = brute_force_diagnoses(p, factory, 16, Execution::Serial);
        auto cs = all_minimal_conflicts(p, factory, 16, Execution::Serial);
        auto t1 = std::chrono::steady_clock::now();
        auto dp = brute_force_diagnoses(p, factory, 16, Execution::Parallel);
        auto cp = all_minimal_conflicts(p, factory, 16, Execution::Parallel);
        auto t2 = std::chrono::steady_clock::now();
        bool agree = ds.size() == dp.size() && cs.size() == cp.size();
        for (std::size_t k = 0; agree && k < ds.size(); ++k) agree = ds[k].axioms == dp[k].axioms;
        for (std::size_t k = 0; agree && k < cs.size(); ++k) agree = cs[k].axioms == cp[k].axioms;
        bad += agree ? 0 : 1;
        std::printf("%d,%zu,%d,%.2f,%.2f,%zu,%zu,%s\n", i, p.size(), threads,
                    std::chrono::duration<double, std::milli>(t1 - t0).count(),
                    std::chrono::duration<double, std::milli>(t2 - t1).count(), ds.size(), cs.size(),
                    agree ? "yes" : "no");
    }
    return bad == 0 ? 0 : 1;
}
