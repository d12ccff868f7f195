#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "layerslab/rng.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace layerslab {

// Worker count: LAYERSLAB_WORKERS env var wins, else the OpenMP default.
inline int worker_count() {
    if (const char* env = std::getenv("LAYERSLAB_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Monte Carlo ensemble driver. Each trial draws its stream from
// (master_seed, trial index) alone and writes into its own slot, so the
// result vector is bit-identical for any worker count; the serial path is
// the reference the parallel kernel is tested against.
template <class T, class Fn>
std::vector<T> run_trials(long long trials, std::uint64_t master_seed, Fn&& fn, bool parallel = true) {
    std::vector<T> out(static_cast<std::size_t>(trials));
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(worker_count())
        for (long long i = 0; i < trials; ++i) {
            RandomStream rng(sub_seed(master_seed, static_cast<std::uint64_t>(i)));
            out[static_cast<std::size_t>(i)] = fn(i, rng);
        }
    } else {
        for (long long i = 0; i < trials; ++i) {
            RandomStream rng(sub_seed(master_seed, static_cast<std::uint64_t>(i)));
            out[static_cast<std::size_t>(i)] = fn(i, rng);
        }
    }
    return out;
}

struct Summary {
    double mean = 0.0;
    double sd = 0.0;
    double stderr_ = 0.0;
    long long n = 0;
};

// Serial reduction in index order: parallel fills never change the outcome.
inline Summary summarize(const std::vector<double>& xs) {
    Summary s;
    s.n = static_cast<long long>(xs.size());
    if (s.n == 0) return s;
    double sum = 0.0;
    for (double x : xs) sum += x;
    s.mean = sum / static_cast<double>(s.n);
    if (s.n > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - s.mean) * (x - s.mean);
        s.sd = std::sqrt(ss / static_cast<double>(s.n - 1));
        s.stderr_ = s.sd / std::sqrt(static_cast<double>(s.n));
    }
    return s;
}

} // namespace layerslab
