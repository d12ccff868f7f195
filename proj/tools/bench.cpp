// Serial-vs-OpenMP timing for the two hot kernels: the permutation oracle
// and a Monte Carlo ensemble. Both paths must agree exactly; the parallel
// one only has to be faster.

#include <chrono>
#include <cstdio>

#include "layerslab/ensemble.hpp"
#include "layerslab/layers.hpp"
#include "layerslab/oracle.hpp"

using namespace layerslab;

namespace {

template <class Fn>
double time_s(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main() {
    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial[s]", "openmp[s]", "speedup");

    {
        // 10-item oracle: P(item 0 youngest of 5) on a padded ground set
        auto pred = [](const std::vector<int>& rank) {
            for (int i = 1; i < 5; ++i)
                if (rank[i] < rank[0]) return false;
            return true;
        };
        Rational serial_v, par_v;
        double ts = time_s([&] { serial_v = permutation_oracle(10, pred, false); });
        double tp = time_s([&] { par_v = permutation_oracle(10, pred, true); });
        std::printf("%-34s %10.3f %10.3f %7.2fx  (equal: %s)\n", "permutation_oracle (10 items)", ts,
                    tp, ts / tp, serial_v == par_v ? "yes" : "NO");
    }

    {
        Graph g = star_graph(4);
        auto trial = [&](long long, RandomStream& rng) {
            AgeAssignment ages = sample_ages(g.n, rng);
            LayerResult layers = compute_layers(g, ages);
            return static_cast<double>(layers.layer[0]);
        };
        const long long trials = 2000000;
        std::vector<double> a, b;
        double ts = time_s([&] { a = run_trials<double>(trials, 42, trial, false); });
        double tp = time_s([&] { b = run_trials<double>(trials, 42, trial, true); });
        std::printf("%-34s %10.3f %10.3f %7.2fx  (equal: %s)\n", "layer sampling (2e6 trials)", ts,
                    tp, ts / tp, a == b ? "yes" : "NO");
    }

    {
        Graph g;
        {
            RandomStream rng(7);
            g = simple_graph_from_sequence(DegreeSequence::constant(3, 2000), rng, 2000);
        }
        auto trial = [&](long long, RandomStream& rng) {
            AgeAssignment ages = sample_ages(g.n, rng);
            LayerResult layers = compute_layers(g, ages);
            return static_cast<double>(largest_open_component(g, layers, 3)) / g.n;
        };
        const long long trials = 2000;
        std::vector<double> a, b;
        double ts = time_s([&] { a = run_trials<double>(trials, 11, trial, false); });
        double tp = time_s([&] { b = run_trials<double>(trials, 11, trial, true); });
        std::printf("%-34s %10.3f %10.3f %7.2fx  (equal: %s)\n", "T_3 component (n=2000, 2e3 trials)",
                    ts, tp, ts / tp, a == b ? "yes" : "NO");
    }
    return 0;
}
