#pragma once

#include <cstdint>
#include <vector>

#include "layerslab/layers.hpp"
#include "layerslab/rational.hpp"

namespace layerslab {

// Structural facts about a sampled T_2: it must always be a forest whose
// ages increase away from each component's youngest vertex. A violation is
// an implementation bug, never a random event.
struct T2Structure {
    std::vector<char> open;
    int open_count = 0;
    int component_count = 0;
    bool is_forest = true;
    bool ages_monotone = true;
    std::vector<int> component_min; // youngest vertex per component
};

T2Structure analyze_T2(const Graph& g, const AgeAssignment& ages);

// Chord-free simple paths (v = p[0], ..., p[n]) with deg(p[l]) >= 2 for
// l >= 1 and p[i] never adjacent to p[j] for j <= i-2.
std::vector<std::vector<int>> enumerate_gamma_prime(const Graph& g, int v, int n);

// kappa weight: prod over i = 1..n-1 of (d_i/(d_i - 1)) * ((d_i + d_{i-1} - 1)/d_{i-1})
// with d_j = deg(p[j]). Empty product (n = 1) is 1.
Rational kappa(const Graph& g, const std::vector<int>& path);

// Tail sets T_i, 1-indexed i = 1..n as in the event decomposition:
// T_i = {u : d(u, {p[i-1..n-1]}) <= 1} \ {p[i-2]}, T_1 = T_2 plus the start.
// For n = 1 the decomposition degenerates to T_1 = {p[0], p[1]}.
std::vector<std::vector<int>> tail_sets(const Graph& g, const std::vector<int>& path);

// Pr[B_path] = prod 1/|T_i|: the path's ages increase and interior vertices
// are younger than all their off-path neighbors.
Rational prob_B_exact(const Graph& g, const std::vector<int>& path);

// S_n = sum over gamma' paths of kappa * Pr[B], exact, for n = 2..n_max.
// Throws EnumerationTooLarge past the path cap.
std::vector<Rational> weighted_sum_series(const Graph& g, int v, int n_max,
                                          std::size_t path_cap = 100000);

// Per-sample path events. L: the path lies in T_2 and its start is youngest
// on it. B: ages increase along the path and every interior vertex is
// younger than all its off-path neighbors. L implies B on every sample.
bool event_L(const Graph& g, const std::vector<int>& path, const AgeAssignment& ages);
bool event_B(const Graph& g, const std::vector<int>& path, const AgeAssignment& ages);

// One Monte Carlo trial of the event I_{v,n}: some gamma' path from v lies in
// T_2 with v the youngest vertex on it.
bool sample_I_vn(const Graph& g, int v, int n, RandomStream& rng);

struct FrequencyEstimate {
    double frequency = 0.0;
    double stderr_ = 0.0;
    long long trials = 0;
};

FrequencyEstimate estimate_I_vn(const Graph& g, int v, int n, long long trials,
                                std::uint64_t seed, bool parallel = true);

} // namespace layerslab
