#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "layerslab/ensemble.hpp"
#include "layerslab/graph.hpp"
#include "layerslab/lattice.hpp"
#include "layerslab/layers.hpp"
#include "layerslab/t2.hpp"

using namespace layerslab;

TEST_CASE("age sampling: single vertex, determinism, uniform orders") {
    RandomStream rng(1);
    CHECK(sample_ages(1, rng).rank == std::vector<std::uint32_t>{0});

    RandomStream a(42), b(42);
    CHECK(sample_ages(100, a).rank == sample_ages(100, b).rank);

    // all 6 orders of 3 vertices appear ~uniformly
    const long long trials = 60000;
    auto orders = run_trials<int>(trials, 7, [&](long long, RandomStream& r) {
        AgeAssignment ages = sample_ages(3, r);
        return static_cast<int>(ages.rank[0] * 9 + ages.rank[1] * 3 + ages.rank[2]);
    });
    std::map<int, long long> hist;
    for (int o : orders) ++hist[o];
    CHECK(hist.size() == 6);
    for (auto& [o, c] : hist) {
        double p = 1.0 / 6, sd = std::sqrt(p * (1 - p) * trials);
        CHECK(std::abs(c - trials * p) < 3 * sd);
    }
}

TEST_CASE("layer computation on explicit ages") {
    Graph star = star_graph(3);
    AgeAssignment ages;
    ages.rank = {0, 1, 2, 3}; // center youngest
    CHECK(compute_layers(star, ages).layer[0] == 1);

    Graph p3 = path_graph(3);
    LayerResult r = compute_layers_raw(p3, {0.1, 0.5, 0.9});
    CHECK(r.layer == std::vector<int>{1, 2, 2});
    CHECK_THROWS_AS(compute_layers_raw(p3, {0.5, 0.5, 0.9}), TiesDetected);
}

TEST_CASE("star center layer marginal is uniform") {
    Graph star = star_graph(4);
    const long long trials = 100000;
    auto layers = run_trials<int>(trials, 3, [&](long long, RandomStream& r) {
        return compute_layers(star, sample_ages(5, r)).layer[0];
    });
    for (int i = 1; i <= 5; ++i) {
        long long c = std::count(layers.begin(), layers.end(), i);
        double p = 0.2, sd = std::sqrt(p * (1 - p) * trials);
        CHECK(std::abs(c - trials * p) < 3 * sd);
    }
    // P(center in T_2) = 2/5
    long long t2 = std::count_if(layers.begin(), layers.end(), [](int l) { return l <= 2; });
    double p = 0.4, sd = std::sqrt(p * (1 - p) * trials);
    CHECK(std::abs(t2 - trials * p) < 3 * sd);
}

TEST_CASE("extract_Tk: full graph at large k, induced edges only") {
    RandomStream rng(5);
    Graph g = erdos_renyi(30, 0.2, rng);
    AgeAssignment ages = sample_ages(g.n, rng);
    LayerResult layers = compute_layers(g, ages);
    TkSubgraph all = extract_Tk(g, layers, g.max_degree() + 1);
    CHECK(all.open_count() == g.n);
    CHECK(all.induced.edge_count() == g.edge_count());

    TkSubgraph t2 = extract_Tk(g, layers, 2);
    for (int i = 0; i < t2.induced.n; ++i)
        for (int j : t2.induced.adj[i]) CHECK(g.has_edge(t2.orig_of[i], t2.orig_of[j]));
}

TEST_CASE("L_1 is an independent set: exhaustive over all orders, n <= 6") {
    std::vector<Graph> hosts = {path_graph(5), cycle_graph(6), complete_graph(4), star_graph(5)};
    for (const Graph& g : hosts) {
        std::vector<std::uint32_t> perm(g.n);
        std::iota(perm.begin(), perm.end(), 0u);
        do {
            AgeAssignment ages;
            ages.rank = perm;
            LayerResult layers = compute_layers(g, ages);
            for (int v = 0; v < g.n; ++v)
                if (layers.layer[v] == 1)
                    for (int u : g.adj[v]) CHECK(layers.layer[u] != 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("layer partition, nesting, order-only dependence") {
    for (int trial = 0; trial < 50; ++trial) {
        RandomStream rng(sub_seed(11, trial));
        Graph g = erdos_renyi(40, 3.0 / 40, rng);
        AgeAssignment ages = sample_ages(g.n, rng);
        LayerResult layers = compute_layers(g, ages);
        for (int v = 0; v < g.n; ++v) {
            CHECK(layers.layer[v] >= 1);
            CHECK(layers.layer[v] <= g.degree(v) + 1);
        }
        for (int k = 1; k <= g.max_degree(); ++k) {
            auto lo = open_mask(layers, k), hi = open_mask(layers, k + 1);
            for (int v = 0; v < g.n; ++v)
                if (lo[v]) CHECK(hi[v]);
        }
        // strictly increasing transformation of ages leaves layers unchanged
        std::vector<double> raw(g.n);
        for (int v = 0; v < g.n; ++v)
            raw[v] = std::exp(0.01 * static_cast<double>(ages.rank[v])) + 1.5;
        CHECK(compute_layers_raw(g, raw).layer == layers.layer);
    }
}

TEST_CASE("T_2 of any sample is a forest (cross-module)") {
    for (int trial = 0; trial < 200; ++trial) {
        RandomStream rng(sub_seed(21, trial));
        Graph g = erdos_renyi(50, 4.0 / 50, rng);
        AgeAssignment ages = sample_ages(g.n, rng);
        T2Structure s = analyze_T2(g, ages);
        CHECK(s.is_forest);
        CHECK(s.ages_monotone);
    }
}

TEST_CASE("lazy ages: determinism, seed sensitivity, uniformity") {
    LazyAgeSource src{123};
    LatticePoint p = origin(3).shifted(1, 4).shifted(2, -7);
    CHECK(src.age(p) == src.age(p));
    LazyAgeSource other{124};
    CHECK(src.age(p) != other.age(p));

    double sum = 0;
    const long long n = 1000000;
    for (long long i = 0; i < n; ++i) {
        LatticePoint q = origin(2);
        q.x[0] = static_cast<std::int32_t>(i % 1000);
        q.x[1] = static_cast<std::int32_t>(i / 1000);
        sum += static_cast<double>(src.age(q)) * 0x1.0p-64;
    }
    CHECK(std::abs(sum / static_cast<double>(n) - 0.5) < 0.002);
}

TEST_CASE("lattice layers: d=1 always open at k=3; d=2 marginal 1/5") {
    LazyAgeSource src{5};
    for (int i = -20; i <= 20; ++i) {
        LatticePoint p = origin(1);
        p.x[0] = i;
        CHECK(lattice_layer_at_most(src, p, 3));
    }
    const long long trials = 100000;
    long long open = 0;
    for (long long i = 0; i < trials; ++i) {
        LatticePoint p = origin(2);
        p.x[0] = static_cast<std::int32_t>(3 * (i % 400));
        p.x[1] = static_cast<std::int32_t>(3 * (i / 400));
        open += lattice_layer_at_most(src, p, 1);
    }
    double p = 0.2, sd = std::sqrt(p * (1 - p) * trials);
    // points are spaced so their neighborhoods never overlap
    CHECK(std::abs(open - trials * p) < 3 * sd);

    // nesting on the lattice
    LatticePoint q = origin(4).shifted(0, 2).shifted(3, 5);
    int layer = lattice_layer(src, q);
    for (int k = layer; k <= 9; ++k) CHECK(lattice_layer_at_most(src, q, k));
}
