#include <doctest.h>

#include <sstream>

#include "layerslab/ensemble.hpp"
#include "layerslab/graph.hpp"
#include "layerslab/tree.hpp"

using namespace layerslab;

TEST_CASE("build_graph basics and named errors") {
    Graph g = build_graph({{0, 1}, {1, 2}}, 3);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);
    g.check_invariants();
    CHECK_THROWS_AS(build_graph({{0, 0}}, 1), SelfLoop);
    CHECK_THROWS_AS(build_graph({{0, 1}, {0, 1}}, 2), DuplicateEdge);
    CHECK_THROWS_AS(build_graph({{0, 3}}, 3), EndpointOutOfRange);
}

TEST_CASE("spherically symmetric tree counting") {
    RootedTree t3 = spherically_symmetric_tree(regular_profile(3), 2);
    CHECK(t3.n() == 10); // 1 + 3 + 6
    CHECK(t3.degree(0) == 3);
    RootedTree t2 = spherically_symmetric_tree(regular_profile(2), 5);
    CHECK(t2.n() == 11); // two arms of length 5
    CHECK(t2.degree(0) == 2);
    CHECK_THROWS_AS(spherically_symmetric_tree(regular_profile(3), 0), DepthZero);
}

TEST_CASE("counterexample preset has the doubly exponential blowup at level 4") {
    auto levels = doubly_exponential_levels(20);
    CHECK(levels.degree[0] == 2);
    CHECK(levels.degree[1] == 3);
    CHECK(levels.degree[4] == 17);   // |l_4| = 16
    CHECK(levels.degree[5] == 3);
    CHECK(levels.degree[16] == (1 << 19) + 1);
    RootedTree t = spherically_symmetric_tree(doubly_exponential_profile(6), 5);
    long long level4 = 0;
    for (int v = 0; v < t.n(); ++v)
        if (t.level[v] == 4) ++level4;
    CHECK(level4 == 16);
    for (int v = 0; v < t.n(); ++v)
        if (t.level[v] == 4) CHECK(t.degree(v) == 17);
}

TEST_CASE("configuration model forced matchings") {
    RandomStream rng(1);
    DegreeSequence pair = DegreeSequence::parse("1,1");
    MultiGraph mg = configuration_multigraph(pair, rng);
    REQUIRE(mg.edges.size() == 1);
    CHECK(mg.edges[0] == std::pair<int, int>{0, 1});

    DegreeSequence loop = DegreeSequence::parse("2");
    MultiGraph ml = configuration_multigraph(loop, rng);
    REQUIRE(ml.edges.size() == 1);
    CHECK(ml.loop_count() == 1);
}

TEST_CASE("configuration model (2,2): parallel pair w.p. 2/3, two loops w.p. 1/3") {
    DegreeSequence seq = DegreeSequence::parse("2,2");
    const long long trials = 100000;
    auto kinds = run_trials<int>(trials, 77, [&](long long, RandomStream& rng) {
        MultiGraph mg = configuration_multigraph(seq, rng);
        return mg.loop_count() == 2 ? 1 : 0;
    });
    long long loops = 0;
    for (int k : kinds) loops += k;
    double freq = static_cast<double>(loops) / trials;
    CHECK(freq == doctest::Approx(1.0 / 3).epsilon(0.03)); // +-0.01 absolute
    CHECK(std::abs(freq - 1.0 / 3) < 0.01);
}

TEST_CASE("simple graph from (3,3,3,3) is K4; odd sums rejected") {
    RandomStream rng(2);
    Graph g = simple_graph_from_sequence(DegreeSequence::constant(3, 4), rng);
    CHECK(g.edge_count() == 6);
    for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
    CHECK_THROWS_AS(simple_graph_from_sequence(DegreeSequence::parse("1,1,1"), rng), OddDegreeSum);
}

TEST_CASE("rejection acceptance rate near exp(-2) for 3-regular n=100") {
    DegreeSequence seq = DegreeSequence::constant(3, 100);
    const long long attempts = 10000;
    auto ok = run_trials<int>(attempts, 31, [&](long long, RandomStream& rng) {
        return configuration_multigraph(seq, rng).is_simple() ? 1 : 0;
    });
    long long simple = 0;
    for (int k : ok) simple += k;
    double rate = static_cast<double>(simple) / attempts;
    CHECK(std::abs(rate - std::exp(-2.0)) < 0.02);
}

TEST_CASE("erdos-renyi extremes and mean degree") {
    RandomStream rng(3);
    CHECK(erdos_renyi(6, 0.0, rng).edge_count() == 0);
    CHECK(erdos_renyi(6, 1.0, rng).edge_count() == 15);
    const int n = 1000;
    const int draws = 100;
    double total_degree = 0;
    for (int i = 0; i < draws; ++i) {
        RandomStream r(sub_seed(4, i));
        total_degree += 2.0 * erdos_renyi(n, 3.0 / n, r).edge_count() / n;
    }
    CHECK(std::abs(total_degree / draws - 2.997) < 0.1);
}

TEST_CASE("connected components") {
    CHECK(connected_components(path_graph(3)).largest() == 3);
    Components c = connected_components(build_graph({}, 5));
    CHECK(c.count() == 5);
    Graph two_triangles = build_graph({{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}, 6);
    Components tc = connected_components(two_triangles);
    CHECK(tc.count() == 2);
    CHECK(tc.size[0] == 3);
    CHECK(tc.size[1] == 3);
}

TEST_CASE("bfs distances") {
    auto d = bfs_distance(path_graph(3), 0);
    CHECK(d == std::vector<int>{0, 1, 2});
    auto d2 = bfs_distance(build_graph({}, 2), 0);
    CHECK(d2[1] == kUnreachable);
    auto d3 = bfs_distance(complete_graph(4), 2);
    CHECK(d3 == std::vector<int>{1, 1, 0, 1});
}

TEST_CASE("ball_is_tree") {
    RootedTree t = spherically_symmetric_tree(regular_profile(3), 4);
    CHECK(ball_is_tree(t.graph, 0, 3));
    CHECK(ball_is_tree(t.graph, 5, 10));
    Graph tri = cycle_graph(3);
    CHECK_FALSE(ball_is_tree(tri, 0, 1));
    // two triangles joined by a path of length 5: middle vertex ball of radius
    // 2 misses both triangles
    Graph g = build_graph({{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                           {7, 8}, {8, 9}, {9, 7}},
                          10);
    CHECK(ball_is_tree(g, 4, 2));
    CHECK_FALSE(ball_is_tree(g, 4, 3));
}

TEST_CASE("distant independent set") {
    Graph c100 = cycle_graph(100);
    auto set = distant_independent_set(c100, 15, 3);
    CHECK(set.size() >= 6);
    for (std::size_t i = 0; i < set.size(); ++i) {
        auto dist = bfs_distance(c100, set[i]);
        for (std::size_t j = i + 1; j < set.size(); ++j) CHECK(dist[set[j]] >= 15);
    }
    CHECK(distant_independent_set(complete_graph(4), 15, 1).empty());
    RootedTree t = spherically_symmetric_tree(regular_profile(3), 3);
    CHECK(distant_independent_set(t.graph, 1, 2).size() == static_cast<std::size_t>(t.n()));
}

TEST_CASE("components agree with repeated-BFS reachability on random graphs") {
    for (int trial = 0; trial < 100; ++trial) {
        RandomStream rng(sub_seed(5, trial));
        int n = 2 + rng.below_int(49);
        Graph g = erdos_renyi(n, 2.0 / n, rng);
        Components c = connected_components(g);
        int total = 0;
        for (int s : c.size) total += s;
        CHECK(total == n);
        for (int v = 0; v < n; ++v) {
            auto dist = bfs_distance(g, v);
            for (int u = 0; u < n; ++u)
                CHECK((dist[u] != kUnreachable) == (c.label[u] == c.label[v]));
        }
    }
}

TEST_CASE("self-loop count mean matches (d-1)/2 at desk scale") {
    DegreeSequence seq = DegreeSequence::constant(3, 200);
    const long long draws = 10000;
    auto loops = run_trials<double>(draws, 99, [&](long long, RandomStream& rng) {
        return static_cast<double>(configuration_multigraph(seq, rng).loop_count());
    });
    Summary s = summarize(loops);
    CHECK(std::abs(s.mean - 1.0) < 3 * s.stderr_ + 0.01);
}

TEST_CASE("edge list round trip") {
    RandomStream rng(8);
    Graph g = erdos_renyi(40, 0.1, rng);
    std::stringstream ss;
    write_edge_list(g, ss);
    Graph h = read_edge_list(ss, 40);
    CHECK(g.adj == h.adj);
}

TEST_CASE("generator outputs satisfy the graph invariants") {
    RandomStream rng(13);
    erdos_renyi(50, 0.2, rng).check_invariants();
    simple_graph_from_sequence(DegreeSequence::constant(3, 50), rng).check_invariants();
    spherically_symmetric_tree(regular_profile(4), 4).graph.check_invariants();
    star_graph(7).check_invariants();
}
