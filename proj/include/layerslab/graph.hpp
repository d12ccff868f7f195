#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "layerslab/errors.hpp"
#include "layerslab/rational.hpp"
#include "layerslab/rng.hpp"

namespace layerslab {

// Finite simple undirected graph. Vertices are dense ints 0..n-1, adjacency
// lists are kept sorted. Immutable after construction; safe to share across
// worker threads.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    long long edge_count() const;
    int max_degree() const;
    void check_invariants() const; // simplicity + symmetry; throws on violation
};

Graph build_graph(const std::vector<std::pair<int, int>>& edges, int n);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves); // vertex 0 is the center

// Multigraph as produced by a half-edge matching: loops and parallel edges
// allowed, degree counts a loop twice.
struct MultiGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // stored with u <= v
    std::vector<int> degree;

    long long edge_count() const { return static_cast<long long>(edges.size()); }
    long long loop_count() const;
    bool is_simple() const;
};

struct DegreeSequence {
    std::vector<int> d;

    long long sum() const;
    void require_even() const; // throws OddDegreeSum
    static DegreeSequence constant(int degree, int n);
    // "3,3,4" or "3x100"; comma-separated entries, each "d" or "dxCOUNT".
    static DegreeSequence parse(const std::string& spec);
};

// Uniform perfect matching of the half-edges mandated by seq.
MultiGraph configuration_multigraph(const DegreeSequence& seq, RandomStream& rng);

// Conversion requires is_simple().
Graph graph_from_multigraph(const MultiGraph& mg);

// Rejection sampling: resample whole matchings until simple, so the law is
// uniform over simple graphs with the given degree sequence.
Graph simple_graph_from_sequence(const DegreeSequence& seq, RandomStream& rng,
                                 int max_attempts = 1000, int* attempts_used = nullptr);

Graph erdos_renyi(int n, double p, RandomStream& rng);

struct Components {
    std::vector<int> label;   // component id per vertex
    std::vector<int> size;    // per component id
    int count() const { return static_cast<int>(size.size()); }
    int largest() const;
};

Components connected_components(const Graph& g);

inline constexpr int kUnreachable = -1;

// BFS distances from source; kUnreachable marks infinite distance.
std::vector<int> bfs_distance(const Graph& g, int source);

// True iff the induced subgraph on the ball {u : d(u,v) <= r} is acyclic.
bool ball_is_tree(const Graph& g, int v, int r);

// Greedy scan in ascending vertex id: keep v when its ball passes
// ball_is_tree and v is at distance >= min_dist from everything kept so far.
std::vector<int> distant_independent_set(const Graph& g, int min_dist, int ball_radius);

// Edge-list text format: one "u v" pair per line, 0-based. Lines starting
// with '#' are ignored. n is max endpoint + 1 unless given.
Graph read_edge_list(std::istream& in, int n = -1);
void write_edge_list(const Graph& g, std::ostream& out);

} // namespace layerslab
