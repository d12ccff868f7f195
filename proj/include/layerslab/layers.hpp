#pragma once

#include <cstdint>
#include <vector>

#include "layerslab/graph.hpp"
#include "layerslab/rng.hpp"

namespace layerslab {

// Ages on a finite graph, stored as ranks of a uniformly random permutation:
// rank 0 is the youngest vertex. Only the induced order is ever consumed, so
// ranks are equivalent to Uniform[0,1] draws and tie-free by construction.
struct AgeAssignment {
    std::vector<std::uint32_t> rank;

    int n() const { return static_cast<int>(rank.size()); }
    bool younger(int u, int v) const { return rank[u] < rank[v]; }
};

AgeAssignment sample_ages(int n, RandomStream& rng);

// layer(v) = 1 + #(strictly younger neighbors), in 1..deg(v)+1.
struct LayerResult {
    std::vector<int> layer;
};

LayerResult compute_layers(const Graph& g, const AgeAssignment& ages);

// Same from raw float ages; throws TiesDetected when two adjacent vertices
// share an age.
LayerResult compute_layers_raw(const Graph& g, const std::vector<double>& age);

// Vertex-induced subgraph on the open set {v : layer(v) <= k}.
struct TkSubgraph {
    int k = 0;
    std::vector<char> open;       // size n of the host
    Graph induced;                // relabeled 0..n_open-1
    std::vector<int> orig_of;     // induced id -> host id
    std::vector<int> induced_of;  // host id -> induced id or -1

    int open_count() const { return induced.n; }
};

TkSubgraph extract_Tk(const Graph& g, const LayerResult& layers, int k);

std::vector<char> open_mask(const LayerResult& layers, int k);

// Size of the largest connected component of T_k, without materializing the
// induced graph. 0 when the open set is empty.
int largest_open_component(const Graph& g, const LayerResult& layers, int k);

} // namespace layerslab
