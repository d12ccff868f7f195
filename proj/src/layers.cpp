#include "layerslab/layers.hpp"

#include <algorithm>
#include <numeric>

namespace layerslab {

AgeAssignment sample_ages(int n, RandomStream& rng) {
    AgeAssignment a;
    a.rank.resize(n);
    std::iota(a.rank.begin(), a.rank.end(), 0u);
    for (std::size_t i = a.rank.size(); i > 1; --i)
        std::swap(a.rank[i - 1], a.rank[rng.below(i)]);
    return a;
}

LayerResult compute_layers(const Graph& g, const AgeAssignment& ages) {
    if (ages.n() != g.n) throw InvalidConfig("age assignment size mismatch");
    LayerResult r;
    r.layer.resize(g.n);
    for (int v = 0; v < g.n; ++v) {
        int younger = 0;
        for (int u : g.adj[v]) younger += ages.rank[u] < ages.rank[v];
        r.layer[v] = 1 + younger;
    }
    return r;
}

LayerResult compute_layers_raw(const Graph& g, const std::vector<double>& age) {
    if (static_cast<int>(age.size()) != g.n) throw InvalidConfig("age vector size mismatch");
    LayerResult r;
    r.layer.resize(g.n);
    for (int v = 0; v < g.n; ++v) {
        int younger = 0;
        for (int u : g.adj[v]) {
            if (age[u] == age[v]) throw TiesDetected();
            younger += age[u] < age[v];
        }
        r.layer[v] = 1 + younger;
    }
    return r;
}

std::vector<char> open_mask(const LayerResult& layers, int k) {
    std::vector<char> open(layers.layer.size());
    for (std::size_t v = 0; v < open.size(); ++v) open[v] = layers.layer[v] <= k;
    return open;
}

TkSubgraph extract_Tk(const Graph& g, const LayerResult& layers, int k) {
    if (k < 1) throw InvalidConfig("k must be >= 1");
    TkSubgraph t;
    t.k = k;
    t.open = open_mask(layers, k);
    t.induced_of.assign(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        if (t.open[v]) {
            t.induced_of[v] = static_cast<int>(t.orig_of.size());
            t.orig_of.push_back(v);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < g.n; ++v) {
        if (!t.open[v]) continue;
        for (int u : g.adj[v])
            if (v < u && t.open[u]) edges.emplace_back(t.induced_of[v], t.induced_of[u]);
    }
    t.induced = build_graph(edges, static_cast<int>(t.orig_of.size()));
    return t;
}

int largest_open_component(const Graph& g, const LayerResult& layers, int k) {
    std::vector<char> open = open_mask(layers, k);
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack;
    int best = 0;
    for (int s = 0; s < g.n; ++s) {
        if (!open[s] || seen[s]) continue;
        int size = 0;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++size;
            for (int u : g.adj[v])
                if (open[u] && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        best = std::max(best, size);
    }
    return best;
}

} // namespace layerslab
