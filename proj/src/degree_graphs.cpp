#include "layerslab/degree_graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace layerslab {

namespace {

struct MultAdj {
    // per vertex: sorted (neighbor, multiplicity), loops excluded
    std::vector<std::vector<std::pair<int, int>>> adj;
};

MultAdj build_mult_adj(const MultiGraph& mg) {
    std::map<std::pair<int, int>, int> mult;
    for (auto [u, v] : mg.edges)
        if (u != v) ++mult[{u, v}];
    MultAdj a;
    a.adj.assign(mg.n, {});
    for (auto& [e, m] : mult) {
        a.adj[e.first].emplace_back(e.second, m);
        a.adj[e.second].emplace_back(e.first, m);
    }
    for (auto& row : a.adj) std::sort(row.begin(), row.end());
    return a;
}

} // namespace

CycleCensus count_cycles(const MultiGraph& mg, int k_max) {
    if (k_max < 1) throw InvalidConfig("k_max must be >= 1");
    if (k_max > 8) throw KTooLarge();
    CycleCensus c;
    c.k_max = k_max;
    c.count.assign(k_max, 0);
    c.count[0] = mg.loop_count();
    MultAdj a = build_mult_adj(mg);
    if (k_max >= 2) {
        for (int v = 0; v < mg.n; ++v)
            for (auto [u, m] : a.adj[v])
                if (v < u) c.count[1] += static_cast<long long>(m) * (m - 1) / 2;
    }
    if (k_max < 3) return c;
    // Cycles of length >= 3: anchor at the smallest vertex s, walk over
    // vertices > s, and break the two traversal directions by requiring the
    // first step to be smaller than the closing one. Parallel multiplicities
    // multiply along the walk.
    std::vector<int> path;
    std::function<void(int, int, long long)> dfs = [&](int s, int v, long long weight) {
        int len = static_cast<int>(path.size()); // vertices placed, incl. s
        for (auto [u, m] : a.adj[v]) {
            if (u == s && len >= 3 && path[1] < v) c.count[len - 1] += weight * m;
            if (len >= k_max) continue;
            if (u <= s) continue;
            if (std::find(path.begin(), path.end(), u) != path.end()) continue;
            path.push_back(u);
            dfs(s, u, weight * m);
            path.pop_back();
        }
    };
    for (int s = 0; s < mg.n; ++s) {
        path.assign(1, s);
        dfs(s, s, 1);
    }
    return c;
}

CycleCensus count_cycles(const Graph& g, int k_max) {
    MultiGraph mg;
    mg.n = g.n;
    mg.degree.assign(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        mg.degree[v] = g.degree(v);
        for (int u : g.adj[v])
            if (v < u) mg.edges.emplace_back(v, u);
    }
    return count_cycles(mg, k_max);
}

Rational molloy_reed_Q(const DegreeSequence& seq) {
    if (seq.d.empty()) throw InvalidConfig("empty degree sequence");
    Rational q = 0;
    for (int deg : seq.d) q += Rational(static_cast<long long>(deg) * (deg - 2));
    return q / static_cast<long long>(seq.d.size());
}

long long degree_smoothing_step(int r, int r_prime) {
    if (r_prime < r + 2) throw BadOrder();
    long long decrease = 2LL * (r_prime - r - 1);
    long long before = static_cast<long long>(r) * (r - 2) + static_cast<long long>(r_prime) * (r_prime - 2);
    long long after = static_cast<long long>(r + 1) * (r - 1) + static_cast<long long>(r_prime - 1) * (r_prime - 3);
    if (before - after != decrease) throw Error("smoothing identity violated");
    return decrease;
}

} // namespace layerslab
