#include "layerslab/t2.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "layerslab/ensemble.hpp"

namespace layerslab {

T2Structure analyze_T2(const Graph& g, const AgeAssignment& ages) {
    LayerResult layers = compute_layers(g, ages);
    T2Structure s;
    s.open = open_mask(layers, 2);
    std::vector<int> comp(g.n, -1);
    std::vector<int> stack;
    std::vector<char> vis(g.n, 0);
    std::vector<int> bfs;
    for (int start = 0; start < g.n; ++start) {
        if (!s.open[start] || comp[start] != -1) continue;
        int id = s.component_count++;
        int size = 0;
        long long degree_sum = 0;
        int min_v = start;
        comp[start] = id;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++size;
            s.open_count++;
            if (ages.rank[v] < ages.rank[min_v]) min_v = v;
            for (int u : g.adj[v]) {
                if (!s.open[u]) continue;
                ++degree_sum;
                if (comp[u] == -1) {
                    comp[u] = id;
                    stack.push_back(u);
                }
            }
        }
        s.component_min.push_back(min_v);
        if (degree_sum / 2 != size - 1) s.is_forest = false;
        // Ages must increase away from the component minimum: every BFS tree
        // edge from it has to go strictly older.
        bfs.assign(1, min_v);
        vis[min_v] = 1;
        for (std::size_t h = 0; h < bfs.size(); ++h) {
            int v = bfs[h];
            for (int u : g.adj[v]) {
                if (!s.open[u] || comp[u] != id || vis[u]) continue;
                if (ages.rank[u] < ages.rank[v]) s.ages_monotone = false;
                vis[u] = 1;
                bfs.push_back(u);
            }
        }
    }
    return s;
}

std::vector<std::vector<int>> enumerate_gamma_prime(const Graph& g, int v, int n) {
    if (n < 1) throw InvalidConfig("n must be >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> cur{v};
    std::function<void()> dfs = [&] {
        if (static_cast<int>(cur.size()) == n + 1) {
            out.push_back(cur);
            return;
        }
        int tail = cur.back();
        for (int u : g.adj[tail]) {
            if (g.degree(u) < 2) continue;
            bool ok = true;
            // simple + chord-free: u may touch only the current tail
            for (std::size_t i = 0; ok && i + 1 < cur.size(); ++i)
                if (cur[i] == u || g.has_edge(cur[i], u)) ok = false;
            if (!ok) continue;
            cur.push_back(u);
            dfs();
            cur.pop_back();
        }
    };
    dfs();
    return out;
}

Rational kappa(const Graph& g, const std::vector<int>& path) {
    Rational k = 1;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        long long d = g.degree(path[i]);
        long long d_prev = g.degree(path[i - 1]);
        k *= Rational(d, d - 1);
        k *= Rational(d + d_prev - 1, d_prev);
    }
    return k;
}

std::vector<std::vector<int>> tail_sets(const Graph& g, const std::vector<int>& path) {
    const int n = static_cast<int>(path.size()) - 1;
    if (n < 1) throw InvalidConfig("path needs at least one edge");
    std::vector<std::vector<int>> sets(n);
    if (n == 1) {
        sets[0] = {path[0], path[1]};
        std::sort(sets[0].begin(), sets[0].end());
        return sets;
    }
    // T_i for i = 2..n (1-indexed): closed neighborhood of the tail
    // {p[i-1], ..., p[n-1]} minus p[i-2].
    std::vector<char> in(g.n, 0);
    std::vector<int> members;
    auto add = [&](int u) {
        if (!in[u]) {
            in[u] = 1;
            members.push_back(u);
        }
    };
    for (int i = n; i >= 2; --i) {
        add(path[i - 1]);
        for (int u : g.adj[path[i - 1]]) add(u);
        std::vector<int> s;
        s.reserve(members.size());
        for (int u : members)
            if (u != path[i - 2]) s.push_back(u);
        std::sort(s.begin(), s.end());
        sets[i - 1] = std::move(s);
    }
    // T_1 = T_2 with the start vertex added back.
    std::vector<int> t1 = sets[1];
    if (!std::binary_search(t1.begin(), t1.end(), path[0])) {
        t1.push_back(path[0]);
        std::sort(t1.begin(), t1.end());
    }
    sets[0] = std::move(t1);
    return sets;
}

Rational prob_B_exact(const Graph& g, const std::vector<int>& path) {
    Rational p = 1;
    for (const auto& s : tail_sets(g, path)) p /= static_cast<long long>(s.size());
    return p;
}

std::vector<Rational> weighted_sum_series(const Graph& g, int v, int n_max, std::size_t path_cap) {
    std::vector<Rational> out;
    for (int n = 2; n <= n_max; ++n) {
        auto paths = enumerate_gamma_prime(g, v, n);
        if (paths.size() > path_cap) throw EnumerationTooLarge();
        Rational s = 0;
        for (const auto& p : paths) s += kappa(g, p) * prob_B_exact(g, p);
        out.push_back(std::move(s));
    }
    return out;
}

bool event_L(const Graph& g, const std::vector<int>& path, const AgeAssignment& ages) {
    LayerResult layers = compute_layers(g, ages);
    for (int v : path)
        if (layers.layer[v] > 2) return false;
    for (std::size_t i = 1; i < path.size(); ++i)
        if (ages.rank[path[i]] < ages.rank[path[0]]) return false;
    return true;
}

bool event_B(const Graph& g, const std::vector<int>& path, const AgeAssignment& ages) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (ages.rank[path[i]] > ages.rank[path[i + 1]]) return false;
    std::vector<char> on_path(g.n, 0);
    for (int v : path) on_path[v] = 1;
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        for (int u : g.adj[path[i]])
            if (!on_path[u] && ages.rank[u] < ages.rank[path[i]]) return false;
    return true;
}

bool sample_I_vn(const Graph& g, int v, int n, RandomStream& rng) {
    AgeAssignment ages = sample_ages(g.n, rng);
    LayerResult layers = compute_layers(g, ages);
    // Witness search: a gamma' path lies in T_2 with v youngest. Such a path
    // has increasing ages from v, which prunes the DFS hard.
    if (layers.layer[v] > 2) return false;
    bool found = false;
    std::vector<int> cur{v};
    std::function<void()> dfs = [&] {
        if (found) return;
        if (static_cast<int>(cur.size()) == n + 1) {
            found = true;
            return;
        }
        int tail = cur.back();
        for (int u : g.adj[tail]) {
            if (found) return;
            if (ages.rank[u] < ages.rank[tail]) continue;
            if (layers.layer[u] > 2) continue;
            if (g.degree(u) < 2) continue;
            bool ok = true;
            for (std::size_t i = 0; ok && i + 1 < cur.size(); ++i)
                if (cur[i] == u || g.has_edge(cur[i], u)) ok = false;
            if (!ok) continue;
            cur.push_back(u);
            dfs();
            cur.pop_back();
        }
    };
    dfs();
    return found;
}

FrequencyEstimate estimate_I_vn(const Graph& g, int v, int n, long long trials,
                                std::uint64_t seed, bool parallel) {
    std::vector<double> hits = run_trials<double>(
        trials, seed,
        [&](long long, RandomStream& rng) { return sample_I_vn(g, v, n, rng) ? 1.0 : 0.0; },
        parallel);
    Summary s = summarize(hits);
    return {s.mean, s.stderr_, trials};
}

} // namespace layerslab
