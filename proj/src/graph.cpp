#include "layerslab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

namespace layerslab {

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

long long Graph::edge_count() const {
    long long deg_sum = 0;
    for (const auto& a : adj) deg_sum += static_cast<long long>(a.size());
    return deg_sum / 2;
}

int Graph::max_degree() const {
    int m = 0;
    for (const auto& a : adj) m = std::max<int>(m, static_cast<int>(a.size()));
    return m;
}

void Graph::check_invariants() const {
    if (static_cast<int>(adj.size()) != n) throw Error("adjacency size mismatch");
    for (int v = 0; v < n; ++v) {
        const auto& a = adj[v];
        for (std::size_t i = 0; i < a.size(); ++i) {
            int u = a[i];
            if (u < 0 || u >= n) throw EndpointOutOfRange();
            if (u == v) throw SelfLoop();
            if (i > 0 && a[i - 1] >= u) throw DuplicateEdge("adjacency not strictly sorted");
            if (!has_edge(u, v)) throw Error("adjacency not symmetric");
        }
    }
}

Graph build_graph(const std::vector<std::pair<int, int>>& edges, int n) {
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw EndpointOutOfRange();
        if (u == v) throw SelfLoop();
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw DuplicateEdge();
    }
    return g;
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(e, n);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    if (n >= 3) e.emplace_back(n - 1, 0);
    return build_graph(e, n);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return build_graph(e, n);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return build_graph(e, leaves + 1);
}

long long MultiGraph::loop_count() const {
    long long c = 0;
    for (auto [u, v] : edges) c += (u == v);
    return c;
}

bool MultiGraph::is_simple() const {
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i].first == sorted[i].second) return false;
        if (i > 0 && sorted[i] == sorted[i - 1]) return false;
    }
    return true;
}

long long DegreeSequence::sum() const {
    return std::accumulate(d.begin(), d.end(), 0LL);
}

void DegreeSequence::require_even() const {
    if (sum() % 2 != 0) throw OddDegreeSum();
}

DegreeSequence DegreeSequence::constant(int degree, int n) {
    DegreeSequence s;
    s.d.assign(n, degree);
    return s;
}

DegreeSequence DegreeSequence::parse(const std::string& spec) {
    DegreeSequence s;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto x = tok.find('x');
        if (x == std::string::npos) {
            s.d.push_back(std::stoi(tok));
        } else {
            int deg = std::stoi(tok.substr(0, x));
            long long count = std::stoll(tok.substr(x + 1));
            for (long long i = 0; i < count; ++i) s.d.push_back(deg);
        }
    }
    if (s.d.empty()) throw InvalidConfig("empty degree sequence: " + spec);
    return s;
}

MultiGraph configuration_multigraph(const DegreeSequence& seq, RandomStream& rng) {
    seq.require_even();
    MultiGraph mg;
    mg.n = static_cast<int>(seq.d.size());
    mg.degree = seq.d;
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(seq.sum()));
    for (int v = 0; v < mg.n; ++v)
        for (int i = 0; i < seq.d[v]; ++i) stubs.push_back(v);
    // Fisher-Yates makes the stub order uniform; pairing consecutive stubs is
    // then a uniform perfect matching.
    for (std::size_t i = stubs.size(); i > 1; --i)
        std::swap(stubs[i - 1], stubs[rng.below(i)]);
    mg.edges.reserve(stubs.size() / 2);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        int u = stubs[i], v = stubs[i + 1];
        if (u > v) std::swap(u, v);
        mg.edges.emplace_back(u, v);
    }
    return mg;
}

Graph graph_from_multigraph(const MultiGraph& mg) {
    if (!mg.is_simple()) throw Error("multigraph is not simple");
    return build_graph(mg.edges, mg.n);
}

Graph simple_graph_from_sequence(const DegreeSequence& seq, RandomStream& rng,
                                 int max_attempts, int* attempts_used) {
    seq.require_even();
    if (max_attempts < 1) throw InvalidConfig("max_attempts must be >= 1");
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        MultiGraph mg = configuration_multigraph(seq, rng);
        if (mg.is_simple()) {
            if (attempts_used) *attempts_used = attempt;
            return graph_from_multigraph(mg);
        }
    }
    throw AttemptsExhausted();
}

Graph erdos_renyi(int n, double p, RandomStream& rng) {
    if (p < 0.0 || p > 1.0) throw InvalidConfig("p outside [0,1]");
    std::vector<std::pair<int, int>> e;
    if (p >= 1.0) return complete_graph(n);
    if (p > 0.0) {
        // Skip-sampling over the ordered pair list; geometric gaps avoid
        // touching all n(n-1)/2 pairs when p is small.
        const double log_q = std::log1p(-p);
        long long total = static_cast<long long>(n) * (n - 1) / 2;
        long long idx = -1;
        for (;;) {
            double u = rng.unit();
            double gap = std::floor(std::log1p(-u) / log_q);
            if (gap > static_cast<double>(total)) break;
            idx += 1 + static_cast<long long>(gap);
            if (idx >= total) break;
            // invert idx -> (i, j)
            long long i = 0;
            long long row = n - 1;
            long long rem = idx;
            while (rem >= row) {
                rem -= row;
                --row;
                ++i;
            }
            long long j = i + 1 + rem;
            e.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return build_graph(e, n);
}

Components connected_components(const Graph& g) {
    Components c;
    c.label.assign(g.n, -1);
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (c.label[s] != -1) continue;
        int id = c.count();
        c.size.push_back(0);
        stack.push_back(s);
        c.label[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++c.size[id];
            for (int u : g.adj[v]) {
                if (c.label[u] == -1) {
                    c.label[u] = id;
                    stack.push_back(u);
                }
            }
        }
    }
    return c;
}

int Components::largest() const {
    int best = 0;
    for (int s : size) best = std::max(best, s);
    return best;
}

std::vector<int> bfs_distance(const Graph& g, int source) {
    if (source < 0 || source >= g.n) throw EndpointOutOfRange();
    std::vector<int> dist(g.n, kUnreachable);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.adj[v]) {
            if (dist[u] == kUnreachable) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
        }
    }
    return dist;
}

bool ball_is_tree(const Graph& g, int v, int r) {
    if (r < 0) throw InvalidConfig("radius must be >= 0");
    // Collect the ball, then compare induced edge count to size - 1. The ball
    // is connected by construction, so equality means acyclic.
    std::vector<int> dist(g.n, kUnreachable);
    std::vector<int> ball;
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    ball.push_back(v);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (dist[x] == r) continue;
        for (int u : g.adj[x]) {
            if (dist[u] == kUnreachable) {
                dist[u] = dist[x] + 1;
                ball.push_back(u);
                q.push(u);
            }
        }
    }
    long long induced_deg = 0;
    for (int x : ball)
        for (int u : g.adj[x])
            if (dist[u] != kUnreachable) ++induced_deg;
    long long edges = induced_deg / 2;
    return edges == static_cast<long long>(ball.size()) - 1;
}

std::vector<int> distant_independent_set(const Graph& g, int min_dist, int ball_radius) {
    if (min_dist < 1) throw InvalidConfig("min_dist must be >= 1");
    std::vector<int> chosen;
    std::vector<char> blocked(g.n, 0);
    std::vector<int> dist(g.n);
    std::vector<int> frontier, next;
    for (int v = 0; v < g.n; ++v) {
        if (blocked[v]) continue;
        if (!ball_is_tree(g, v, ball_radius)) continue;
        chosen.push_back(v);
        // Block everything within distance min_dist - 1.
        std::fill(dist.begin(), dist.end(), kUnreachable);
        dist[v] = 0;
        blocked[v] = 1;
        frontier.assign(1, v);
        for (int level = 1; level < min_dist && !frontier.empty(); ++level) {
            next.clear();
            for (int x : frontier)
                for (int u : g.adj[x])
                    if (dist[u] == kUnreachable) {
                        dist[u] = level;
                        blocked[u] = 1;
                        next.push_back(u);
                    }
            frontier.swap(next);
        }
    }
    return chosen;
}

Graph read_edge_list(std::istream& in, int n) {
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int max_v = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw IoFailure("bad edge line: " + line);
        edges.emplace_back(u, v);
        max_v = std::max({max_v, u, v});
    }
    if (n < 0) n = max_v + 1;
    return build_graph(edges, n);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (int v = 0; v < g.n; ++v)
        for (int u : g.adj[v])
            if (v < u) out << v << ' ' << u << '\n';
}

} // namespace layerslab
