#include "layerslab/tree.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace layerslab {

std::vector<int> RootedTree::root_path(int v) const {
    std::vector<int> path;
    for (int x = v; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

RootedTree spherically_symmetric_tree(const DegreeProfile& profile, int depth) {
    if (depth < 1) throw DepthZero();
    RootedTree t;
    t.depth = depth;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> current_level{0};
    t.parent.push_back(-1);
    t.level.push_back(0);
    int next_id = 1;
    for (int r = 0; r < depth; ++r) {
        long long deg = profile(r);
        if (deg < 1) throw InvalidConfig("degree profile must be >= 1");
        long long children_per = (r == 0) ? deg : deg - 1;
        std::vector<int> next_level;
        next_level.reserve(current_level.size() * static_cast<std::size_t>(children_per));
        for (int v : current_level) {
            for (long long c = 0; c < children_per; ++c) {
                int u = next_id++;
                t.parent.push_back(v);
                t.level.push_back(r + 1);
                edges.emplace_back(v, u);
                next_level.push_back(u);
            }
        }
        current_level.swap(next_level);
    }
    t.graph = build_graph(edges, next_id);
    t.children.assign(next_id, {});
    for (int v = 1; v < next_id; ++v) t.children[t.parent[v]].push_back(v);
    return t;
}

DoublyExpLevels doubly_exponential_levels(int max_level) {
    // Special levels 2^2^2^n for n >= 0: {4, 16, 65536}; the next one (2^256)
    // is beyond any conceivable max_level.
    auto is_special = [](int r) { return r == 4 || r == 16 || r == 65536; };
    DoublyExpLevels out;
    out.degree.assign(max_level + 1, 3);
    out.log2_degree.assign(max_level + 1, std::log2(3.0));
    out.degree[0] = 2;
    out.log2_degree[0] = 1.0;
    double log2_size = 0.0;      // |l_r|
    long long exact_size = 1;    // valid while <= 2^60
    bool exact = true;
    for (int r = 1; r <= max_level; ++r) {
        long long prev_children = (r == 1) ? out.degree[0] : out.degree[r - 1] - 1;
        double log2_children = (r == 1) ? out.log2_degree[0]
                                        : std::log2(static_cast<double>(out.degree[r - 1]) - 1.0);
        if (out.degree[r - 1] == kHugeDegree && r > 1) log2_children = out.log2_degree[r - 1];
        log2_size += log2_children;
        if (exact) {
            if (prev_children > 0 && exact_size <= (1LL << 60) / prev_children)
                exact_size *= prev_children;
            else
                exact = false;
        }
        if (is_special(r)) {
            if (exact) {
                out.degree[r] = exact_size + 1;
                out.log2_degree[r] = std::log2(static_cast<double>(exact_size) + 1.0);
            } else {
                out.degree[r] = kHugeDegree;
                out.log2_degree[r] = log2_size;
            }
        }
    }
    return out;
}

DegreeProfile doubly_exponential_profile(int max_level) {
    auto levels = std::make_shared<DoublyExpLevels>(doubly_exponential_levels(max_level));
    return [levels](int r) -> long long {
        if (r >= static_cast<int>(levels->degree.size())) throw InvalidConfig("profile queried past max_level");
        return levels->degree[r];
    };
}

int growth_q(const RootedTree& t, int v) {
    std::vector<int> path = t.root_path(v); // path[j] is gamma_{j+1}, at level j
    int r = static_cast<int>(path.size()) - 1;
    int upper = (r + 1) / 2;
    int q = 0;
    for (int i = 2; i < upper; ++i) {
        int d1 = t.degree(path[2 * i - 2]);
        int d2 = t.degree(path[2 * i - 1]);
        if (std::max(d1, d2) > 2) ++q;
    }
    return q;
}

GrowthCheck growth_condition_holds(const RootedTree& t, double C, double a) {
    const double d_o = t.degree(t.root);
    for (int v = 0; v < t.n(); ++v) {
        double bound = C * std::pow(a, growth_q(t, v)) * d_o;
        if (static_cast<double>(t.degree(v)) - 1.0 > bound) return {false, v};
    }
    return {true, -1};
}

GrowthCheck growth_profile_check(const std::vector<double>& log2_degree, double C, double a) {
    // Compare in log2 space so doubly exponential degrees are representable:
    // d_v - 1 <= C a^q d_o  <=>  log2(d_v - 1) <= log2 C + q log2 a + log2 d_o.
    const double log2C = std::log2(C);
    const double log2a = std::log2(a);
    const double log2do = log2_degree[0];
    const int max_level = static_cast<int>(log2_degree.size()) - 1;
    for (int r = 1; r <= max_level; ++r) {
        int upper = (r + 1) / 2;
        int q = 0;
        for (int i = 2; i < upper; ++i) {
            // gamma_{2i-1}, gamma_{2i} sit at levels 2i-2, 2i-1
            if (std::max(log2_degree[2 * i - 2], log2_degree[2 * i - 1]) > 1.0) ++q;
        }
        // log2(d-1) ~= log2(d) for the huge degrees; exact enough at small ones
        double lhs = (log2_degree[r] > 30) ? log2_degree[r]
                                           : std::log2(std::exp2(log2_degree[r]) - 1.0);
        if (lhs > log2C + q * log2a + log2do) return {false, r};
    }
    return {true, -1};
}

} // namespace layerslab
