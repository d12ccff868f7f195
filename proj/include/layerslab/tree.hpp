#pragma once

#include <functional>
#include <vector>

#include "layerslab/graph.hpp"

namespace layerslab {

// Finite truncation of a rooted tree. Vertices are numbered in BFS order
// (root = 0), so level boundaries are contiguous. Vertices at level `depth`
// are leaves of the truncation, not of the ideal infinite tree.
struct RootedTree {
    Graph graph;
    int root = 0;
    std::vector<int> parent;                 // -1 at the root
    std::vector<int> level;
    std::vector<std::vector<int>> children;  // sorted, = adj minus parent
    int depth = 0;

    int n() const { return graph.n; }
    int degree(int v) const { return graph.degree(v); }
    // Root path o = p[0], ..., p[level(v)] = v.
    std::vector<int> root_path(int v) const;
};

using DegreeProfile = std::function<long long(int)>; // level -> degree in the ideal tree

// Spherically symmetric tree: every level-r vertex has degree profile(r)
// (the root gets profile(0) children, others profile(r) - 1). Levels
// 0..depth are materialized; throws DepthZero when depth < 1.
RootedTree spherically_symmetric_tree(const DegreeProfile& profile, int depth);

inline DegreeProfile regular_profile(int degree) {
    return [degree](int) { return static_cast<long long>(degree); };
}

// Degree sequence saturates here once level sizes pass 2^60; log2_degree
// stays meaningful throughout.
inline constexpr long long kHugeDegree = (1LL << 62);

struct DoublyExpLevels {
    std::vector<long long> degree; // per level, kHugeDegree once unrepresentable
    std::vector<double> log2_degree;
};

// Degree-2 root, degree 3 elsewhere, except levels r in {2^2^2^n : n >= 0}
// = {4, 16, 65536, ...} where the degree jumps to |level r| + 1. Level sizes
// along this profile eventually outrun any geometric envelope.
DoublyExpLevels doubly_exponential_levels(int max_level);
DegreeProfile doubly_exponential_profile(int max_level);

// q_v of the growth condition: the number of strictly interior index pairs
// (gamma_{2i-1}, gamma_{2i}) on the root path of v whose max degree exceeds 2.
int growth_q(const RootedTree& t, int v);

struct GrowthCheck {
    bool holds = true;
    int witness = -1; // first violating vertex (or level for the profile check)
};

// Checks d_v - 1 <= C a^{q_v} d_o for every materialized vertex.
GrowthCheck growth_condition_holds(const RootedTree& t, double C, double a);

// Same check on an un-materialized spherically symmetric profile given as
// per-level log2 degrees, so doubly exponential level sizes are fine.
GrowthCheck growth_profile_check(const std::vector<double>& log2_degree, double C, double a);

} // namespace layerslab
