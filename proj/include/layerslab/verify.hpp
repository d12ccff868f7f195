#pragma once

#include <string>
#include <vector>

#include "layerslab/tree.hpp"
#include "layerslab/tree_paths.hpp"

namespace layerslab {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The exact verification suite: every closed form cross-checked against the
// permutation oracle as rationals with zero tolerance, plus the purely
// arithmetic identities. heavy=false skips the largest enumerations
// (>= 11 items) for a quick smoke run.
std::vector<CheckResult> run_exact_checks(bool heavy = true, bool parallel = true);

// Host construction shared with the tests: a tree whose spine vertex j has
// degree spine_degrees[j] (filled out with leaf children), optionally forked
// at the last spine vertex into two branches with given degree lists.
RootedTree spine_tree(const std::vector<int>& spine_degrees);
RootedTree rooted_from_graph(const Graph& g, int root);

// The two descending paths of a fork host built by fork_tree.
struct ForkHost {
    RootedTree tree;
    TreePath path_a;
    TreePath path_b;
};

// Common prefix of degrees prefix[0..j-1]; at the fork vertex (the last
// prefix entry) two branches continue with branch_a / branch_b degrees.
// Degrees count all neighbors (parent included); every listed vertex gets
// leaf children to reach its degree.
ForkHost fork_tree(const std::vector<int>& prefix, const std::vector<int>& branch_a,
                   const std::vector<int>& branch_b);

} // namespace layerslab
