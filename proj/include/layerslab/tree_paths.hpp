#pragma once

#include <vector>

#include "layerslab/layers.hpp"
#include "layerslab/rational.hpp"
#include "layerslab/tree.hpp"

namespace layerslab {

// Simple path from the root, as a vertex list p[0] = root, ..., p[len].
// On a tree every simple path from the root descends level by level.
using TreePath = std::vector<int>;

// All simple paths of the given edge length starting at the root.
std::vector<TreePath> enumerate_root_paths(const RootedTree& t, int length);

// Neighbors of p[j] that do not lie on the path.
std::vector<int> off_path_neighbors(const RootedTree& t, const TreePath& p, int j);

// w(path) = 1/d_o * prod over interior vertices of 1/(deg - 1). Sums to one
// over all root paths of a fixed length when no truncation leaf interferes.
Rational path_weight(const RootedTree& t, const TreePath& p);

// Block i of a 2k-vertex path covers the pair (p[2i-2], p[2i-1]), i = 1..k.
// Interior blocks ask both pair members to have at most one younger vertex
// among their off-path neighbors plus the partner. The boundary blocks ask
// the outer vertex to have at most one younger off-path neighbor and the
// inner vertex none; that is the event whose probability the closed-form
// marginals below compute, and it forces the whole path into T_3.
// total_blocks = k of the full path; p may be a partial prefix as long as it
// already contains p[2*block] (the block's off-path sets are fixed then).
bool block_good(const RootedTree& t, const TreePath& p, int block, int total_blocks,
                const AgeAssignment& ages);

struct GoodOutcome {
    std::vector<char> block_ok;
    bool good = false;
};

GoodOutcome check_good(const RootedTree& t, const TreePath& p, const AgeAssignment& ages);

// Closed-form block marginals (exact rationals, validated against the
// permutation oracle). Degrees below 2 raise DegreeTooSmall.
Rational marginal_interior(long long x, long long y);
Rational marginal_first(long long d_root, long long d_second);
Rational marginal_last(long long d_second_to_last, long long d_last);

// Probability that the whole path is good: blocks touch disjoint vertex
// sets on a tree, so it is the product of the block marginals.
Rational prob_Agamma(const RootedTree& t, const TreePath& p);

// f(x,y) = ((x-1)(x-2) + (y-1)(y-2)) / ((x+y-2)(x+y-3)); the interior
// marginal equals (1 + f(x,y)) / ((x-1)(y-1)).
Rational claim_f(long long x, long long y);

struct FMinResult {
    int x = 0, y = 0;
    Rational value;
};
// Exhaustive integer scan over 3 <= x,y <= bound.
FMinResult minimize_claim_f(int bound);

// Pairwise event B for two distinct root paths meeting at 1-indexed position
// j = |meet|: the five-case closed form, selected by j's parity and boundary
// position. Degrees too small for a case's denominators raise DegreeTooSmall.
Rational prob_B_pair(const RootedTree& t, const TreePath& a, const TreePath& b);

// 1-indexed size of the common prefix of two root paths.
int meet_index(const TreePath& a, const TreePath& b);

struct ZkSample {
    Rational zk;
    bool k_good = false;
    long long good_paths = 0;
};

// Z_k = sum over good paths of w / Pr[A]; k-good iff Z_k >= 1/2. Evaluated
// by depth-first search with per-block pruning. Needs depth >= 2k.
ZkSample realized_Zk(const RootedTree& t, const AgeAssignment& ages, int k);

struct NiceConfig {
    std::vector<int> marked;  // the sparse set I, pairwise distance >= 15
    int path_length = 15;     // odd, >= 15
};

struct NiceStats {
    long long nice_paths = 0;
    long long w_size = 0;     // |union of all nice paths|
};

// nice = good and every marked vertex on the path lies in T_2.
NiceStats check_nice_and_W(const RootedTree& t, const AgeAssignment& ages, const NiceConfig& cfg);

// Tree distance via parent walks (used to validate NiceConfig).
int tree_distance(const RootedTree& t, int u, int v);

} // namespace layerslab
