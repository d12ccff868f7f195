#include "layerslab/tree_paths.hpp"

#include <algorithm>
#include <functional>

namespace layerslab {

std::vector<TreePath> enumerate_root_paths(const RootedTree& t, int length) {
    if (length < 1) throw InvalidConfig("path length must be >= 1");
    std::vector<TreePath> out;
    TreePath cur{t.root};
    std::function<void()> dfs = [&] {
        if (static_cast<int>(cur.size()) == length + 1) {
            out.push_back(cur);
            return;
        }
        for (int c : t.children[cur.back()]) {
            cur.push_back(c);
            dfs();
            cur.pop_back();
        }
    };
    dfs();
    return out;
}

std::vector<int> off_path_neighbors(const RootedTree& t, const TreePath& p, int j) {
    // Descending root path: the parent of p[j] is p[j-1] (or absent at the
    // root), so off-path neighbors are the children minus the next vertex.
    std::vector<int> out;
    int next = (j + 1 < static_cast<int>(p.size())) ? p[j + 1] : -1;
    for (int c : t.children[p[j]])
        if (c != next) out.push_back(c);
    return out;
}

Rational path_weight(const RootedTree& t, const TreePath& p) {
    Rational w(1, t.degree(p[0]));
    for (std::size_t j = 1; j + 1 < p.size(); ++j) {
        long long dm1 = t.degree(p[j]) - 1;
        if (dm1 < 1) throw DegreeTooSmall("leaf on path interior");
        w /= dm1;
    }
    return w;
}

namespace {

int younger_off_path(const RootedTree& t, const TreePath& p, int j, const AgeAssignment& ages) {
    int count = 0;
    int next = (j + 1 < static_cast<int>(p.size())) ? p[j + 1] : -1;
    for (int c : t.children[p[j]])
        if (c != next && ages.rank[c] < ages.rank[p[j]]) ++count;
    return count;
}

} // namespace

bool block_good(const RootedTree& t, const TreePath& p, int block, int total_blocks,
                const AgeAssignment& ages) {
    const int a = p[2 * block - 2], b = p[2 * block - 1];
    const int ka = younger_off_path(t, p, 2 * block - 2, ages);
    const int kb = younger_off_path(t, p, 2 * block - 1, ages);
    if (block == 1) return ka <= 1 && kb == 0;
    if (block == total_blocks) return kb <= 1 && ka == 0;
    const int ma = ka + (ages.rank[b] < ages.rank[a] ? 1 : 0);
    const int mb = kb + (ages.rank[a] < ages.rank[b] ? 1 : 0);
    return ma <= 1 && mb <= 1;
}

GoodOutcome check_good(const RootedTree& t, const TreePath& p, const AgeAssignment& ages) {
    if (p.size() % 2 != 0 || p.size() < 4) throw InvalidConfig("good paths need 2k vertices, k >= 2");
    const int k = static_cast<int>(p.size()) / 2;
    GoodOutcome out;
    out.block_ok.resize(k);
    out.good = true;
    for (int i = 1; i <= k; ++i) {
        out.block_ok[i - 1] = block_good(t, p, i, k, ages);
        if (!out.block_ok[i - 1]) out.good = false;
    }
    return out;
}

Rational marginal_interior(long long x, long long y) {
    if (x < 2 || y < 2) throw DegreeTooSmall("interior block needs degrees >= 2");
    Rational r(1, (x - 1) * (y - 1));
    if (x + y > 4) {
        Rational denom((x + y - 2) * (x + y - 3));
        r += Rational(x - 2) / (denom * (y - 1));
        r += Rational(y - 2) / (denom * (x - 1));
    }
    return r;
}

Rational marginal_first(long long d_root, long long d_second) {
    if (d_root < 2 || d_second < 2) throw DegreeTooSmall("boundary block needs degrees >= 2");
    return Rational(2, d_root * (d_second - 1));
}

Rational marginal_last(long long d_second_to_last, long long d_last) {
    if (d_second_to_last < 2 || d_last < 2) throw DegreeTooSmall("boundary block needs degrees >= 2");
    return Rational(2, (d_second_to_last - 1) * d_last);
}

Rational prob_Agamma(const RootedTree& t, const TreePath& p) {
    if (p.size() % 2 != 0 || p.size() < 4) throw InvalidConfig("good paths need 2k vertices, k >= 2");
    const int k = static_cast<int>(p.size()) / 2;
    Rational prob = marginal_first(t.degree(p[0]), t.degree(p[1]));
    for (int i = 2; i < k; ++i)
        prob *= marginal_interior(t.degree(p[2 * i - 2]), t.degree(p[2 * i - 1]));
    prob *= marginal_last(t.degree(p[2 * k - 2]), t.degree(p[2 * k - 1]));
    return prob;
}

Rational claim_f(long long x, long long y) {
    if (x < 2 || y < 2) throw DegreeTooSmall("f defined for x, y >= 2");
    if (x + y == 4) throw DegreeTooSmall("f undefined at (2,2)");
    return Rational((x - 1) * (x - 2) + (y - 1) * (y - 2)) / Rational((x + y - 2) * (x + y - 3));
}

FMinResult minimize_claim_f(int bound) {
    FMinResult best;
    for (int x = 3; x <= bound; ++x)
        for (int y = 3; y <= bound; ++y) {
            Rational v = claim_f(x, y);
            if (best.x == 0 || v < best.value) best = {x, y, v};
        }
    return best;
}

int meet_index(const TreePath& a, const TreePath& b) {
    std::size_t j = 0;
    while (j < a.size() && j < b.size() && a[j] == b[j]) ++j;
    return static_cast<int>(j);
}

namespace {

// Probability that a vertex has at most one younger element among the m
// vertices it is counted against: 2/(m+1), saturating at 1 for m <= 1. The
// five-case closed form is the product of these factors; its textbook shape
// (with bare 2/(d-2) style factors) is recovered whenever every counted set
// is nonempty.
Rational rank_le1_factor(long long m, const char* what) {
    if (m < 0) throw DegreeTooSmall(what);
    if (m <= 1) return Rational(1);
    return Rational(2, m + 1);
}

} // namespace

Rational prob_B_pair(const RootedTree& t, const TreePath& a, const TreePath& b) {
    if (a.size() != b.size() || a.size() % 2 != 0) throw InvalidConfig("paths must share an even vertex count");
    if (a == b) throw InvalidConfig("paths must be distinct");
    const int j = meet_index(a, b);
    const int two_k = static_cast<int>(a.size());
    // counted-set sizes by case geometry (tree: siblings never adjacent)
    if (j == 1) {
        return rank_le1_factor(t.degree(a[0]) - 2, "root degree < 2") *
               rank_le1_factor(t.degree(a[1]) - 2, "branch degree < 2") *
               rank_le1_factor(t.degree(b[1]) - 2, "branch degree < 2");
    }
    if (j == 2) {
        return rank_le1_factor(t.degree(a[0]) - 1, "root degree < 1") *
               rank_le1_factor(t.degree(a[1]) - 3, "meet degree < 3");
    }
    if (j == two_k - 1) {
        return rank_le1_factor(t.degree(a[j - 1]) - 3, "meet degree < 3") *
               rank_le1_factor(t.degree(a[j]) - 1, "end degree < 1") *
               rank_le1_factor(t.degree(b[j]) - 1, "end degree < 1");
    }
    if (j % 2 == 1) { // odd interior: meet at gamma_{2i-1}
        return rank_le1_factor(t.degree(a[j - 1]) - 3, "meet degree < 3") *
               rank_le1_factor(t.degree(a[j]) - 2, "branch degree < 2") *
               rank_le1_factor(t.degree(b[j]) - 2, "branch degree < 2");
    }
    // even interior: meet at gamma_{2i}
    return rank_le1_factor(t.degree(a[j - 2]) - 2, "degree < 2") *
           rank_le1_factor(t.degree(a[j - 1]) - 3, "meet degree < 3");
}

ZkSample realized_Zk(const RootedTree& t, const AgeAssignment& ages, int k) {
    if (k < 2) throw InvalidConfig("k must be >= 2");
    if (t.depth < 2 * k) throw InvalidConfig("tree depth must be >= 2k");
    ZkSample out;
    out.zk = 0;
    TreePath cur{t.root};
    cur.reserve(2 * k);
    // Block i is decided once p[2i] is placed (its off-path sets are fixed
    // then), so dead prefixes are dropped early.
    std::function<void()> dfs = [&] {
        const int s = static_cast<int>(cur.size());
        if (s >= 3 && s % 2 == 1) {
            if (!block_good(t, cur, (s - 1) / 2, k, ages)) return;
        }
        if (s == 2 * k) {
            if (!block_good(t, cur, k, k, ages)) return;
            ++out.good_paths;
            out.zk += path_weight(t, cur) / prob_Agamma(t, cur);
            return;
        }
        for (int c : t.children[cur.back()]) {
            cur.push_back(c);
            dfs();
            cur.pop_back();
        }
    };
    dfs();
    out.k_good = out.zk >= Rational(1, 2);
    return out;
}

int tree_distance(const RootedTree& t, int u, int v) {
    int du = t.level[u], dv = t.level[v];
    int dist = 0;
    while (du > dv) {
        u = t.parent[u];
        --du;
        ++dist;
    }
    while (dv > du) {
        v = t.parent[v];
        --dv;
        ++dist;
    }
    while (u != v) {
        u = t.parent[u];
        v = t.parent[v];
        dist += 2;
    }
    return dist;
}

NiceStats check_nice_and_W(const RootedTree& t, const AgeAssignment& ages, const NiceConfig& cfg) {
    if (cfg.path_length < 15 || cfg.path_length % 2 == 0) throw BadConfig("path length must be odd and >= 15");
    for (std::size_t i = 0; i < cfg.marked.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.marked.size(); ++j)
            if (tree_distance(t, cfg.marked[i], cfg.marked[j]) < 15)
                throw BadConfig("marked vertices closer than 15");
    const int k = (cfg.path_length + 1) / 2; // blocks
    if (t.depth < 2 * k) throw InvalidConfig("tree depth must exceed the path length");

    std::vector<char> marked(t.n(), 0);
    for (int v : cfg.marked) marked[v] = 1;
    LayerResult layers = compute_layers(t.graph, ages);

    NiceStats stats;
    std::vector<char> in_w(t.n(), 0);
    TreePath cur{t.root};
    std::function<void()> dfs = [&] {
        const int s = static_cast<int>(cur.size());
        // A marked vertex on the path must lie in T_2; prune on placement.
        if (marked[cur.back()] && layers.layer[cur.back()] > 2) return;
        if (s >= 3 && s % 2 == 1) {
            if (!block_good(t, cur, (s - 1) / 2, k, ages)) return;
        }
        if (s == 2 * k) {
            if (!block_good(t, cur, k, k, ages)) return;
            ++stats.nice_paths;
            for (int v : cur)
                if (!in_w[v]) {
                    in_w[v] = 1;
                    ++stats.w_size;
                }
            return;
        }
        for (int c : t.children[cur.back()]) {
            cur.push_back(c);
            dfs();
            cur.pop_back();
        }
    };
    dfs();
    return stats;
}

} // namespace layerslab
