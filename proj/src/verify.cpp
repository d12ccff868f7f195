#include "layerslab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <unordered_map>

#include "layerslab/degree_graphs.hpp"
#include "layerslab/lattice_monotone.hpp"
#include "layerslab/oracle.hpp"
#include "layerslab/t2.hpp"

namespace layerslab {

RootedTree rooted_from_graph(const Graph& g, int root) {
    RootedTree t;
    t.graph = g;
    t.root = root;
    t.parent.assign(g.n, -2);
    t.level.assign(g.n, -1);
    t.children.assign(g.n, {});
    std::vector<int> bfs{root};
    t.parent[root] = -1;
    t.level[root] = 0;
    for (std::size_t h = 0; h < bfs.size(); ++h) {
        int v = bfs[h];
        t.depth = std::max(t.depth, t.level[v]);
        for (int u : g.adj[v]) {
            if (t.level[u] != -1) continue;
            t.level[u] = t.level[v] + 1;
            t.parent[u] = v;
            t.children[v].push_back(u);
            bfs.push_back(u);
        }
    }
    if (bfs.size() != static_cast<std::size_t>(g.n)) throw InvalidConfig("graph is not connected");
    return t;
}

namespace {

// Incremental tree builder used by the host constructors below.
struct TreeBuilder {
    std::vector<std::pair<int, int>> edges;
    int next_id = 1; // 0 is the root

    int add_child(int parent) {
        int id = next_id++;
        edges.emplace_back(parent, id);
        return id;
    }

    void add_leaves(int v, int count) {
        for (int i = 0; i < count; ++i) add_child(v);
    }

    RootedTree finish() const { return rooted_from_graph(build_graph(edges, next_id), 0); }
};

} // namespace

RootedTree spine_tree(const std::vector<int>& spine_degrees) {
    const int L = static_cast<int>(spine_degrees.size());
    if (L < 1) throw InvalidConfig("empty spine");
    TreeBuilder b;
    std::vector<int> spine{0};
    for (int j = 1; j < L; ++j) spine.push_back(b.add_child(spine.back()));
    for (int j = 0; j < L; ++j) {
        int used = (j > 0 ? 1 : 0) + (j + 1 < L ? 1 : 0);
        if (spine_degrees[j] < used) throw InvalidConfig("spine degree too small");
        b.add_leaves(spine[j], spine_degrees[j] - used);
    }
    return b.finish();
}

ForkHost fork_tree(const std::vector<int>& prefix, const std::vector<int>& branch_a,
                   const std::vector<int>& branch_b) {
    if (prefix.empty()) throw InvalidConfig("fork needs a prefix");
    TreeBuilder b;
    std::vector<int> pre{0};
    for (std::size_t j = 1; j < prefix.size(); ++j) pre.push_back(b.add_child(pre.back()));
    auto grow_branch = [&](const std::vector<int>& degs) {
        std::vector<int> ids;
        int at = pre.back();
        for (std::size_t j = 0; j < degs.size(); ++j) {
            at = b.add_child(at);
            ids.push_back(at);
        }
        return ids;
    };
    std::vector<int> ids_a = grow_branch(branch_a);
    std::vector<int> ids_b = grow_branch(branch_b);
    // filler leaves: prefix vertices
    for (std::size_t j = 0; j < prefix.size(); ++j) {
        int used = (j > 0 ? 1 : 0) + (j + 1 < prefix.size() ? 1 : 0);
        if (j + 1 == prefix.size()) used += (branch_a.empty() ? 0 : 1) + (branch_b.empty() ? 0 : 1);
        if (prefix[j] < used) throw InvalidConfig("prefix degree too small");
        b.add_leaves(pre[j], prefix[j] - used);
    }
    auto fill_branch = [&](const std::vector<int>& ids, const std::vector<int>& degs) {
        for (std::size_t j = 0; j < ids.size(); ++j) {
            int used = 1 + (j + 1 < ids.size() ? 1 : 0);
            if (degs[j] < used) throw InvalidConfig("branch degree too small");
            b.add_leaves(ids[j], degs[j] - used);
        }
    };
    fill_branch(ids_a, branch_a);
    fill_branch(ids_b, branch_b);
    ForkHost host{b.finish(), {}, {}};
    host.path_a = pre;
    host.path_a.insert(host.path_a.end(), ids_a.begin(), ids_a.end());
    host.path_b = pre;
    host.path_b.insert(host.path_b.end(), ids_b.begin(), ids_b.end());
    return host;
}

namespace {

AgeAssignment ages_from_ranks(int n_total, const std::vector<int>& relevant,
                              const std::vector<int>& rank) {
    AgeAssignment a;
    a.rank.assign(n_total, 0);
    std::vector<char> is_rel(n_total, 0);
    for (std::size_t i = 0; i < relevant.size(); ++i) {
        a.rank[relevant[i]] = static_cast<std::uint32_t>(rank[i]);
        is_rel[relevant[i]] = 1;
    }
    std::uint32_t next = static_cast<std::uint32_t>(relevant.size());
    for (int v = 0; v < n_total; ++v)
        if (!is_rel[v]) a.rank[v] = next++;
    return a;
}

std::vector<int> block_relevant(const RootedTree& t, const TreePath& p, int block) {
    std::vector<int> rel{p[2 * block - 2], p[2 * block - 1]};
    for (int u : off_path_neighbors(t, p, 2 * block - 2)) rel.push_back(u);
    for (int u : off_path_neighbors(t, p, 2 * block - 1)) rel.push_back(u);
    return rel;
}

std::vector<int> path_relevant(const RootedTree& t, const TreePath& p) {
    std::vector<int> rel = p;
    for (std::size_t j = 0; j < p.size(); ++j)
        for (int u : off_path_neighbors(t, p, static_cast<int>(j))) rel.push_back(u);
    return rel;
}

struct CheckSink {
    std::vector<CheckResult> results;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        results.push_back({name, pass, detail});
    }

    void add_equal(const std::string& name, const Rational& got, const Rational& want) {
        bool pass = got == want;
        std::ostringstream ss;
        ss << "got " << got.str() << (pass ? " == " : " != ") << want.str();
        add(name, pass, ss.str());
    }
};

// ---- tree block marginals vs oracle ----------------------------------------

void check_tree_marginals(CheckSink& sink, bool parallel) {
    for (int x = 2; x <= 5; ++x)
        for (int y = 2; y <= 5; ++y) {
            RootedTree t = spine_tree({2, 2, x, y, 2, 2});
            TreePath p = enumerate_root_paths(t, 5).at(0);
            std::vector<int> rel = block_relevant(t, p, 2);
            Rational got = permutation_oracle(
                static_cast<int>(rel.size()),
                [&](const std::vector<int>& rank) {
                    return block_good(t, p, 2, 3, ages_from_ranks(t.n(), rel, rank));
                },
                parallel);
            sink.add_equal("marginal_interior(" + std::to_string(x) + "," + std::to_string(y) + ")",
                           marginal_interior(x, y), got);
        }
    for (int d0 = 2; d0 <= 5; ++d0)
        for (int d1 = 2; d1 <= 5; ++d1) {
            RootedTree t = spine_tree({d0, d1, 2, 2});
            TreePath p = enumerate_root_paths(t, 3).at(0);
            std::vector<int> rel = block_relevant(t, p, 1);
            Rational got = permutation_oracle(
                static_cast<int>(rel.size()),
                [&](const std::vector<int>& rank) {
                    return block_good(t, p, 1, 2, ages_from_ranks(t.n(), rel, rank));
                },
                parallel);
            sink.add_equal("marginal_first(" + std::to_string(d0) + "," + std::to_string(d1) + ")",
                           marginal_first(d0, d1), got);

            RootedTree t2 = spine_tree({2, 2, d0, d1});
            TreePath p2 = enumerate_root_paths(t2, 3).at(0);
            std::vector<int> rel2 = block_relevant(t2, p2, 2);
            Rational got2 = permutation_oracle(
                static_cast<int>(rel2.size()),
                [&](const std::vector<int>& rank) {
                    return block_good(t2, p2, 2, 2, ages_from_ranks(t2.n(), rel2, rank));
                },
                parallel);
            sink.add_equal("marginal_last(" + std::to_string(d0) + "," + std::to_string(d1) + ")",
                           marginal_last(d0, d1), got2);
        }
}

// ---- whole-path probability and block independence --------------------------

void check_path_probability(CheckSink& sink, bool parallel) {
    RootedTree t = spherically_symmetric_tree(regular_profile(3), 4);
    TreePath p = enumerate_root_paths(t, 3).at(0);
    std::vector<int> rel = path_relevant(t, p);
    Rational joint = permutation_oracle(
        static_cast<int>(rel.size()),
        [&](const std::vector<int>& rank) {
            return check_good(t, p, ages_from_ranks(t.n(), rel, rank)).good;
        },
        parallel);
    sink.add_equal("prob_Agamma(3-regular,k=2) == oracle", prob_Agamma(t, p), joint);
    sink.add_equal("prob_Agamma(3-regular,k=2) == 1/9", prob_Agamma(t, p), Rational(1, 9));

    Rational product = 1;
    for (int block = 1; block <= 2; ++block) {
        std::vector<int> brel = block_relevant(t, p, block);
        product *= permutation_oracle(
            static_cast<int>(brel.size()),
            [&](const std::vector<int>& rank) {
                return block_good(t, p, block, 2, ages_from_ranks(t.n(), brel, rank));
            },
            parallel);
    }
    sink.add_equal("block independence (k=2)", joint, product);

    // k = 3 on a mixed-degree spine, still within oracle range
    RootedTree tm = spine_tree({2, 3, 3, 2, 2, 3});
    TreePath pm = enumerate_root_paths(tm, 5).at(0);
    std::vector<int> relm = path_relevant(tm, pm);
    Rational jointm = permutation_oracle(
        static_cast<int>(relm.size()),
        [&](const std::vector<int>& rank) {
            return check_good(tm, pm, ages_from_ranks(tm.n(), relm, rank)).good;
        },
        parallel);
    sink.add_equal("prob_Agamma(mixed,k=3) == oracle", prob_Agamma(tm, pm), jointm);
}

// ---- pairwise B events vs oracle --------------------------------------------

// Event straight from the definition: each focal vertex of the meet block
// (on both paths) has at most one younger neighbor outside both paths.
struct PairEvent {
    std::vector<int> focal;
    std::vector<std::vector<int>> counted; // per focal: neighbors outside both paths
    std::vector<int> relevant;

    bool eval(const std::vector<int>& rank_of_rel,
              const std::unordered_map<int, int>& rel_index) const {
        for (std::size_t f = 0; f < focal.size(); ++f) {
            int rf = rank_of_rel[rel_index.at(focal[f])];
            int younger = 0;
            for (int u : counted[f])
                if (rank_of_rel[rel_index.at(u)] < rf && ++younger > 1) return false;
        }
        return true;
    }
};

PairEvent make_pair_event(const ForkHost& host, int meet) {
    const Graph& g = host.tree.graph;
    std::vector<char> on_union(g.n, 0);
    for (int v : host.path_a) on_union[v] = 1;
    for (int v : host.path_b) on_union[v] = 1;
    const int block = (meet + 1) / 2; // 1-indexed block containing the meet
    PairEvent ev;
    auto add_focal = [&](int v) {
        if (std::find(ev.focal.begin(), ev.focal.end(), v) != ev.focal.end()) return;
        ev.focal.push_back(v);
        std::vector<int> counted;
        for (int u : g.adj[v])
            if (!on_union[u]) counted.push_back(u);
        ev.counted.push_back(std::move(counted));
    };
    for (int idx : {2 * block - 2, 2 * block - 1}) {
        add_focal(host.path_a[idx]);
        add_focal(host.path_b[idx]);
    }
    for (std::size_t f = 0; f < ev.focal.size(); ++f) {
        ev.relevant.push_back(ev.focal[f]);
        for (int u : ev.counted[f]) ev.relevant.push_back(u);
    }
    return ev;
}

Rational oracle_pair_event(const ForkHost& host, int meet, bool parallel, bool force_grouped) {
    PairEvent ev = make_pair_event(host, meet);
    const int m = static_cast<int>(ev.relevant.size());
    if (!force_grouped && m <= kOracleMaxItems) {
        std::unordered_map<int, int> rel_index;
        for (int i = 0; i < m; ++i) rel_index[ev.relevant[i]] = i;
        return permutation_oracle(
            m, [&](const std::vector<int>& rank) { return ev.eval(rank, rel_index); }, parallel);
    }
    // The focal groups touch disjoint vertex sets, whose internal orders are
    // independent; enumerate each group separately and multiply.
    Rational prod = 1;
    for (std::size_t f = 0; f < ev.focal.size(); ++f) {
        const int gm = static_cast<int>(ev.counted[f].size()) + 1;
        prod *= permutation_oracle(
            gm,
            [&](const std::vector<int>& rank) {
                int younger = 0;
                for (int i = 1; i < gm; ++i)
                    if (rank[i] < rank[0] && ++younger > 1) return false;
                return true;
            },
            parallel);
    }
    return prod;
}

void check_pair_events(CheckSink& sink, bool parallel, bool heavy) {
    auto tag = [](const char* name, int a, int b, int c) {
        std::ostringstream ss;
        ss << name << "(" << a << "," << b << "," << c << ")";
        return ss.str();
    };
    for (int dm = 3; dm <= 5; ++dm)
        for (int da = 3; da <= 5; ++da)
            for (int db = 3; db <= 5; ++db) {
                if (!heavy && dm + da + db > 11) continue;
                {
                    // meet at the root, |meet| = 1
                    ForkHost h = fork_tree({dm}, {da, 2, 2}, {db, 2, 2});
                    sink.add_equal(tag("B_pair meet=1", dm, da, db),
                                   prob_B_pair(h.tree, h.path_a, h.path_b),
                                   oracle_pair_event(h, 1, parallel, false));
                }
                {
                    // odd interior meet, |meet| = 3 with k = 3
                    ForkHost h = fork_tree({2, 2, dm}, {da, 2, 2}, {db, 2, 2});
                    sink.add_equal(tag("B_pair meet=3(odd)", dm, da, db),
                                   prob_B_pair(h.tree, h.path_a, h.path_b),
                                   oracle_pair_event(h, 3, parallel, false));
                }
                {
                    // last block, |meet| = 2k-1 with k = 2: 13 items at (5,5,5),
                    // checked as a product of disjoint focal groups there
                    ForkHost h = fork_tree({2, 2, dm}, {da}, {db});
                    bool grouped = dm + da + db - 2 > kOracleMaxItems;
                    sink.add_equal(tag(grouped ? "B_pair meet=2k-1 (grouped)" : "B_pair meet=2k-1",
                                       dm, da, db),
                                   prob_B_pair(h.tree, h.path_a, h.path_b),
                                   oracle_pair_event(h, 3, parallel, grouped));
                }
            }
    for (int d0 = 3; d0 <= 5; ++d0)
        for (int dm = 3; dm <= 5; ++dm) {
            {
                // even meet at |meet| = 2
                ForkHost h = fork_tree({d0, dm}, {2, 2}, {2, 2});
                sink.add_equal(tag("B_pair meet=2", d0, dm, 0),
                               prob_B_pair(h.tree, h.path_a, h.path_b),
                               oracle_pair_event(h, 2, parallel, false));
            }
            {
                // even interior meet at |meet| = 4 with k = 3
                ForkHost h = fork_tree({2, 2, d0, dm}, {2, 2}, {2, 2});
                sink.add_equal(tag("B_pair meet=4(even)", d0, dm, 0),
                               prob_B_pair(h.tree, h.path_a, h.path_b),
                               oracle_pair_event(h, 4, parallel, false));
            }
        }
}

// ---- T_2 tail-set product vs the direct event --------------------------------

// Direct definition: ages increase along the path and every interior vertex
// is younger than all its off-path neighbors.
Rational oracle_B_direct(const Graph& g, const std::vector<int>& path, bool parallel) {
    std::vector<char> on_path(g.n, 0);
    for (int v : path) on_path[v] = 1;
    std::vector<int> rel = path;
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        for (int u : g.adj[path[i]])
            if (!on_path[u]) rel.push_back(u);
    std::sort(rel.begin(), rel.end());
    rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
    std::unordered_map<int, int> idx;
    for (std::size_t i = 0; i < rel.size(); ++i) idx[rel[i]] = static_cast<int>(i);
    return permutation_oracle(
        static_cast<int>(rel.size()),
        [&](const std::vector<int>& rank) {
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                if (rank[idx.at(path[i])] > rank[idx.at(path[i + 1])]) return false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                for (int u : g.adj[path[i]])
                    if (!on_path[u] && rank[idx.at(u)] < rank[idx.at(path[i])]) return false;
            return true;
        },
        parallel);
}

void check_t2_exact(CheckSink& sink, bool parallel) {
    {
        Graph g = path_graph(4);
        std::vector<int> p{0, 1, 2, 3};
        sink.add_equal("prob_B_exact(path4)", prob_B_exact(g, p), oracle_B_direct(g, p, parallel));
    }
    {
        Graph g = star_graph(3);
        std::vector<int> p{0, 1};
        sink.add_equal("prob_B_exact(star,n=1)", prob_B_exact(g, p), oracle_B_direct(g, p, parallel));
    }
    {
        RootedTree t = spine_tree({2, 3, 3, 2});
        std::vector<int> p{0, 1, 2, 3};
        sink.add_equal("prob_B_exact(spine 2332)", prob_B_exact(t.graph, p),
                       oracle_B_direct(t.graph, p, parallel));
        // C_i independence: the joint event equals the product of the
        // per-tail-set youngest events.
        auto sets = tail_sets(t.graph, p);
        Rational prod = 1;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            const auto& s = sets[i];
            std::unordered_map<int, int> idx;
            for (std::size_t j = 0; j < s.size(); ++j) idx[s[j]] = static_cast<int>(j);
            int target = idx.at(p[i]);
            prod *= permutation_oracle(
                static_cast<int>(s.size()),
                [&](const std::vector<int>& rank) {
                    for (std::size_t j = 0; j < rank.size(); ++j)
                        if (static_cast<int>(j) != target && rank[j] < rank[static_cast<std::size_t>(target)])
                            return false;
                    return true;
                },
                parallel);
        }
        sink.add_equal("C_i independence (spine 2332)", prob_B_exact(t.graph, p), prod);
    }
    {
        // host with a degree-4 hub off the path
        Graph g = build_graph({{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}, {5, 6}}, 7);
        std::vector<int> p{0, 1, 2, 3};
        sink.add_equal("prob_B_exact(hub host)", prob_B_exact(g, p), oracle_B_direct(g, p, parallel));
    }
}

// ---- lattice block marginals ---------------------------------------------------

Rational oracle_lattice_block(int d, bool cases, bool parallel) {
    const int m = 4 * d - 2;
    const int off = 2 * d - 2;
    return permutation_oracle(
        m,
        [&](const std::vector<int>& rank) {
            BlockAges ba;
            ba.a = static_cast<std::uint64_t>(rank[0]);
            ba.b = static_cast<std::uint64_t>(rank[1]);
            ba.off_a.assign(off, 0);
            ba.off_b.assign(off, 0);
            for (int i = 0; i < off; ++i) {
                ba.off_a[i] = static_cast<std::uint64_t>(rank[2 + i]);
                ba.off_b[i] = static_cast<std::uint64_t>(rank[2 + off + i]);
            }
            return cases ? block_cases_ok(ba) : block_full_ok(ba);
        },
        parallel);
}

void check_lattice_marginals(CheckSink& sink, bool parallel, bool heavy) {
    sink.add_equal("lattice_marginal_Ai(2) == 22/45", lattice_marginal_Ai(2), Rational(22, 45));
    sink.add_equal("lattice cases oracle d=2", lattice_marginal_Ai(2), oracle_lattice_block(2, true, parallel));
    sink.add_equal("lattice full oracle d=2", lattice_marginal_Ai_full(2),
                   oracle_lattice_block(2, false, parallel));
    if (heavy) {
        sink.add_equal("lattice cases oracle d=3", lattice_marginal_Ai(3),
                       oracle_lattice_block(3, true, parallel));
        sink.add_equal("lattice full oracle d=3", lattice_marginal_Ai_full(3),
                       oracle_lattice_block(3, false, parallel));
    }
    bool bound_ok = true;
    int bad_d = 0;
    for (int d = 2; d <= 100; ++d) {
        Rational lower(9, 8LL * d * d);
        if (!(lattice_marginal_Ai(d) > lower)) {
            bound_ok = false;
            bad_d = d;
            break;
        }
    }
    sink.add("lattice marginal > 9/(8d^2) for 2<=d<=100", bound_ok,
             bound_ok ? "" : "fails at d=" + std::to_string(bad_d));
}

// Positive correlation of the full block events along one monotone path,
// checked exactly on a 10-point instance at d=2, k=2.
void check_lattice_poscor(CheckSink& sink, bool parallel) {
    MonotonePath path;
    path.d = 2;
    path.steps = {0, 1, 0};
    std::vector<LatticePoint> rel = block_relevant_points(path);
    const int m = static_cast<int>(rel.size());
    auto age_fn_for = [&](const std::vector<int>& rank) {
        return LatticeAgeFn([&rel, &rank](const LatticePoint& p) -> std::uint64_t {
            for (std::size_t i = 0; i < rel.size(); ++i)
                if (rel[i] == p) return static_cast<std::uint64_t>(rank[i]);
            throw Error("queried point outside relevant set");
        });
    };
    Rational joint = permutation_oracle(
        m,
        [&](const std::vector<int>& rank) {
            auto fn = age_fn_for(rank);
            return block_full_ok(collect_block_ages(path, 1, fn)) &&
                   block_full_ok(collect_block_ages(path, 2, fn));
        },
        parallel);
    Rational p1 = permutation_oracle(
        m,
        [&](const std::vector<int>& rank) {
            auto fn = age_fn_for(rank);
            return block_full_ok(collect_block_ages(path, 1, fn));
        },
        parallel);
    Rational p2 = permutation_oracle(
        m,
        [&](const std::vector<int>& rank) {
            auto fn = age_fn_for(rank);
            return block_full_ok(collect_block_ages(path, 2, fn));
        },
        parallel);
    Rational product = p1 * p2;
    std::ostringstream ss;
    ss << "joint " << joint.str() << " vs product " << product.str();
    sink.add("lattice block positive correlation (d=2,k=2)", joint >= product, ss.str());
}

// ---- arithmetic-only identities -------------------------------------------------

void check_arithmetic(CheckSink& sink) {
    FMinResult fm = minimize_claim_f(50);
    sink.add("claim f grid min at (3,3)", fm.x == 3 && fm.y == 3 && fm.value == Rational(1, 3),
             "min f(" + std::to_string(fm.x) + "," + std::to_string(fm.y) + ") = " + fm.value.str());
    bool fx2 = true;
    for (int x = 3; x <= 50 && fx2; ++x)
        fx2 = claim_f(x, 2) == Rational(x - 2, x);
    sink.add("f(x,2) == 1 - 2/x", fx2);
    bool link = true;
    for (int x = 3; x <= 12 && link; ++x)
        for (int y = 3; y <= 12 && link; ++y)
            link = marginal_interior(x, y) ==
                   (Rational(1) + claim_f(x, y)) / Rational((x - 1) * (y - 1));
    sink.add("interior marginal == (1+f)/((x-1)(y-1))", link);

    bool smooth = true;
    for (int r = 2; r <= 50 && smooth; ++r)
        for (int rp = r + 2; rp <= 52 && smooth; ++rp)
            smooth = degree_smoothing_step(r, rp) == 2LL * (rp - r - 1);
    sink.add("degree smoothing identity", smooth);

    // weight normalization on a leafless truncation
    RootedTree t3 = spherically_symmetric_tree(regular_profile(3), 7);
    Rational total = 0;
    for (const auto& p : enumerate_root_paths(t3, 5)) total += path_weight(t3, p);
    sink.add_equal("sum of path weights == 1 (3-regular)", total, Rational(1));
    RootedTree tmix = spherically_symmetric_tree(
        [](int r) -> long long { return 2 + (r % 3 == 0 ? 2 : 1); }, 7);
    total = 0;
    for (const auto& p : enumerate_root_paths(tmix, 5)) total += path_weight(tmix, p);
    sink.add_equal("sum of path weights == 1 (mixed)", total, Rational(1));

    // kappa multiplicativity: the new factor involves the vertex that was
    // the endpoint before the extension (the appended endpoint never enters)
    Graph g = spine_tree({3, 3, 4, 3, 2}).graph;
    auto paths3 = enumerate_gamma_prime(g, 0, 3);
    bool kap = true;
    for (const auto& p : paths3) {
        std::vector<int> shorter(p.begin(), p.end() - 1);
        long long du = g.degree(p[p.size() - 2]);
        long long dl = g.degree(p[p.size() - 3]);
        Rational expect = kappa(g, shorter) * Rational(du, du - 1) * Rational(du + dl - 1, dl);
        if (kappa(g, p) != expect) kap = false;
    }
    sink.add("kappa multiplicativity", kap);
}

} // namespace

std::vector<CheckResult> run_exact_checks(bool heavy, bool parallel) {
    CheckSink sink;
    check_tree_marginals(sink, parallel);
    check_path_probability(sink, parallel);
    check_pair_events(sink, parallel, heavy);
    check_t2_exact(sink, parallel);
    check_lattice_marginals(sink, parallel, heavy);
    check_lattice_poscor(sink, parallel);
    check_arithmetic(sink);
    return sink.results;
}

} // namespace layerslab
