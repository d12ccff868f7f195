#include "layerslab/lattice_monotone.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "layerslab/ensemble.hpp"

namespace layerslab {

namespace {

// Difference of two monotone walks, tracked coordinate-wise with an
// incrementally maintained L1 norm.
struct DiffWalk {
    std::vector<int> coord;
    long long l1 = 0;

    explicit DiffWalk(int d) : coord(d, 0) {}

    void bump(int axis, int delta) {
        int before = coord[axis];
        coord[axis] = before + delta;
        l1 += std::abs(before + delta) - std::abs(before);
    }

    // One simultaneous step of both walks.
    void step(RandomStream& rng, int d) {
        int a = rng.below_int(d);
        int b = rng.below_int(d);
        if (a == b) return;
        bump(a, +1);
        bump(b, -1);
    }
};

} // namespace

WalkPairStats sample_walk_pair(int d, int horizon, RandomStream& rng) {
    if (d < 1 || horizon < 1) throw InvalidConfig("need d >= 1 and horizon >= 1");
    DiffWalk diff(d);
    WalkPairStats st;
    for (int k = 1; k <= horizon; ++k) {
        diff.step(rng, d);
        if (diff.l1 == 0) {
            if (st.meeting_time < 0) st.meeting_time = k;
            ++st.common_vertices;
        }
    }
    return st;
}

IntersectionTail intersection_tail(int d, int horizon, long long trials, std::uint64_t seed,
                                   int distance_cap, bool parallel) {
    auto counts = run_trials<int>(
        trials, seed,
        [&](long long, RandomStream& rng) {
            DiffWalk diff(d);
            int common = 1;
            for (int k = 1; k <= horizon; ++k) {
                diff.step(rng, d);
                if (diff.l1 == 0) ++common;
                else if (distance_cap > 0 && diff.l1 > distance_cap) break;
            }
            return common;
        },
        parallel);
    int max_common = 1;
    for (int c : counts) max_common = std::max(max_common, c);
    std::vector<long long> ge(max_common + 2, 0);
    for (int c : counts) ++ge[c];
    for (int k = max_common - 1; k >= 1; --k) ge[k] += ge[k + 1];

    IntersectionTail out;
    out.trials = trials;
    out.alpha_ref = 1.0 / d + 1.0 / (static_cast<double>(d) * d);
    for (int k = 1; k <= max_common; ++k)
        out.rows.push_back({k, static_cast<double>(ge[k]) / static_cast<double>(trials)});
    // Least-squares slope of log P(>=k) over the reliably-estimated window.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int pts = 0;
    for (const auto& row : out.rows) {
        if (row.p_ge * static_cast<double>(trials) < 25.0) break;
        double x = row.k, y = std::log(row.p_ge);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++pts;
    }
    if (pts >= 2) out.alpha_hat = std::exp((pts * sxy - sx * sy) / (pts * sxx - sx * sx));
    return out;
}

namespace {

// P(the difference walk, started from `start`, ever has L1 norm == target).
double conditional_hit_freq(int d, const std::vector<int>& start, long long target,
                            long long trials, std::uint64_t seed, int horizon, int distance_cap,
                            bool parallel, double* se_out) {
    auto hits = run_trials<double>(
        trials, seed,
        [&](long long, RandomStream& rng) {
            DiffWalk diff(d);
            for (std::size_t i = 0; i < start.size(); ++i)
                if (start[i] != 0) diff.bump(static_cast<int>(i), start[i]);
            for (int k = 0; k < horizon; ++k) {
                diff.step(rng, d);
                if (diff.l1 == target) return 1.0;
                if (distance_cap > 0 && diff.l1 > distance_cap) return 0.0;
            }
            return 0.0;
        },
        parallel);
    Summary s = summarize(hits);
    if (se_out) *se_out = s.stderr_;
    return s.mean;
}

} // namespace

PairCondEstimates conditional_pair_probs(int d, long long trials, std::uint64_t seed,
                                         int horizon, int distance_cap, bool parallel) {
    if (d < 5) throw InvalidConfig("conditioned pair estimates need d >= 5");
    PairCondEstimates e;
    e.d = d;
    e.trials = trials;
    std::vector<int> start(d, 0);
    // a2: S_1 = e1, S'_1 = e2  ->  diff e1 - e2, hit 0
    start[0] = 1;
    start[1] = -1;
    e.a2 = conditional_hit_freq(d, start, 0, trials, sub_seed(seed, 1), horizon, distance_cap,
                                parallel, &e.se_a2);
    // p12: S_2 = 2e1, S'_2 = 2e2 -> diff 2e1 - 2e2, hit 2
    std::fill(start.begin(), start.end(), 0);
    start[0] = 2;
    start[1] = -2;
    e.p12 = conditional_hit_freq(d, start, 2, trials, sub_seed(seed, 2), horizon, distance_cap,
                                 parallel, &e.se_p12);
    // p123: S_2 = 2e1, S'_2 = e2 + e3
    std::fill(start.begin(), start.end(), 0);
    start[0] = 2;
    start[1] = -1;
    start[2] = -1;
    e.p123 = conditional_hit_freq(d, start, 2, trials, sub_seed(seed, 3), horizon, distance_cap,
                                  parallel, &e.se_p123);
    // p1234: S_2 = e1 + e3, S'_2 = e2 + e4
    std::fill(start.begin(), start.end(), 0);
    start[0] = 1;
    start[2] = 1;
    start[1] = -1;
    start[3] = -1;
    e.p1234 = conditional_hit_freq(d, start, 2, trials, sub_seed(seed, 4), horizon, distance_cap,
                                   parallel, &e.se_p1234);
    return e;
}

LatticePoint MonotonePath::position(int i) const {
    LatticePoint p = origin(d);
    for (int j = 0; j < i; ++j) p.x[steps[j]] += 1;
    return p;
}

MonotonePath MonotonePath::sample(int d, int length, RandomStream& rng) {
    MonotonePath p;
    p.d = d;
    p.steps.resize(length);
    for (int& s : p.steps) s = rng.below_int(d);
    return p;
}

bool block_full_ok(const BlockAges& ba) {
    int ma = ba.b < ba.a ? 1 : 0;
    for (std::uint64_t u : ba.off_a) ma += u < ba.a;
    if (ma > 2) return false;
    int mb = ba.a < ba.b ? 1 : 0;
    for (std::uint64_t u : ba.off_b) mb += u < ba.b;
    return mb <= 2;
}

bool block_cases_ok(const BlockAges& ba) {
    int cnt_a = 0, cnt_b = 0;
    std::uint64_t min_off_a = ~0ULL, min_off_b = ~0ULL;
    std::uint64_t young_a = 0, young_b = 0; // the unique younger one when cnt == 1
    for (std::uint64_t u : ba.off_a) {
        if (u < ba.a) {
            ++cnt_a;
            young_a = u;
        }
        min_off_a = std::min(min_off_a, u);
    }
    for (std::uint64_t u : ba.off_b) {
        if (u < ba.b) {
            ++cnt_b;
            young_b = u;
        }
        min_off_b = std::min(min_off_b, u);
    }
    if (cnt_a <= 1 && cnt_b <= 1) return true;
    // one orientation of the "count 2" rescue, as reported
    if (cnt_b == 2 && cnt_a <= 1 && ba.b < ba.a && ba.b < min_off_a) return true;
    // the (2,1) cases, both orientations
    if (cnt_b == 2 && cnt_a == 1 && young_a < ba.b && ba.b < ba.a) return true;
    if (cnt_a == 2 && cnt_b == 1 && young_b < ba.a && ba.a < ba.b) return true;
    return false;
}

BlockAges collect_block_ages(const MonotonePath& path, int block, const LatticeAgeFn& age_of) {
    const int two_k = static_cast<int>(path.steps.size()) + 1; // vertices
    if (two_k % 2 != 0) throw InvalidConfig("monotone block paths need an odd step count");
    const int ia = 2 * block - 2, ib = 2 * block - 1; // vertex indices (0-based)
    LatticePoint a = path.position(ia), b = path.position(ib);
    LatticePoint pred = (ia == 0) ? origin(path.d).shifted(0, -1) : path.position(ia - 1);
    LatticePoint succ = (ib == two_k - 1) ? b.shifted(0, +1) : path.position(ib + 1);

    BlockAges ba;
    ba.a = age_of(a);
    ba.b = age_of(b);
    LatticePoint q = a;
    for (int axis = 0; axis < path.d; ++axis) {
        for (int delta : {-1, +1}) {
            q.x[axis] = a.x[axis] + delta;
            if (q == pred || q == b) continue;
            ba.off_a.push_back(age_of(q));
        }
        q.x[axis] = a.x[axis];
    }
    q = b;
    for (int axis = 0; axis < path.d; ++axis) {
        for (int delta : {-1, +1}) {
            q.x[axis] = b.x[axis] + delta;
            if (q == succ || q == a) continue;
            ba.off_b.push_back(age_of(q));
        }
        q.x[axis] = b.x[axis];
    }
    return ba;
}

BlockAges collect_block_ages(const MonotonePath& path, int block, const LazyAgeSource& src) {
    return collect_block_ages(path, block,
                              LatticeAgeFn([&src](const LatticePoint& p) { return src.age(p); }));
}

std::vector<LatticePoint> block_relevant_points(const MonotonePath& path) {
    const int k = (static_cast<int>(path.steps.size()) + 1) / 2;
    std::vector<LatticePoint> pts;
    auto add = [&pts](const LatticePoint& p) {
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    };
    const int two_k = static_cast<int>(path.steps.size()) + 1;
    for (int block = 1; block <= k; ++block) {
        const int ia = 2 * block - 2, ib = 2 * block - 1;
        LatticePoint a = path.position(ia), b = path.position(ib);
        LatticePoint pred = (ia == 0) ? origin(path.d).shifted(0, -1) : path.position(ia - 1);
        LatticePoint succ = (ib == two_k - 1) ? b.shifted(0, +1) : path.position(ib + 1);
        add(a);
        add(b);
        for (const LatticePoint* base : {&a, &b}) {
            for (int axis = 0; axis < path.d; ++axis)
                for (int delta : {-1, +1}) {
                    LatticePoint q = base->shifted(axis, delta);
                    if (base == &a && (q == pred || q == b)) continue;
                    if (base == &b && (q == succ || q == a)) continue;
                    add(q);
                }
        }
    }
    return pts;
}

namespace {

LatticeBlockOutcome check_blocks(const MonotonePath& path, const LazyAgeSource& src,
                                 bool (*block_fn)(const BlockAges&)) {
    const int k = (static_cast<int>(path.steps.size()) + 1) / 2;
    LatticeBlockOutcome out;
    out.block_ok.resize(k);
    for (int i = 1; i <= k; ++i) {
        out.block_ok[i - 1] = block_fn(collect_block_ages(path, i, src));
        if (!out.block_ok[i - 1]) out.all_ok = false;
    }
    return out;
}

} // namespace

LatticeBlockOutcome check_lattice_A(const MonotonePath& path, const LazyAgeSource& src) {
    return check_blocks(path, src, &block_full_ok);
}

LatticeBlockOutcome check_lattice_A_cases(const MonotonePath& path, const LazyAgeSource& src) {
    return check_blocks(path, src, &block_cases_ok);
}

Rational lattice_marginal_Ai(int d) {
    if (d < 2) throw InvalidConfig("marginal defined for d >= 2");
    const long long D = d;
    Rational t1 = Rational(4, (2 * D - 1) * (2 * D - 1));
    Rational t2 = Rational(2 * D - 3, (4 * D - 2) * (4 * D - 3) * (2 * D - 1));
    Rational t3 = Rational(3 * (2 * D - 3), (4 * D - 2) * (4 * D - 3) * (4 * D - 5));
    return t1 + t2 + t3;
}

Rational lattice_marginal_Ai_full(int d) {
    if (d < 2) throw InvalidConfig("marginal defined for d >= 2");
    const long long D = d;
    Rational t2 = Rational(2 * D - 3, (4 * D - 2) * (4 * D - 3) * (2 * D - 1));
    return lattice_marginal_Ai(d) + t2;
}

ChainSpec ChainSpec::standard(int d, double q42_override) {
    if (d < 2) throw InvalidConfig("chain defined for d >= 2");
    ChainSpec c;
    const double dd = static_cast<double>(d) * d;
    c.q20 = (1.0 / dd) / (1.0 - (3.0 * d - 4.0) / dd);
    c.q24 = 1.0 - c.q20;
    c.q42 = (q42_override > 0) ? q42_override : 4.0 / dd;
    c.q4inf = 1.0 - c.q42;
    if (c.q20 <= 0 || c.q20 >= 1 || c.q42 <= 0 || c.q42 >= 1)
        throw InvalidConfig("chain transition probabilities outside (0,1)");
    return c;
}

double chain_pmf(const ChainSpec& c, int k0, int k2) {
    if (k0 < 1 || k2 < k0) return 0.0;
    return std::pow(c.q20, k0 - 1) * std::pow(c.q42, k2 - k0) * c.q4inf;
}

std::pair<int, int> chain_simulate(const ChainSpec& c, RandomStream& rng) {
    int r0 = 0, r2 = 0;
    int state = 0;
    for (;;) {
        if (state == 0) {
            ++r0;
            state = 2;
        } else if (state == 2) {
            ++r2;
            state = rng.bernoulli(c.q20) ? 0 : 4;
        } else { // state 4
            if (rng.bernoulli(c.q4inf)) return {r0, r2};
            state = 2;
        }
    }
}

ChainComparison chain_tv_against_simulation(int d, long long trials, std::uint64_t seed,
                                            int truncate_at, double q42_override, bool parallel) {
    ChainSpec c = ChainSpec::standard(d, q42_override);
    auto samples = run_trials<std::pair<int, int>>(
        trials, seed, [&](long long, RandomStream& rng) { return chain_simulate(c, rng); },
        parallel);
    std::vector<std::vector<long long>> counts(truncate_at + 1,
                                               std::vector<long long>(truncate_at + 1, 0));
    long long outside = 0;
    for (auto [r0, r2] : samples) {
        if (r0 <= truncate_at && r2 <= truncate_at) ++counts[r0][r2];
        else ++outside;
    }
    ChainComparison out;
    out.trials = trials;
    out.sim_mass_outside = static_cast<double>(outside) / static_cast<double>(trials);
    double tv = 0.0;
    for (int k0 = 1; k0 <= truncate_at; ++k0)
        for (int k2 = 1; k2 <= truncate_at; ++k2) {
            double sim = static_cast<double>(counts[k0][k2]) / static_cast<double>(trials);
            tv += std::abs(sim - chain_pmf(c, k0, k2));
        }
    out.tv = 0.5 * tv;
    return out;
}

double default_a_prime(int d) {
    double a = d * std::sqrt(to_double(lattice_marginal_Ai(d)));
    return std::min(a, 1.05);
}

double chain_weighted_sum(int d, double a_prime, double q42_override) {
    if (d < 4) throw InvalidConfig("weighted sum needs 2d - 7 > 0");
    if (a_prime <= 1.0) throw DivergentSeries("a' must exceed 1");
    ChainSpec c = ChainSpec::standard(d, q42_override);
    const double denom2 = a_prime * (2.0 * d - 7.0);
    if (9.0 / denom2 >= 1.0) throw DivergentSeries("p2 series diverges: 9/(a'(2d-7)) >= 1");
    const double p0 = static_cast<double>(d) / (a_prime - 1.0);
    const double p2 = (3.0 * d / denom2) / (1.0 - 9.0 / denom2);
    if (p2 * c.q42 >= 1.0) throw DivergentSeries("p2 * q42 >= 1");
    if (p0 * p2 * c.q20 >= 1.0) throw DivergentSeries("p0 * p2 * q20 >= 1");
    return c.q4inf * p0 * p2 / ((1.0 - p2 * c.q42) * (1.0 - p0 * p2 * c.q20));
}

CrossSearchResult search_open_monotone_path(int d, int k, int radius, const LazyAgeSource& src,
                                            long long node_budget) {
    if (d < 1 || k < 1 || radius < 1) throw InvalidConfig("need d, k, radius >= 1");
    CrossSearchResult res;
    std::unordered_map<LatticePoint, bool, LatticePointHash> open_memo;
    auto is_open = [&](const LatticePoint& p) {
        auto it = open_memo.find(p);
        if (it != open_memo.end()) return it->second;
        bool open = lattice_layer(src, p) <= k;
        open_memo.emplace(p, open);
        return open;
    };
    LatticePoint start = origin(d);
    res.nodes_explored = 1;
    if (!is_open(start)) return res;

    struct Frame {
        LatticePoint p;
        int axis;
    };
    std::unordered_set<LatticePoint, LatticePointHash> dead;
    std::vector<Frame> stack;
    stack.push_back({start, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        int depth = static_cast<int>(stack.size()) - 1;
        res.longest = std::max(res.longest, depth);
        if (depth == radius) {
            res.crossed = true;
            return res;
        }
        if (f.axis == d) {
            dead.insert(f.p);
            stack.pop_back();
            continue;
        }
        LatticePoint q = f.p.shifted(f.axis, +1);
        ++f.axis;
        if (dead.count(q)) continue;
        if (res.nodes_explored >= node_budget) {
            res.budget_exhausted = true;
            return res;
        }
        ++res.nodes_explored;
        if (is_open(q)) stack.push_back({q, 0});
    }
    return res;
}

} // namespace layerslab
