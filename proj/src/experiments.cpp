#include "layerslab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "layerslab/degree_graphs.hpp"
#include "layerslab/ensemble.hpp"
#include "layerslab/lattice_monotone.hpp"
#include "layerslab/layers.hpp"
#include "layerslab/t2.hpp"
#include "layerslab/tree_paths.hpp"

namespace layerslab {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

long long to_ll(const std::string& s) {
    return static_cast<long long>(std::llround(std::stod(s)));
}

} // namespace

Graph make_graph(const std::string& spec, RandomStream& rng) {
    auto parts = split(spec, ':');
    const std::string& kind = parts[0];
    auto arg = [&](std::size_t i) -> const std::string& {
        if (i >= parts.size()) throw InvalidConfig("graph spec needs more arguments: " + spec);
        return parts[i];
    };
    if (kind == "star") return star_graph(static_cast<int>(to_ll(arg(1))));
    if (kind == "empty") return build_graph({}, static_cast<int>(to_ll(arg(1))));
    if (kind == "path") return path_graph(static_cast<int>(to_ll(arg(1))));
    if (kind == "cycle") return cycle_graph(static_cast<int>(to_ll(arg(1))));
    if (kind == "complete") return complete_graph(static_cast<int>(to_ll(arg(1))));
    if (kind == "er") {
        long long n = to_ll(arg(1));
        double c = std::stod(arg(2));
        return erdos_renyi(static_cast<int>(n), c / static_cast<double>(n), rng);
    }
    if (kind == "regular") {
        int d = static_cast<int>(to_ll(arg(1)));
        long long n = to_ll(arg(2));
        if (d * n % 2 != 0) ++n;
        return simple_graph_from_sequence(DegreeSequence::constant(d, static_cast<int>(n)), rng, 2000);
    }
    if (kind == "degseq")
        return simple_graph_from_sequence(DegreeSequence::parse(arg(1)), rng, 2000);
    if (kind == "sstree") {
        int d = static_cast<int>(to_ll(arg(1)));
        int depth = static_cast<int>(to_ll(arg(2)));
        return spherically_symmetric_tree(regular_profile(d), depth).graph;
    }
    if (kind == "file") {
        std::ifstream in(arg(1));
        if (!in) throw IoFailure("cannot read graph file: " + arg(1));
        return read_edge_list(in);
    }
    throw InvalidConfig("unknown graph spec: " + spec);
}

DegreeProfile make_profile(const std::string& spec, int max_level) {
    auto parts = split(spec, ':');
    if (parts[0] == "regular" && parts.size() == 2)
        return regular_profile(static_cast<int>(to_ll(parts[1])));
    if (parts[0] == "cycle" && parts.size() == 2) {
        auto degs = split(parts[1], ',');
        std::vector<long long> d;
        for (auto& s : degs) d.push_back(to_ll(s));
        if (d.empty()) throw InvalidConfig("empty profile: " + spec);
        return [d](int r) { return d[static_cast<std::size_t>(r) % d.size()]; };
    }
    if (parts[0] == "counterexample") return doubly_exponential_profile(max_level);
    throw InvalidConfig("unknown degree profile: " + spec);
}

DegreeSequence sized_degree_sequence(const std::string& spec, long long n, RandomStream& rng) {
    auto parts = split(spec, ':');
    if (parts[0] == "regular" && parts.size() == 2) {
        int d = static_cast<int>(to_ll(parts[1]));
        if (d * n % 2 != 0) ++n;
        return DegreeSequence::constant(d, static_cast<int>(n));
    }
    if (parts[0] == "uniform" && parts.size() == 3) {
        int a = static_cast<int>(to_ll(parts[1]));
        int b = static_cast<int>(to_ll(parts[2]));
        if (a > b) throw InvalidConfig("uniform:a:b needs a <= b");
        DegreeSequence s;
        s.d.resize(static_cast<std::size_t>(n));
        for (auto& deg : s.d) deg = a + rng.below_int(b - a + 1);
        while (s.sum() % 2 != 0) s.d.back() = a + rng.below_int(b - a + 1);
        return s;
    }
    return DegreeSequence::parse(spec);
}

std::vector<long long> parse_sizes(const std::string& csv) {
    std::vector<long long> out;
    for (auto& tok : split(csv, ',')) out.push_back(to_ll(tok));
    if (out.empty()) throw InvalidConfig("empty size list");
    return out;
}

std::vector<double> parse_grid(const std::string& csv) {
    std::vector<double> out;
    for (auto& tok : split(csv, ',')) out.push_back(std::stod(tok));
    if (out.empty()) throw InvalidConfig("empty grid");
    return out;
}

namespace {

using Runner = std::function<void(const ExperimentConfig&, ExperimentReport&)>;

long long require_trials(const ExperimentConfig& cfg) {
    long long trials = cfg.get_ll("trials", 0);
    if (trials <= 0) throw InvalidConfig("trials must be positive");
    return trials;
}

bool parallel_enabled(const ExperimentConfig& cfg) {
    return cfg.get_ll("serial", 0) == 0;
}

// ---- sample: one draw, per-vertex rows -------------------------------------

void run_sample(const ExperimentConfig& cfg, ExperimentReport& rep) {
    RandomStream graph_rng(sub_seed(cfg.seed(), 0));
    Graph g = make_graph(cfg.require("graph"), graph_rng);
    RandomStream age_rng(sub_seed(cfg.seed(), 1));
    AgeAssignment ages = sample_ages(g.n, age_rng);
    LayerResult layers = compute_layers(g, ages);
    int k = static_cast<int>(cfg.get_ll("k", 2));
    rep.columns = {"vertex", "age_rank", "layer", "open"};
    for (int v = 0; v < g.n; ++v)
        rep.rows.push_back({std::to_string(v), std::to_string(ages.rank[v]),
                            std::to_string(layers.layer[v]), fmt_bool(layers.layer[v] <= k)});
}

// ---- layer-marginal: empirical layer distribution of one vertex ------------

void run_layer_marginal(const ExperimentConfig& cfg, ExperimentReport& rep) {
    RandomStream graph_rng(sub_seed(cfg.seed(), 0));
    Graph g = make_graph(cfg.get("graph", "star:4"), graph_rng);
    int vertex = static_cast<int>(cfg.get_ll("vertex", 0));
    if (vertex < 0 || vertex >= g.n) throw InvalidConfig("vertex out of range");
    long long trials = require_trials(cfg);
    auto layers_seen = run_trials<int>(
        trials, sub_seed(cfg.seed(), 1),
        [&](long long, RandomStream& rng) {
            AgeAssignment ages = sample_ages(g.n, rng);
            int younger = 0;
            for (int u : g.adj[vertex]) younger += ages.rank[u] < ages.rank[vertex];
            return 1 + younger;
        },
        parallel_enabled(cfg));
    int m = g.degree(vertex);
    std::vector<long long> counts(m + 2, 0);
    for (int l : layers_seen) ++counts[l];
    rep.columns = {"layer", "count", "frequency", "stderr", "expected"};
    for (int i = 1; i <= m + 1; ++i) {
        double freq = static_cast<double>(counts[i]) / static_cast<double>(trials);
        double se = std::sqrt(freq * (1.0 - freq) / static_cast<double>(trials));
        rep.rows.push_back({std::to_string(i), std::to_string(counts[i]), fmt_double(freq),
                            fmt_double(se), fmt_double(1.0 / (m + 1))});
    }
}

// ---- tree-good: Z_k samples on a rooted tree --------------------------------

void run_tree_good(const ExperimentConfig& cfg, ExperimentReport& rep) {
    int k = static_cast<int>(cfg.get_ll("k", 3));
    if (k < 2) throw InvalidConfig("k must be >= 2");
    int depth = static_cast<int>(cfg.get_ll("depth", 2 * k + 1));
    RootedTree t = spherically_symmetric_tree(
        make_profile(cfg.get("degree-profile", "regular:3"), depth), depth);
    long long trials = require_trials(cfg);
    struct Row {
        double zk;
        bool good;
        long long paths;
    };
    auto rows = run_trials<Row>(
        trials, sub_seed(cfg.seed(), 1),
        [&](long long, RandomStream& rng) {
            AgeAssignment ages = sample_ages(t.n(), rng);
            ZkSample z = realized_Zk(t, ages, k);
            return Row{to_double(z.zk), z.k_good, z.good_paths};
        },
        parallel_enabled(cfg));
    rep.columns = {"trial", "Z_k", "k_good", "good_paths"};
    for (long long i = 0; i < trials; ++i)
        rep.rows.push_back({std::to_string(i), fmt_double(rows[i].zk), fmt_bool(rows[i].good),
                            std::to_string(rows[i].paths)});
}

// ---- tree-nice: |W_{o,k}| statistics ----------------------------------------

void run_tree_nice(const ExperimentConfig& cfg, ExperimentReport& rep) {
    int length = static_cast<int>(cfg.get_ll("length", 15));
    int depth = static_cast<int>(cfg.get_ll("depth", length + 2));
    RootedTree t = spherically_symmetric_tree(
        make_profile(cfg.get("degree-profile", "regular:3"), depth), depth);
    NiceConfig nice;
    nice.path_length = length;
    for (auto& tok : split(cfg.get("marked", ""), ','))
        if (!tok.empty()) nice.marked.push_back(static_cast<int>(to_ll(tok)));
    long long trials = require_trials(cfg);
    struct Row {
        long long nice;
        long long w;
    };
    auto rows = run_trials<Row>(
        trials, sub_seed(cfg.seed(), 1),
        [&](long long, RandomStream& rng) {
            AgeAssignment ages = sample_ages(t.n(), rng);
            NiceStats s = check_nice_and_W(t, ages, nice);
            return Row{s.nice_paths, s.w_size};
        },
        parallel_enabled(cfg));
    rep.columns = {"trial", "nice_paths", "W_size", "b_hat"};
    for (long long i = 0; i < trials; ++i) {
        double b_hat = rows[i].w > 0
                           ? std::pow(static_cast<double>(rows[i].w), 1.0 / static_cast<double>(length))
                           : 0.0;
        rep.rows.push_back({std::to_string(i), std::to_string(rows[i].nice),
                            std::to_string(rows[i].w), fmt_double(b_hat)});
    }
}

// ---- t2-scan: exact S_n table ------------------------------------------------

void run_t2_scan(const ExperimentConfig& cfg, ExperimentReport& rep) {
    RandomStream graph_rng(sub_seed(cfg.seed(), 0));
    Graph g = make_graph(cfg.require("graph"), graph_rng);
    int v = static_cast<int>(cfg.get_ll("v", 0));
    int n_max = static_cast<int>(cfg.get_ll("n", 5));
    std::size_t cap = static_cast<std::size_t>(cfg.get_ll("path-cap", 100000));
    auto series = weighted_sum_series(g, v, n_max, cap);
    rep.columns = {"n", "paths", "S_n", "S_n_float"};
    for (int n = 2; n <= n_max; ++n) {
        auto paths = enumerate_gamma_prime(g, v, n);
        const Rational& s = series[static_cast<std::size_t>(n - 2)];
        rep.rows.push_back({std::to_string(n), std::to_string(paths.size()), s.str(),
                            fmt_double(to_double(s))});
    }
}

// ---- t2-decay: I_{v,n} frequencies -------------------------------------------

void run_t2_decay(const ExperimentConfig& cfg, ExperimentReport& rep) {
    RandomStream graph_rng(sub_seed(cfg.seed(), 0));
    Graph g = make_graph(cfg.require("graph"), graph_rng);
    int v = static_cast<int>(cfg.get_ll("v", 0));
    long long trials = require_trials(cfg);
    auto ns = parse_sizes(cfg.get("n", "3,4,5,6,7"));
    double delta = g.max_degree();
    rep.columns = {"n", "frequency", "stderr", "union_bound"};
    for (long long n : ns) {
        FrequencyEstimate f = estimate_I_vn(g, v, static_cast<int>(n), trials,
                                            sub_seed(cfg.seed(), 100 + n), parallel_enabled(cfg));
        double bound = std::pow(delta, static_cast<double>(n)) / std::tgamma(static_cast<double>(n) + 2.0);
        rep.rows.push_back({std::to_string(n), fmt_double(f.frequency), fmt_double(f.stderr_),
                            fmt_double(bound)});
    }
}

// ---- t2-scaling: largest T_2 component vs log n -------------------------------

void run_t2_scaling(const ExperimentConfig& cfg, ExperimentReport& rep) {
    auto sizes = parse_sizes(cfg.get("sizes", "1000,10000,100000"));
    long long trials = require_trials(cfg);
    std::string gen = cfg.get("generator", "regular:3");
    rep.columns = {"n", "trials", "mean_largest", "stderr", "mean_over_log_n"};
    for (long long n : sizes) {
        auto largest = run_trials<double>(
            trials, sub_seed(cfg.seed(), static_cast<std::uint64_t>(n)),
            [&](long long, RandomStream& rng) {
                Graph g = make_graph(gen + ":" + std::to_string(n), rng);
                AgeAssignment ages = sample_ages(g.n, rng);
                LayerResult layers = compute_layers(g, ages);
                return static_cast<double>(largest_open_component(g, layers, 2));
            },
            parallel_enabled(cfg));
        Summary s = summarize(largest);
        rep.rows.push_back({std::to_string(n), std::to_string(trials), fmt_double(s.mean),
                            fmt_double(s.stderr_),
                            fmt_double(s.mean / std::log(static_cast<double>(n)))});
    }
}

// ---- lattice-eit: meeting times and conditional pair statistics ---------------

void run_lattice_eit(const ExperimentConfig& cfg, ExperimentReport& rep) {
    int d = static_cast<int>(cfg.get_ll("d", 10));
    long long trials = require_trials(cfg);
    int horizon = static_cast<int>(cfg.get_ll("horizon", 1000));
    int cap = static_cast<int>(cfg.get_ll("distance-cap", 60));
    bool par = parallel_enabled(cfg);
    auto taus = run_trials<int>(
        trials, sub_seed(cfg.seed(), 1),
        [&](long long, RandomStream& rng) { return sample_walk_pair(d, horizon, rng).meeting_time; },
        par);
    rep.columns = {"d", "statistic", "estimate", "stderr", "reference"};
    const std::string d_str = std::to_string(d);
    auto add_tau = [&](int k, double ref) {
        long long hits = 0;
        for (int t : taus) hits += (t == k);
        double freq = static_cast<double>(hits) / static_cast<double>(trials);
        double se = std::sqrt(freq * (1.0 - freq) / static_cast<double>(trials));
        rep.rows.push_back({d_str, "p_tau_" + std::to_string(k), fmt_double(freq), fmt_double(se),
                            fmt_double(ref)});
    };
    double dd = static_cast<double>(d);
    add_tau(1, 1.0 / dd);
    add_tau(2, 1.0 / (dd * dd) - 1.0 / (dd * dd * dd));
    add_tau(3, 3.0 / (dd * dd * dd));
    IntersectionTail tail = intersection_tail(d, horizon, trials, sub_seed(cfg.seed(), 2), cap, par);
    rep.rows.push_back({d_str, "alpha_hat", fmt_double(tail.alpha_hat), "", fmt_double(tail.alpha_ref)});
    if (d >= 5 && cfg.get_ll("conditional", 1) != 0) {
        long long ctrials = cfg.get_ll("conditional-trials", trials);
        PairCondEstimates pc =
            conditional_pair_probs(d, ctrials, sub_seed(cfg.seed(), 3), horizon, cap, par);
        rep.rows.push_back(
            {d_str, "a2_d2", fmt_double(pc.a2 * dd * dd), fmt_double(pc.se_a2 * dd * dd), "1"});
        rep.rows.push_back(
            {d_str, "p12_d2", fmt_double(pc.p12 * dd * dd), fmt_double(pc.se_p12 * dd * dd), "1"});
        rep.rows.push_back(
            {d_str, "p123_d2", fmt_double(pc.p123 * dd * dd), fmt_double(pc.se_p123 * dd * dd), "2"});
        rep.rows.push_back(
            {d_str, "p1234_d2", fmt_double(pc.p1234 * dd * dd), fmt_double(pc.se_p1234 * dd * dd), "4"});
        if (pc.p12 > 0) {
            rep.rows.push_back({d_str, "ratio_p123_p12", fmt_double(pc.p123 / pc.p12), "", "2"});
            rep.rows.push_back({d_str, "ratio_p1234_p12", fmt_double(pc.p1234 / pc.p12), "", "4"});
        }
    }
}

// ---- lattice-layer: point queries against the lazy age source ------------------

void run_lattice_layer(const ExperimentConfig& cfg, ExperimentReport& rep) {
    int d = static_cast<int>(cfg.get_ll("d", 2));
    int k = static_cast<int>(cfg.get_ll("k", 4));
    LazyAgeSource src{cfg.seed()};
    rep.columns = {"point", "age", "layer", "open"};
    for (auto& point_spec : split(cfg.require("points"), ';')) {
        auto coords = split(point_spec, ',');
        if (static_cast<int>(coords.size()) != d)
            throw InvalidConfig("point has wrong dimension: " + point_spec);
        LatticePoint p = origin(d);
        for (int axis = 0; axis < d; ++axis)
            p.x[axis] = static_cast<std::int32_t>(to_ll(coords[axis]));
        int layer = lattice_layer(src, p);
        rep.rows.push_back({point_spec, std::to_string(src.age(p)), std::to_string(layer),
                            fmt_bool(layer <= k)});
    }
}

// ---- lattice-cross: open monotone path search ---------------------------------

void run_lattice_cross(const ExperimentConfig& cfg, ExperimentReport& rep) {
    int d = static_cast<int>(cfg.get_ll("d", 10));
    int k = static_cast<int>(cfg.get_ll("k", 4));
    int radius = static_cast<int>(cfg.get_ll("radius", 30));
    long long seeds = cfg.get_ll("seeds", 200);
    if (seeds <= 0) throw InvalidConfig("seeds must be positive");
    long long budget = cfg.get_ll("budget", 1000000);
    auto results = run_trials<CrossSearchResult>(
        seeds, sub_seed(cfg.seed(), 1),
        [&](long long i, RandomStream&) {
            LazyAgeSource src{sub_seed(cfg.seed(), 1000 + static_cast<std::uint64_t>(i))};
            return search_open_monotone_path(d, k, radius, src, budget);
        },
        parallel_enabled(cfg));
    rep.columns = {"seed_index", "crossed", "longest", "nodes", "budget_exhausted"};
    for (long long i = 0; i < seeds; ++i) {
        const auto& r = results[static_cast<std::size_t>(i)];
        rep.rows.push_back({std::to_string(i), fmt_bool(r.crossed), std::to_string(r.longest),
                            std::to_string(r.nodes_explored), fmt_bool(r.budget_exhausted)});
    }
}

// ---- chain: closed-form law vs simulation -------------------------------------

void run_chain(const ExperimentConfig& cfg, ExperimentReport& rep) {
    int d = static_cast<int>(cfg.get_ll("d", 20));
    long long trials = require_trials(cfg);
    int truncate = static_cast<int>(cfg.get_ll("truncate", 10));
    ChainComparison c = chain_tv_against_simulation(d, trials, sub_seed(cfg.seed(), 1), truncate,
                                                    cfg.get_d("q42", -1.0), parallel_enabled(cfg));
    rep.columns = {"statistic", "value"};
    rep.rows.push_back({"tv_truncated", fmt_double(c.tv)});
    rep.rows.push_back({"sim_mass_outside", fmt_double(c.sim_mass_outside)});
    double a_prime = cfg.get_d("a-prime", default_a_prime(d));
    rep.rows.push_back({"a_prime", fmt_double(a_prime)});
    try {
        rep.rows.push_back({"weighted_sum", fmt_double(chain_weighted_sum(d, a_prime))});
    } catch (const DivergentSeries&) {
        rep.rows.push_back({"weighted_sum", "divergent"});
    }
}

// ---- randgraph-t3: giant component of T_3 --------------------------------------

void run_randgraph_t3(const ExperimentConfig& cfg, ExperimentReport& rep) {
    auto sizes = parse_sizes(cfg.get("sizes", "1000,10000,100000"));
    long long trials = require_trials(cfg);
    int k = static_cast<int>(cfg.get_ll("k", 3));
    std::string degrees = cfg.get("degrees", "regular:3");
    rep.columns = {"n", "trials", "mean_fraction", "stderr", "min_fraction"};
    for (long long n : sizes) {
        auto fracs = run_trials<double>(
            trials, sub_seed(cfg.seed(), static_cast<std::uint64_t>(n)),
            [&](long long, RandomStream& rng) {
                DegreeSequence seq = sized_degree_sequence(degrees, n, rng);
                Graph g = simple_graph_from_sequence(seq, rng, 5000);
                AgeAssignment ages = sample_ages(g.n, rng);
                LayerResult layers = compute_layers(g, ages);
                return static_cast<double>(largest_open_component(g, layers, k)) /
                       static_cast<double>(g.n);
            },
            parallel_enabled(cfg));
        Summary s = summarize(fracs);
        double mn = *std::min_element(fracs.begin(), fracs.end());
        rep.rows.push_back({std::to_string(n), std::to_string(trials), fmt_double(s.mean),
                            fmt_double(s.stderr_), fmt_double(mn)});
    }
}

// ---- cycle-census: configuration model cycle counts ----------------------------

void run_cycle_census(const ExperimentConfig& cfg, ExperimentReport& rep) {
    long long n = cfg.get_ll("n", 10000);
    int k_max = static_cast<int>(cfg.get_ll("k-max", 4));
    long long trials = require_trials(cfg);
    std::string degrees = cfg.get("degrees", "regular:3");
    auto censuses = run_trials<std::vector<long long>>(
        trials, sub_seed(cfg.seed(), 1),
        [&](long long, RandomStream& rng) {
            DegreeSequence seq = sized_degree_sequence(degrees, n, rng);
            MultiGraph mg = configuration_multigraph(seq, rng);
            return count_cycles(mg, k_max).count;
        },
        parallel_enabled(cfg));
    rep.columns = {"cycle_length", "mean_count", "stderr"};
    for (int i = 1; i <= k_max; ++i) {
        std::vector<double> xs;
        xs.reserve(static_cast<std::size_t>(trials));
        for (const auto& c : censuses) xs.push_back(static_cast<double>(c[i - 1]));
        Summary s = summarize(xs);
        rep.rows.push_back({std::to_string(i), fmt_double(s.mean), fmt_double(s.stderr_)});
    }
}

// ---- er-scan: exploratory phase scan for T_3 of G(n, c/n) ----------------------

void run_er_scan(const ExperimentConfig& cfg, ExperimentReport& rep) {
    long long n = cfg.get_ll("n", 10000);
    int k = static_cast<int>(cfg.get_ll("k", 3));
    long long trials = require_trials(cfg);
    auto grid = parse_grid(cfg.get("c", "0.5,1,2,4,8,20"));
    rep.columns = {"c", "mean_fraction", "stderr"};
    for (double c : grid) {
        auto fracs = run_trials<double>(
            trials, sub_seed(cfg.seed(), static_cast<std::uint64_t>(c * 1000)),
            [&](long long, RandomStream& rng) {
                Graph g = erdos_renyi(static_cast<int>(n), c / static_cast<double>(n), rng);
                AgeAssignment ages = sample_ages(g.n, rng);
                LayerResult layers = compute_layers(g, ages);
                return static_cast<double>(largest_open_component(g, layers, k)) /
                       static_cast<double>(g.n);
            },
            parallel_enabled(cfg));
        Summary s = summarize(fracs);
        rep.rows.push_back({fmt_double(c), fmt_double(s.mean), fmt_double(s.stderr_)});
    }
}

const std::map<std::string, Runner>& registry() {
    static const std::map<std::string, Runner> reg = {
        {"sample", run_sample},
        {"layer-marginal", run_layer_marginal},
        {"tree-good", run_tree_good},
        {"tree-nice", run_tree_nice},
        {"t2-scan", run_t2_scan},
        {"t2-decay", run_t2_decay},
        {"t2-scaling", run_t2_scaling},
        {"lattice-eit", run_lattice_eit},
        {"lattice-layer", run_lattice_layer},
        {"lattice-cross", run_lattice_cross},
        {"chain", run_chain},
        {"randgraph-t3", run_randgraph_t3},
        {"cycle-census", run_cycle_census},
        {"er-scan", run_er_scan},
    };
    return reg;
}

} // namespace

std::vector<std::string> experiment_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    auto it = registry().find(config.experiment());
    if (it == registry().end()) throw UnknownExperiment("unknown experiment: " + config.experiment());
    ExperimentReport rep;
    rep.config = config;
    auto t0 = std::chrono::steady_clock::now();
    it->second(config, rep);
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace layerslab
