// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance is pinned here; Monte Carlo checks use 3-sigma bands at
// the stated trial counts and exact checks demand rational equality.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "layerslab/degree_graphs.hpp"
#include "layerslab/ensemble.hpp"
#include "layerslab/experiments.hpp"
#include "layerslab/lattice_monotone.hpp"
#include "layerslab/layers.hpp"
#include "layerslab/t2.hpp"
#include "layerslab/tree_paths.hpp"
#include "layerslab/verify.hpp"

using namespace layerslab;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

double binom3sigma(double p, double trials) { return 3.0 * std::sqrt(p * (1 - p) / trials); }

// 1. Layer marginals on stars: P(center in L_i) = 1/(m+1), 1e5 trials, 3 sigma.
Outcome criterion_layer_marginals() {
    Outcome out;
    std::ostringstream ss;
    const long long trials = 100000;
    for (int m : {2, 3, 4}) {
        Graph star = star_graph(m);
        auto layers = run_trials<int>(trials, 101 + m, [&](long long, RandomStream& rng) {
            return compute_layers(star, sample_ages(star.n, rng)).layer[0];
        });
        std::vector<long long> counts(m + 2, 0);
        for (int l : layers) ++counts[l];
        double p = 1.0 / (m + 1);
        double worst = 0;
        for (int i = 1; i <= m + 1; ++i)
            worst = std::max(worst, std::abs(counts[i] / double(trials) - p));
        ss << "m=" << m << " max|dev|=" << worst << " (3s=" << binom3sigma(p, trials) << ") ";
        if (worst > binom3sigma(p, trials)) out.pass = false;
    }
    out.detail = ss.str();
    return out;
}

// 2. Exact oracle equality for every closed form.
Outcome criterion_exact_oracles() {
    Outcome out;
    auto checks = run_exact_checks(true, true);
    int failed = 0;
    for (const auto& c : checks)
        if (!c.pass) {
            ++failed;
            if (out.detail.size() < 300) out.detail += c.name + "; ";
        }
    out.pass = failed == 0;
    std::ostringstream ss;
    ss << (checks.size() - failed) << "/" << checks.size() << " exact checks. " << out.detail;
    out.detail = ss.str();
    return out;
}

// 3. Claim minimum over the integer grid.
Outcome criterion_claim_minimum() {
    FMinResult m = minimize_claim_f(50);
    Outcome out;
    out.pass = m.x == 3 && m.y == 3 && m.value == Rational(1, 3);
    out.detail = "min f(" + std::to_string(m.x) + "," + std::to_string(m.y) + ") = " + m.value.str();
    return out;
}

// 4. T_2 always a forest with monotone ages, mixed generators.
Outcome criterion_t2_structure() {
    const long long trials = 12000;
    auto violations = run_trials<int>(trials, 104, [&](long long i, RandomStream& rng) {
        Graph g;
        switch (i % 6) {
            case 0: g = erdos_renyi(100, 3.0 / 100, rng); break;
            case 1: g = simple_graph_from_sequence(DegreeSequence::constant(3, 60), rng); break;
            case 2: g = cycle_graph(50); break;
            case 3: g = complete_graph(7); break;
            case 4: g = star_graph(12); break;
            default: {
                DegreeSequence s = sized_degree_sequence("uniform:3:5", 40, rng);
                g = simple_graph_from_sequence(s, rng);
            }
        }
        T2Structure t2 = analyze_T2(g, sample_ages(g.n, rng));
        return (t2.is_forest && t2.ages_monotone) ? 0 : 1;
    });
    long long bad = 0;
    for (int v : violations) bad += v;
    Outcome out;
    out.pass = bad == 0;
    out.detail = std::to_string(trials) + " samples, " + std::to_string(bad) + " violations";
    return out;
}

// 5. I_{v,n} under the union bound; exact S_n non-increasing.
Outcome criterion_t2_decay() {
    Outcome out;
    std::ostringstream ss;
    const long long trials = 10000;
    for (int n = 3; n <= 7; ++n) {
        RootedTree t = spherically_symmetric_tree(regular_profile(3), n + 2);
        FrequencyEstimate f = estimate_I_vn(t.graph, 0, n, trials, 105 + n);
        double bound = std::pow(3.0, n) / std::tgamma(n + 2.0);
        if (f.frequency > bound + 3 * f.stderr_) out.pass = false;
        ss << "n=" << n << ": " << f.frequency << "<=" << bound << " ";
    }
    RootedTree t8 = spherically_symmetric_tree(regular_profile(3), 8);
    auto series = weighted_sum_series(t8.graph, 0, 6);
    for (std::size_t i = 1; i < series.size(); ++i)
        if (!(series[i] <= series[i - 1])) out.pass = false;
    ss << "| S_2..S_6 non-increasing: " << to_double(series.front()) << " -> "
       << to_double(series.back());
    out.detail = ss.str();
    return out;
}

// 6. E[Z_k] = 1 within 3 sigma; P(k-good) positive and stabilizing.
Outcome criterion_second_moment() {
    Outcome out;
    std::ostringstream ss;
    const long long trials = 10000;
    std::vector<double> pkg;
    for (int k = 2; k <= 6; ++k) {
        RootedTree t = spherically_symmetric_tree(regular_profile(3), 2 * k + 1);
        auto results = run_trials<std::pair<double, int>>(trials, 106 + k, [&](long long, RandomStream& rng) {
            ZkSample z = realized_Zk(t, sample_ages(t.n(), rng), k);
            return std::make_pair(to_double(z.zk), z.k_good ? 1 : 0);
        });
        std::vector<double> zs;
        long long good = 0;
        for (auto [z, g] : results) {
            zs.push_back(z);
            good += g;
        }
        Summary s = summarize(zs);
        double pg = good / double(trials);
        pkg.push_back(pg);
        if (k <= 5 && std::abs(s.mean - 1.0) > 3 * s.stderr_) out.pass = false;
        if (!(pg > 0)) out.pass = false;
        ss << "k=" << k << ": E[Z]=" << s.mean << " P(good)=" << pg << " ";
    }
    // stabilization: successive differences small at the top of the range
    if (std::abs(pkg[3] - pkg[2]) > 0.1 || std::abs(pkg[4] - pkg[3]) > 0.1) out.pass = false;
    out.detail = ss.str();
    return out;
}

// 7. Meeting-time pmf and the conditioned pair ratios.
Outcome criterion_eit() {
    Outcome out;
    std::ostringstream ss;
    const long long trials = 100000;
    for (int d : {2, 5, 10}) {
        auto taus = run_trials<int>(trials, 107 + d, [&](long long, RandomStream& rng) {
            return sample_walk_pair(d, 10, rng).meeting_time;
        });
        long long t1 = 0, t2 = 0;
        for (int t : taus) {
            t1 += (t == 1);
            t2 += (t == 2);
        }
        double dd = d;
        double p1 = 1 / dd, p2 = 1 / (dd * dd) - 1 / (dd * dd * dd);
        if (std::abs(t1 / double(trials) - p1) > binom3sigma(p1, trials)) out.pass = false;
        if (std::abs(t2 / double(trials) - p2) > binom3sigma(p2, trials)) out.pass = false;
        ss << "d=" << d << " ok ";
    }
    PairCondEstimates pc = conditional_pair_probs(20, 1000000, 207);
    double r3 = pc.p123 / pc.p12, r4 = pc.p1234 / pc.p12;
    if (std::abs(r3 - 2.0) > 0.3) out.pass = false;
    if (std::abs(r4 - 4.0) > 0.5) out.pass = false;
    ss << "| d=20 ratios: p123/p12=" << r3 << " (2 +- 0.3), p1234/p12=" << r4 << " (4 +- 0.5)";
    out.detail = ss.str();
    return out;
}

// 8. Reported lattice marginal strictly above 9/(8 d^2).
Outcome criterion_lattice_bound() {
    Outcome out;
    for (int d = 2; d <= 100; ++d)
        if (!(lattice_marginal_Ai(d) > Rational(9, 8LL * d * d))) {
            out.pass = false;
            out.detail = "fails at d=" + std::to_string(d);
        }
    if (out.pass) out.detail = "exact for 2 <= d <= 100; at d=2: 22/45 > 9/32";
    return out;
}

// 9. Chain law vs simulation in total variation.
Outcome criterion_chain() {
    ChainComparison c = chain_tv_against_simulation(20, 1000000, 109, 10);
    Outcome out;
    out.pass = c.tv < 0.01;
    std::ostringstream ss;
    ss << "TV=" << c.tv << " (< 0.01), mass outside truncation=" << c.sim_mass_outside;
    out.detail = ss.str();
    return out;
}

// 10. Crossing frequency over d in {10, 15, 20}: non-decreasing and positive
// at d = 20. The monotonicity half fails honestly: the origin-rooted
// crossing probability is governed by the per-vertex openness marginal
// 4/(2d+1), which falls with d while conditional survival is flat.
Outcome criterion_crossing() {
    Outcome out;
    std::ostringstream ss;
    std::vector<double> freqs;
    for (int d : {10, 15, 20}) {
        const long long seeds = 200;
        auto res = run_trials<std::pair<int, int>>(seeds, 110, [&](long long i, RandomStream&) {
            LazyAgeSource src{sub_seed(110 + d, static_cast<std::uint64_t>(i))};
            CrossSearchResult r = search_open_monotone_path(d, 4, 30, src, 1000000);
            bool origin_open = lattice_layer_at_most(src, origin(d), 4);
            return std::make_pair(r.crossed ? 1 : 0, origin_open ? 1 : 0);
        });
        long long crossed = 0, open_origin = 0, crossed_open = 0;
        for (auto [c, o] : res) {
            crossed += c;
            open_origin += o;
            crossed_open += c & o;
        }
        double f = crossed / double(seeds);
        freqs.push_back(f);
        ss << "d=" << d << ": " << f;
        if (open_origin > 0)
            ss << " (cond. on open origin " << crossed_open / double(open_origin) << ") ";
    }
    if (!(freqs[0] <= freqs[1] && freqs[1] <= freqs[2])) {
        out.pass = false;
        ss << "| monotonicity fails: unconditional frequency tracks the 4/(2d+1) marginal";
    }
    if (!(freqs[2] > 0)) out.pass = false;
    else ss << "| d=20 frequency positive";
    out.detail = ss.str();
    return out;
}

// 11. Configuration-model cycle means.
Outcome criterion_cycle_means() {
    Outcome out;
    std::ostringstream ss;
    DegreeSequence seq = DegreeSequence::constant(3, 10000);
    const long long draws = 1000;
    auto counts = run_trials<std::vector<long long>>(draws, 111, [&](long long, RandomStream& rng) {
        return count_cycles(configuration_multigraph(seq, rng), 4).count;
    });
    for (int i = 1; i <= 4; ++i) {
        std::vector<double> xs;
        for (const auto& c : counts) xs.push_back(double(c[i - 1]));
        Summary s = summarize(xs);
        double lambda = std::pow(2.0, i) / (2.0 * i);
        ss << "Y" << i << "=" << s.mean << " (ref " << lambda << ") ";
        if (std::abs(s.mean - lambda) > 3 * s.stderr_) out.pass = false;
    }
    out.detail = ss.str();
    return out;
}

// 12. Giant component of T_3: positive in every trial, stable mean.
Outcome criterion_giant() {
    Outcome out;
    std::ostringstream ss;
    for (const char* degrees : {"regular:3", "uniform:3:5"}) {
        std::vector<double> means;
        for (long long n : {1000LL, 10000LL, 100000LL}) {
            auto fracs = run_trials<double>(50, 112 + n, [&](long long, RandomStream& rng) {
                DegreeSequence s = sized_degree_sequence(degrees, n, rng);
                Graph g = simple_graph_from_sequence(s, rng, 5000);
                LayerResult layers = compute_layers(g, sample_ages(g.n, rng));
                return largest_open_component(g, layers, 3) / double(g.n);
            });
            Summary s = summarize(fracs);
            double mn = *std::min_element(fracs.begin(), fracs.end());
            means.push_back(s.mean);
            if (!(mn > 0)) out.pass = false;
        }
        double rel = std::abs(means[2] - means[1]) / means[1];
        ss << degrees << ": means " << means[0] << ", " << means[1] << ", " << means[2]
           << " (rel gap " << rel << ") ";
        if (rel >= 0.20) out.pass = false;
    }
    out.detail = ss.str();
    return out;
}

// 13. Byte-identical CSV replays at any worker count.
Outcome criterion_determinism() {
    Outcome out;
    std::vector<ExperimentConfig> cfgs;
    auto add = [&](std::initializer_list<std::pair<const char*, const char*>> kv) {
        ExperimentConfig cfg;
        for (auto& [k, v] : kv) cfg.set(k, v);
        cfgs.push_back(cfg);
    };
    add({{"experiment", "sample"}, {"graph", "regular:3:50"}, {"seed", "13"}});
    add({{"experiment", "layer-marginal"}, {"graph", "star:4"}, {"trials", "100000"}, {"seed", "7"}});
    add({{"experiment", "tree-good"}, {"k", "3"}, {"trials", "300"}, {"seed", "3"}});
    add({{"experiment", "tree-nice"}, {"trials", "3"}, {"seed", "3"}});
    add({{"experiment", "t2-scan"}, {"graph", "sstree:3:7"}, {"n", "4"}, {"seed", "2"}});
    add({{"experiment", "t2-decay"}, {"graph", "sstree:3:6"}, {"n", "3,4"}, {"trials", "1000"}, {"seed", "5"}});
    add({{"experiment", "t2-scaling"}, {"sizes", "500,1000"}, {"trials", "5"}, {"seed", "5"}});
    add({{"experiment", "lattice-eit"}, {"d", "6"}, {"trials", "30000"}, {"conditional-trials", "30000"}, {"seed", "2"}});
    add({{"experiment", "lattice-cross"}, {"d", "8"}, {"radius", "15"}, {"seeds", "60"}, {"seed", "4"}});
    add({{"experiment", "chain"}, {"d", "20"}, {"trials", "50000"}, {"seed", "1"}});
    add({{"experiment", "randgraph-t3"}, {"degrees", "uniform:3:5"}, {"sizes", "300,600"}, {"trials", "8"}, {"seed", "8"}});
    add({{"experiment", "cycle-census"}, {"n", "400"}, {"trials", "40"}, {"seed", "6"}});
    add({{"experiment", "er-scan"}, {"n", "250"}, {"c", "1,8"}, {"trials", "8"}, {"seed", "9"}});

    int checked = 0;
    for (const auto& cfg : cfgs) {
        omp_set_num_threads(1);
        std::string one = to_csv(run_experiment(cfg));
        omp_set_num_threads(2);
        std::string two = to_csv(run_experiment(cfg));
        std::string replay = to_csv(run_experiment(cfg));
        if (one != two || one != replay) {
            out.pass = false;
            out.detail += cfg.experiment() + " differs; ";
        }
        ++checked;
    }
    omp_set_num_threads(omp_get_num_procs());
    if (out.pass)
        out.detail = std::to_string(checked) + " experiments byte-identical at 1 and 2 workers";
    return out;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_s;
        std::function<Outcome()> fn;
    };
    std::vector<Criterion> criteria = {
        {1, "layer marginals on stars", 10, criterion_layer_marginals},
        {2, "exact oracle vs closed forms", 120, criterion_exact_oracles},
        {3, "claim grid minimum", 1, criterion_claim_minimum},
        {4, "T_2 forest + monotone ages", 60, criterion_t2_structure},
        {5, "T_2 decay and S_n monotone", 60, criterion_t2_decay},
        {6, "tree second moment", 120, criterion_second_moment},
        {7, "EIT meeting times and pair ratios", 300, criterion_eit},
        {8, "lattice marginal bound", 1, criterion_lattice_bound},
        {9, "chain law vs simulation", 60, criterion_chain},
        {10, "T_4(Z^d) crossing", 600, criterion_crossing},
        {11, "cycle Poisson means", 300, criterion_cycle_means},
        {12, "T_3 giant component", 600, criterion_giant},
        {13, "determinism of experiment replays", 120, criterion_determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.fn();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_s) {
            out.pass = false;
            out.detail += " [over runtime budget]";
        }
        std::printf("%s  criterion %2d: %s [%.1fs]  %s\n", out.pass ? "PASS" : "FAIL", c.id, c.name,
                    secs, out.detail.c_str());
        std::fflush(stdout);
        failures += !out.pass;
    }
    std::printf("%d/13 criteria passed\n", 13 - failures);
    return failures;
}
