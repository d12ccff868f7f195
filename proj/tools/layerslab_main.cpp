// Command-line front end: every experiment is a named subcommand whose flags
// are folded into an ExperimentConfig, so a run is reproducible from its
// config echo alone. `run` executes a config file directly; `verify` runs
// the exact-oracle suite.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "layerslab/ensemble.hpp"
#include "layerslab/experiments.hpp"
#include "layerslab/verify.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

using namespace layerslab;

namespace {

struct CommonOpts {
    std::string out = "-";
    std::string format = "csv";
    std::string config_file;
    int workers = 0;
};

void add_common(CLI::App* cmd, CommonOpts& common) {
    cmd->add_option("--out", common.out, "output path, '-' for stdout");
    cmd->add_option("--format", common.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--config", common.config_file, "config file; explicit flags override its keys");
    cmd->add_option("--workers", common.workers, "worker threads (default: LAYERSLAB_WORKERS or OpenMP)");
}

int execute(const std::string& experiment, const CommonOpts& common,
            const std::vector<std::pair<std::string, std::string>>& flags) {
    ExperimentConfig cfg;
    if (!common.config_file.empty()) cfg = ExperimentConfig::from_file(common.config_file);
    cfg.set("experiment", experiment);
    for (const auto& [k, v] : flags)
        if (!v.empty()) cfg.set(k, v);
#if defined(_OPENMP)
    if (common.workers > 0) omp_set_num_threads(common.workers);
    else omp_set_num_threads(worker_count());
#endif
    ExperimentReport rep = run_experiment(cfg);
    write_report(rep, common.out, common.format);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"layerslab: layers-model percolation laboratory"};
    app.require_subcommand(1);

    struct Sub {
        CLI::App* cmd;
        CommonOpts common;
        std::vector<std::pair<std::string, std::string>> flags;
        std::string name;
    };
    std::vector<Sub> subs;
    subs.reserve(20);

    auto make = [&](const std::string& name, const std::string& desc,
                    const std::vector<std::pair<std::string, std::string>>& opts) -> Sub& {
        subs.push_back({});
        Sub& s = subs.back();
        s.name = name;
        s.cmd = app.add_subcommand(name, desc);
        add_common(s.cmd, s.common);
        s.flags.reserve(opts.size());
        for (const auto& [key, help] : opts) {
            s.flags.emplace_back(key, "");
            s.cmd->add_option("--" + key, s.flags.back().second, help);
        }
        return s;
    };

    make("sample", "one age draw: per-vertex rank, layer and openness",
         {{"graph", "graph spec, e.g. star:4, cycle:100, regular:3:1000, file:PATH"},
          {"k", "openness threshold (default 2)"},
          {"seed", "master seed"}});
    make("layer-marginal", "empirical layer distribution of one vertex",
         {{"graph", "graph spec (default star:4)"},
          {"vertex", "vertex id (default 0)"},
          {"trials", "Monte Carlo trials"},
          {"seed", "master seed"}});
    make("tree-good", "Z_k and k-goodness samples on a rooted tree",
         {{"degree-profile", "regular:D, cycle:D1,D2,..., counterexample"},
          {"k", "number of path blocks"},
          {"depth", "tree truncation depth (default 2k+1)"},
          {"trials", "Monte Carlo trials"},
          {"seed", "master seed"}});
    make("tree-nice", "nice-path count and |W| on a rooted tree",
         {{"degree-profile", "tree profile"},
          {"length", "odd path length >= 15"},
          {"depth", "truncation depth"},
          {"marked", "comma-separated marked vertex ids"},
          {"trials", "Monte Carlo trials"},
          {"seed", "master seed"}});
    make("t2-scan", "exact S_n table for the chord-free path family",
         {{"graph", "host graph spec"},
          {"v", "start vertex"},
          {"n", "largest path length"},
          {"path-cap", "enumeration cap"},
          {"seed", "master seed (for random hosts)"}});
    make("t2-decay", "Monte Carlo frequency of the monotone T_2 path event",
         {{"graph", "host graph spec"},
          {"v", "start vertex"},
          {"n", "comma-separated path lengths"},
          {"trials", "Monte Carlo trials"},
          {"seed", "master seed"}});
    make("t2-scaling", "largest T_2 component against log n",
         {{"generator", "size-parameterized family: regular:3 (n appended)"},
          {"sizes", "comma-separated sizes"},
          {"trials", "trials per size"},
          {"seed", "master seed"}});
    make("lattice-eit", "meeting-time and conditional pair statistics",
         {{"d", "dimension"},
          {"trials", "walk pairs"},
          {"horizon", "step horizon"},
          {"distance-cap", "abandon pairs past this L1 distance"},
          {"conditional", "0 to skip conditioned estimates"},
          {"conditional-trials", "trials for conditioned estimates"},
          {"seed", "master seed"}});
    make("lattice-layer", "layer index of given lattice points under lazy ages",
         {{"d", "dimension"},
          {"k", "openness threshold (default 4)"},
          {"points", "semicolon-separated points, e.g. 0,0;1,2;-1,3"},
          {"seed", "age source seed"}});
    make("lattice-cross", "open monotone path search in T_k(Z^d)",
         {{"d", "dimension"},
          {"k", "openness threshold (default 4)"},
          {"radius", "L1 radius to cross"},
          {"seeds", "number of age seeds"},
          {"budget", "node budget per seed"},
          {"seed", "master seed"}});
    make("chain", "auxiliary {0,2,4,inf} chain: law vs simulation",
         {{"d", "dimension"},
          {"trials", "simulated chains"},
          {"truncate", "grid truncation"},
          {"q42", "override q_{4,2}"},
          {"a-prime", "a' for the weighted sum"},
          {"seed", "master seed"}});
    make("randgraph-t3", "largest T_3 component fraction, given degrees",
         {{"degrees", "regular:D, uniform:A:B, or explicit list"},
          {"sizes", "comma-separated sizes"},
          {"trials", "trials per size"},
          {"k", "openness threshold (default 3)"},
          {"seed", "master seed"}});
    make("cycle-census", "configuration-model cycle count means",
         {{"degrees", "degree spec"},
          {"n", "vertices"},
          {"k-max", "largest cycle length"},
          {"trials", "draws"},
          {"seed", "master seed"}});
    make("er-scan", "largest T_3 fraction of G(n, c/n) over a c grid",
         {{"n", "vertices"},
          {"c", "comma-separated c grid"},
          {"trials", "trials per c"},
          {"k", "openness threshold (default 3)"},
          {"seed", "master seed"}});

    // generic runner: everything comes from the file / --set pairs
    CommonOpts run_common;
    std::vector<std::string> run_sets;
    CLI::App* run_cmd = app.add_subcommand("run", "run an experiment from a config file");
    add_common(run_cmd, run_common);
    run_cmd->add_option("--set", run_sets, "override key=value")->take_all();

    CLI::App* verify_cmd = app.add_subcommand("verify", "exact oracle suite; nonzero exit on failure");
    bool verify_quick = false;
    verify_cmd->add_flag("--quick", verify_quick, "skip the heaviest enumerations");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify_cmd->parsed()) {
#if defined(_OPENMP)
            omp_set_num_threads(worker_count());
#endif
            auto checks = run_exact_checks(!verify_quick, true);
            int failures = 0;
            for (const auto& c : checks) {
                std::printf("%s  %s%s%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                            c.detail.empty() ? "" : ": ", c.detail.c_str());
                failures += !c.pass;
            }
            std::printf("%d/%zu checks passed\n", static_cast<int>(checks.size()) - failures,
                        checks.size());
            return failures == 0 ? 0 : 1;
        }
        if (run_cmd->parsed()) {
            if (run_common.config_file.empty()) throw InvalidConfig("run needs --config");
            ExperimentConfig cfg = ExperimentConfig::from_file(run_common.config_file);
            for (const auto& kv : run_sets) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) throw InvalidConfig("--set expects key=value");
                cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
            }
#if defined(_OPENMP)
            if (run_common.workers > 0) omp_set_num_threads(run_common.workers);
            else omp_set_num_threads(worker_count());
#endif
            ExperimentReport rep = run_experiment(cfg);
            write_report(rep, run_common.out, run_common.format);
            return 0;
        }
        for (auto& s : subs)
            if (s.cmd->parsed()) return execute(s.name, s.common, s.flags);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 1;
}
