#pragma once

#include <string>
#include <vector>

#include "layerslab/graph.hpp"
#include "layerslab/report.hpp"
#include "layerslab/tree.hpp"

namespace layerslab {

// Graph generator specs: star:M, path:N, cycle:N, complete:N, er:N:C,
// regular:D:N, degseq:<list>, sstree:D:DEPTH, file:PATH. Random specs draw
// from the supplied stream.
Graph make_graph(const std::string& spec, RandomStream& rng);

// Tree degree profiles: regular:D, cycle:D1,D2,..., counterexample.
DegreeProfile make_profile(const std::string& spec, int max_level);

// Degree sequences sized at runtime: regular:D, uniform:A:B, or an explicit
// list "3x100,4x50" (then n is ignored).
DegreeSequence sized_degree_sequence(const std::string& spec, long long n, RandomStream& rng);

std::vector<long long> parse_sizes(const std::string& csv);
std::vector<double> parse_grid(const std::string& csv);

// Dispatch on config["experiment"]; throws UnknownExperiment / InvalidConfig.
// Registered names: sample, layer-marginal, tree-good, tree-nice, t2-scan,
// t2-decay, t2-scaling, lattice-eit, lattice-cross, chain, randgraph-t3,
// cycle-census, er-scan.
ExperimentReport run_experiment(const ExperimentConfig& config);

std::vector<std::string> experiment_names();

} // namespace layerslab
