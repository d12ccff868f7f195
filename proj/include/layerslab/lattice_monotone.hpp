#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "layerslab/lattice.hpp"
#include "layerslab/rational.hpp"
#include "layerslab/rng.hpp"

namespace layerslab {

// ---- walk pairs -----------------------------------------------------------

struct WalkPairStats {
    int meeting_time = -1;   // first k >= 1 with S_k = S'_k; -1 when censored
    int common_vertices = 1; // shared vertices up to the horizon (start included)
};

// Two independent monotone walks from the origin, exact simulation; the
// meeting time is right-censored at the horizon.
WalkPairStats sample_walk_pair(int d, int horizon, RandomStream& rng);

struct TailRow {
    int k = 0;
    double p_ge = 0.0; // P(|common| >= k)
};

struct IntersectionTail {
    std::vector<TailRow> rows;
    double alpha_hat = 0.0; // fitted log-tail slope
    double alpha_ref = 0.0; // 1/d + 1/d^2
    long long trials = 0;
};

// distance_cap > 0 abandons a pair once the walks are this far apart (returns
// from such distances are beyond negligible at the tolerances used here).
IntersectionTail intersection_tail(int d, int horizon, long long trials, std::uint64_t seed,
                                   int distance_cap = 0, bool parallel = true);

struct PairCondEstimates {
    // Conditioned return probabilities, raw scale (each is ~d^-2).
    double a2 = 0, p12 = 0, p123 = 0, p1234 = 0;
    double se_a2 = 0, se_p12 = 0, se_p123 = 0, se_p1234 = 0;
    long long trials = 0;
    int d = 0;
};

// Start pairs fixed exactly as conditioned: S_1 = e1 vs S'_1 = e2 for a_2,
// S_2 in {2e1 | 2e2, 2e1 | e2+e3, e1+e3 | e2+e4} for the p's.
PairCondEstimates conditional_pair_probs(int d, long long trials, std::uint64_t seed,
                                         int horizon = 2000, int distance_cap = 60,
                                         bool parallel = true);

// ---- block events on monotone paths ---------------------------------------

// Monotone path of L steps: vertices position(0) = origin, ..., position(L);
// the conventions give position(0) the predecessor -e1 and position(L) the
// successor +e1.
struct MonotonePath {
    int d = 1;
    std::vector<int> steps; // axis of each unit step

    int length() const { return static_cast<int>(steps.size()); }
    LatticePoint position(int i) const;
    static MonotonePath sample(int d, int length, RandomStream& rng);
};

// Ages feeding one block: the focal pair (a younger vertex count is taken
// over each side's 2d-2 off-path neighbors).
struct BlockAges {
    std::uint64_t a = 0, b = 0;
    std::vector<std::uint64_t> off_a, off_b;
};

// Full block event from the definition: each focal vertex sees at most two
// younger vertices among its neighbors minus the designated one (partner
// included). This is what forces the path into T_4.
bool block_full_ok(const BlockAges& ba);

// The three-case sub-event whose probability is the reported closed form
// lattice_marginal_Ai: both off-path counts <= 1; or one side's count is
// exactly 2 while the other focal vertex is youngest in its partner's
// off-path closed neighborhood; or count pattern (2, 1) with the unique
// younger neighbor younger than both focal vertices. The reported form keeps
// only one orientation of the middle case; the full event adds the other.
bool block_cases_ok(const BlockAges& ba);

struct LatticeBlockOutcome {
    std::vector<char> block_ok;
    bool all_ok = true;
};

using LatticeAgeFn = std::function<std::uint64_t(const LatticePoint&)>;

BlockAges collect_block_ages(const MonotonePath& path, int block, const LatticeAgeFn& age_of);
BlockAges collect_block_ages(const MonotonePath& path, int block, const LazyAgeSource& src);

// The set of lattice points whose ages feed the block events of this path.
std::vector<LatticePoint> block_relevant_points(const MonotonePath& path);

LatticeBlockOutcome check_lattice_A(const MonotonePath& path, const LazyAgeSource& src);
LatticeBlockOutcome check_lattice_A_cases(const MonotonePath& path, const LazyAgeSource& src);

// Reported three-term block marginal; strictly above 9/(8 d^2) for d >= 2.
Rational lattice_marginal_Ai(int d);
// Probability of the full block event (the middle case counted in both
// orientations).
Rational lattice_marginal_Ai_full(int d);

// ---- the {0, 2, 4, inf} auxiliary chain ------------------------------------

struct ChainSpec {
    double q20 = 0, q24 = 0, q42 = 0, q4inf = 0;
    // q20 = d^-2 / (1 - (3d-4) d^-2); q42 defaults to 4 d^-2.
    static ChainSpec standard(int d, double q42_override = -1.0);
};

// Closed-form law Pr[r0 = k0, r2 = k2] = q20^(k0-1) q42^(k2-k0) q4inf.
double chain_pmf(const ChainSpec& c, int k0, int k2);

// Visit counts (r0, r2) of one simulated chain run.
std::pair<int, int> chain_simulate(const ChainSpec& c, RandomStream& rng);

struct ChainComparison {
    double tv = 0.0;             // total variation on the truncated grid
    double sim_mass_outside = 0; // simulated mass beyond the truncation
    long long trials = 0;
};

ChainComparison chain_tv_against_simulation(int d, long long trials, std::uint64_t seed,
                                            int truncate_at = 10, double q42_override = -1.0,
                                            bool parallel = true);

// E[p0^r0 p2^r2] under the closed-form law, with p0 = d/(a'-1) and
// p2 = (3d/(a'(2d-7))) / (1 - 9/(a'(2d-7))). Throws DivergentSeries outside
// the convergence region.
double chain_weighted_sum(int d, double a_prime, double q42_override = -1.0);

// Default a' derived from the exact marginal: min(d sqrt(marginal), 1.05).
double default_a_prime(int d);

// ---- open monotone path search ---------------------------------------------

struct CrossSearchResult {
    bool crossed = false;
    bool budget_exhausted = false;
    int longest = 0;             // deepest L1 norm reached by an open path
    long long nodes_explored = 0;
};

// Depth-first search over monotone extensions from the origin, keeping only
// vertices with lattice layer <= k; failed subtrees are memoized so each
// point is expanded once. Crossing = an open monotone path reaching L1
// norm = radius.
CrossSearchResult search_open_monotone_path(int d, int k, int radius, const LazyAgeSource& src,
                                            long long node_budget);

} // namespace layerslab
