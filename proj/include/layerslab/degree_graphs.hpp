#pragma once

#include <vector>

#include "layerslab/graph.hpp"
#include "layerslab/rational.hpp"

namespace layerslab {

// Cycle counts Y_i for i = 1..k_max: loops are length-1 cycles, unordered
// pairs of parallel edges length-2, and for i >= 3 distinct-vertex cycles
// counted as edge sets (parallel edges give distinct cycles).
struct CycleCensus {
    int k_max = 0;
    std::vector<long long> count; // count[i-1] = Y_i

    long long y(int i) const { return count[i - 1]; }
};

// Exact enumeration; k_max above 8 raises KTooLarge.
CycleCensus count_cycles(const MultiGraph& mg, int k_max);
CycleCensus count_cycles(const Graph& g, int k_max);

// Q = sum over i of lambda_i * i * (i - 2), exact.
Rational molloy_reed_Q(const DegreeSequence& seq);

// Replacing degrees (r, r') by (r+1, r'-1) lowers sum d(d-2) by exactly
// 2(r' - r - 1); requires r' >= r + 2 (BadOrder otherwise). The returned
// value is cross-checked against the direct difference.
long long degree_smoothing_step(int r, int r_prime);

} // namespace layerslab
