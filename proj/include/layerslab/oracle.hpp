#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "layerslab/errors.hpp"
#include "layerslab/rational.hpp"

namespace layerslab {

// Exact probability of an order-measurable event by exhausting every total
// order of m items. The predicate sees rank[i] for item i (rank 0 youngest)
// and every event in this model depends on ages only through these ranks.
//
// The cap is 12 (12! ~ 4.8e8); the heaviest instance the test suite asks for
// is 11 items.
inline constexpr int kOracleMaxItems = 12;

namespace detail {

template <class Pred>
std::uint64_t count_orders_serial(int m, Pred&& pred) {
    std::vector<int> rank(m);
    std::iota(rank.begin(), rank.end(), 0);
    std::uint64_t hits = 0;
    do {
        if (pred(rank)) ++hits;
    } while (std::next_permutation(rank.begin(), rank.end()));
    return hits;
}

// Split on the rank of item 0; each branch walks the (m-1)! orders of the
// remaining ranks. Counts are exact, so the reduction is order-independent.
template <class Pred>
std::uint64_t count_orders_parallel(int m, Pred&& pred) {
    if (m < 2) return count_orders_serial(m, pred);
    std::uint64_t hits = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : hits)
    for (int first = 0; first < m; ++first) {
        std::vector<int> rank(m);
        rank[0] = first;
        int fill = 0;
        for (int i = 1; i < m; ++i) {
            if (fill == first) ++fill;
            rank[i] = fill++;
        }
        std::uint64_t local = 0;
        do {
            if (pred(rank)) ++local;
        } while (std::next_permutation(rank.begin() + 1, rank.end()));
        hits += local;
    }
    return hits;
}

} // namespace detail

template <class Pred>
Rational permutation_oracle(int m, Pred&& pred, bool parallel = true) {
    if (m < 0 || m > kOracleMaxItems) throw TooLarge("oracle limited to 12 items");
    if (m == 0) return pred(std::vector<int>{}) ? Rational(1) : Rational(0);
    std::uint64_t hits = parallel ? detail::count_orders_parallel(m, pred)
                                  : detail::count_orders_serial(m, pred);
    return Rational(BigInt(hits), factorial(m));
}

} // namespace layerslab
