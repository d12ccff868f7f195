#pragma once

#include <cstdint>
#include <vector>

#include "layerslab/errors.hpp"
#include "layerslab/rng.hpp"

namespace layerslab {

// Point of Z^d as an explicit coordinate vector.
struct LatticePoint {
    std::vector<std::int32_t> x;

    int dim() const { return static_cast<int>(x.size()); }
    long long l1_norm() const;
    LatticePoint shifted(int axis, int delta) const;
    bool operator==(const LatticePoint& o) const { return x == o.x; }
};

LatticePoint origin(int d);

struct LatticePointHash {
    std::size_t operator()(const LatticePoint& p) const {
        std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(p.x.size());
        for (std::int32_t c : p.x) h = mix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(c)));
        return static_cast<std::size_t>(h);
    }
};

// Deterministic age for every lattice point: a keyed hash of (seed, coords).
// Distinct points collide with probability 2^-64 per pair; comparisons that
// hit a collision raise TiesDetected instead of breaking the tie silently.
struct LazyAgeSource {
    std::uint64_t seed = 0;

    std::uint64_t age(const LatticePoint& p) const {
        std::uint64_t h = mix64(seed ^ 0xA5A5A5A55A5A5A5AULL);
        h = mix64(h ^ static_cast<std::uint64_t>(p.x.size()));
        for (std::int32_t c : p.x) h = mix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(c)));
        return h;
    }
};

// True when age(u) < age(v); ties raise.
bool lazy_younger(const LazyAgeSource& src, const LatticePoint& u, const LatticePoint& v);

// layer(p) = 1 + #(younger lattice neighbors), neighbors in all 2d directions.
int lattice_layer(const LazyAgeSource& src, const LatticePoint& p);

inline bool lattice_layer_at_most(const LazyAgeSource& src, const LatticePoint& p, int k) {
    return lattice_layer(src, p) <= k;
}

} // namespace layerslab
