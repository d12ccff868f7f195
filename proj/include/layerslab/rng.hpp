#pragma once

#include <cstdint>
#include <random>

namespace layerslab {

// splitmix64 finalizer; used for seed derivation and coordinate hashing.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Per-trial stream seed. Trials keyed by (master, index) are independent of
// execution order, which is what makes parallel replays bit-identical.
inline std::uint64_t sub_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master ^ mix64(index + 0x8000000000000000ULL));
}

// Seeded stream with platform-independent bounded draws (std::mt19937_64 output
// is pinned by the standard; the distributions are not, so we roll our own).
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Unbiased integer in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = eng_();
            if (r >= threshold) return r % n;
        }
    }

    int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    // Uniform in [0,1) with 53-bit resolution.
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

  private:
    std::mt19937_64 eng_;
};

} // namespace layerslab
