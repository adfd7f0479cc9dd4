#pragma once

#include <cstdint>

namespace kzq {

// Counter-based generator: every (seed, coordinate...) pair names an
// independent stream, so parallel sweeps draw identical numbers no matter
// how work is scheduled.
//
// The state update is the splitmix64 sequence; streams are derived by
// folding coordinates into the seed through the same finalizer.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

  private:
    std::uint64_t state_;
};

// Mixes one coordinate into a seed; apply repeatedly for nested indices.
inline std::uint64_t mix_stream(std::uint64_t seed, std::uint64_t coordinate) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (coordinate + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Sum of `trials` Bernoulli draws. Exact distribution, O(trials); shot
// counts in this codebase stay small enough that speed does not matter.
inline std::uint64_t binomial_draw(SplitMix64& rng, std::uint64_t trials, double p) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return trials;
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < trials; ++i)
        if (rng.next_double() < p) ++hits;
    return hits;
}

}  // namespace kzq
