#pragma once

#include <cstdint>

#include "pdtest/errors.hpp"

namespace pdtest {

// SplitMix64 (Steele/Lea/Flood; Vigna's constants). A fixed, named generator
// so that a seed reproduces the exact same selection sequence on every
// platform and standard library. std::mt19937 would do, but the distribution
// adaptors around it are implementation-defined, which would break
// byte-identical log reproduction across toolchains.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) by rejection sampling.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw Error("next_below: bound must be positive");
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    bool next_bool() { return (next() >> 63) != 0; }

    // Derives an independent stream (fresh generator seeded from this one).
    SplitMix64 split() { return SplitMix64(next()); }

  private:
    std::uint64_t state_;
};

using Rng = SplitMix64;

}  // namespace pdtest
