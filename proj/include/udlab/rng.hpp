#pragma once

#include "udlab/rational.hpp"

#include <cstdint>

namespace udlab {

/**
 * SplitMix64. All randomness in the library flows through this generator so
 * that identical seeds reproduce identical rational data bit-for-bit on every
 * platform; the constants below are the whole specification.
 */
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform-enough value in [0, bound); bound > 0. The tiny modulo bias is
    // irrelevant here, determinism is not.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Integer in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

}  // namespace udlab
