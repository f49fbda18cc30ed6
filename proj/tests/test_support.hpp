#pragma once

// Shared helpers for the unit tests: a deterministic PRNG and random
// rational generators for property-style checks.

#include <cstdint>

#include "fjl/rat.hpp"

namespace fjl::test {

class DetPrng {
public:
    explicit DetPrng(std::uint64_t seed = 0x9E3779B97F4A7C15ull) : state_(seed) {}

    std::uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }

    // Uniform in [lo, hi].
    long long next_in(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rat next_rat(long long num_mag = 1000, long long den_max = 1000) {
        return Rat(next_in(-num_mag, num_mag), next_in(1, den_max));
    }

    Rat next_nonneg_rat(long long num_mag = 1000, long long den_max = 1000) {
        return Rat(next_in(0, num_mag), next_in(1, den_max));
    }

private:
    std::uint64_t state_;
};

}  // namespace fjl::test
