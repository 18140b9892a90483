#pragma once

#include <cstdint>

#include "lforge/rational.hpp"

namespace lforge {

// SplitMix64 (Steele/Lea/Flood 2014). Chosen because a sweep seeded with the
// same integer must replay bit-for-bit across platforms and thread counts, and
// because child generators can be split off deterministically for independent
// parameter draws. The exact update is pinned here; see README.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Child stream, decorrelated from the parent's subsequent output.
    SplitMix64 split() { return SplitMix64(next() ^ 0x9E3779B97F4A7C15ULL); }

    // Uniform integer in [lo, hi] via rejection-free modulo; the tiny modulo
    // bias is irrelevant for test-parameter draws and keeps replay trivial.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        return lo + next() % (hi - lo + 1);
    }

    // Uniform double in [0,1) from the top 53 bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Signed small-height rational: numerator in ±[1,max_height], denominator
    // in [1,max_height]. Never zero, so the result is an invertible scalar.
    Rational small_rational(std::uint64_t max_height = 7) {
        const long num = static_cast<long>(uniform(1, max_height));
        const long den = static_cast<long>(uniform(1, max_height));
        const bool negative = (next() & 1ULL) != 0;
        return Rational(negative ? -num : num, den);
    }

private:
    std::uint64_t state_;
};

} // namespace lforge
