#pragma once

// Seeded random rational test points.
//
// Draws use mt19937_64 (whose output sequence is fixed by the standard) with
// rejection sampling for bounded integers, so a seed produces the same points
// with every standard library.

#include <cstdint>
#include <random>
#include <vector>

#include "vdet/exact_arith.hpp"

namespace vdet {

struct RationalBounds {
    long numerator = 50;  ///< p in [-numerator, numerator] \ {0}
    long denominator = 10; ///< q in [1, denominator]
};

class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed, RationalBounds bounds = {}) : rng_(seed), bounds_(bounds) {}

    /// Uniform in [lo, hi].
    long uniform(long lo, long hi);
    /// p/q with p nonzero.
    Rational draw();
    /// count values; pairwise distinct unless allow_repeats.
    std::vector<Rational> draw_assignment(std::size_t count, bool allow_repeats = false);

private:
    std::mt19937_64 rng_;
    RationalBounds bounds_;
};

} // namespace vdet
