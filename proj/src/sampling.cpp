#include "vdet/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace vdet {

long RationalSampler::uniform(long lo, long hi)
{
    if (hi < lo) {
        throw std::invalid_argument("empty sampling range");
    }
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % range;
    std::uint64_t x = rng_();
    while (x >= limit) {
        x = rng_();
    }
    return lo + static_cast<long>(x % range);
}

Rational RationalSampler::draw()
{
    long p = uniform(-bounds_.numerator, bounds_.numerator - 1);
    if (p >= 0) {
        ++p; // skip zero
    }
    const long q = uniform(1, bounds_.denominator);
    return Rational(Integer(p), Integer(q));
}

std::vector<Rational> RationalSampler::draw_assignment(std::size_t count, bool allow_repeats)
{
    std::vector<Rational> xs;
    xs.reserve(count);
    while (xs.size() < count) {
        Rational x = draw();
        if (allow_repeats || std::find(xs.begin(), xs.end(), x) == xs.end()) {
            xs.push_back(std::move(x));
        }
    }
    return xs;
}

} // namespace vdet
