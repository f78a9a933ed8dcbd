#pragma once

// Random generators shared by the unit tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vdet/exact_arith.hpp"
#include "vdet/matrix.hpp"
#include "vdet/multipoly.hpp"

namespace vdet::testing {

inline long uniform(std::mt19937_64& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Signed integer with up to `digits` decimal digits.
inline Integer big_integer(std::mt19937_64& rng, int digits)
{
    const int len = static_cast<int>(uniform(rng, 1, digits));
    std::string s = uniform(rng, 0, 1) ? "-" : "";
    s += static_cast<char>('1' + uniform(rng, 0, 8));
    for (int i = 1; i < len; ++i) {
        s += static_cast<char>('0' + uniform(rng, 0, 9));
    }
    return uniform(rng, 0, 9) == 0 ? Integer(0) : Integer::parse(s);
}

inline Rational small_rational(std::mt19937_64& rng, long num_bound = 9, long den_bound = 6)
{
    return Rational(Integer(uniform(rng, -num_bound, num_bound)), Integer(uniform(rng, 1, den_bound)));
}

inline MultiPoly small_poly(std::mt19937_64& rng, std::size_t vars, int max_terms = 4, int max_exp = 2,
                            long coeff_bound = 5)
{
    std::vector<std::pair<std::vector<std::uint32_t>, Integer>> terms;
    const int count = static_cast<int>(uniform(rng, 0, max_terms));
    for (int t = 0; t < count; ++t) {
        std::vector<std::uint32_t> e(vars);
        for (auto& x : e) {
            x = static_cast<std::uint32_t>(uniform(rng, 0, max_exp));
        }
        terms.emplace_back(e, Integer(uniform(rng, -coeff_bound, coeff_bound)));
    }
    return MultiPoly::from_terms(vars, terms);
}

inline Matrix<Integer> random_integer_matrix(std::mt19937_64& rng, Index n, long bound = 9)
{
    Matrix<Integer> m(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            m(i, j) = Integer(uniform(rng, -bound, bound));
        }
    }
    return m;
}

inline Matrix<Rational> random_rational_matrix(std::mt19937_64& rng, Index n)
{
    Matrix<Rational> m(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            m(i, j) = small_rational(rng);
        }
    }
    return m;
}

inline Matrix<MultiPoly> random_poly_matrix(std::mt19937_64& rng, Index n, std::size_t vars)
{
    Matrix<MultiPoly> m(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            m(i, j) = small_poly(rng, vars, 3, 1, 3);
        }
    }
    return m;
}

inline MultiPoly X(std::size_t i, std::size_t vars) { return MultiPoly::variable(i, vars); }
inline MultiPoly C(long c, std::size_t vars) { return MultiPoly::constant(Integer(c), vars); }

} // namespace vdet::testing
