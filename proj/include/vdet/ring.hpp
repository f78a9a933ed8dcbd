#pragma once

// Exact ground rings usable as Eigen scalars, and the ring context each one needs.
//
// A Ring<R> supplies the constants of R. Integer and Rational need no state;
// MultiPoly carries its variable count so that 0x0 determinants and filled
// matrices produce elements of the right arity.

#include <concepts>
#include <cstddef>
#include <string_view>

#include <Eigen/Core>

#include "vdet/exact_arith.hpp"
#include "vdet/multipoly.hpp"

namespace vdet {

template <class R>
concept ExactRing = std::regular<R> && requires(const R a, const R b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { exact_div(a, b) } -> std::convertible_to<R>;
    { is_zero(a) } -> std::same_as<bool>;
    { to_string(a) } -> std::convertible_to<std::string>;
};

template <class R>
struct Ring;

template <>
struct Ring<Integer> {
    static constexpr std::string_view name = "int";
    Integer zero() const { return Integer(0); }
    Integer one() const { return Integer(1); }
    Integer constant(const Integer& c) const { return c; }
    bool operator==(const Ring&) const = default;
};

template <>
struct Ring<Rational> {
    static constexpr std::string_view name = "rat";
    Rational zero() const { return Rational(0); }
    Rational one() const { return Rational(1); }
    Rational constant(const Integer& c) const { return Rational(c); }
    bool operator==(const Ring&) const = default;
};

template <>
struct Ring<MultiPoly> {
    static constexpr std::string_view name = "poly";
    std::size_t variable_count = 0;

    MultiPoly zero() const { return MultiPoly(variable_count); }
    MultiPoly one() const { return MultiPoly::constant(Integer(1), variable_count); }
    MultiPoly constant(const Integer& c) const { return MultiPoly::constant(c, variable_count); }
    /// X_index, 1-based.
    MultiPoly variable(std::size_t index) const { return MultiPoly::variable(index, variable_count); }
    bool operator==(const Ring&) const = default;
};

using IntegerRing = Ring<Integer>;
using RationalRing = Ring<Rational>;
using PolyRing = Ring<MultiPoly>;

template <ExactRing R>
R ring_pow(const R& base, unsigned long exponent, const Ring<R>& ring)
{
    if (exponent == 0) {
        return ring.one();
    }
    return pow(base, exponent);
}

} // namespace vdet

namespace Eigen {

template <>
struct NumTraits<vdet::Integer> : GenericNumTraits<vdet::Integer> {
    using Real = vdet::Integer;
    using NonInteger = vdet::Rational;
    using Literal = vdet::Integer;
    using Nested = vdet::Integer;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 4,
        MulCost = 8,
    };
};

template <>
struct NumTraits<vdet::Rational> : GenericNumTraits<vdet::Rational> {
    using Real = vdet::Rational;
    using NonInteger = vdet::Rational;
    using Literal = vdet::Rational;
    using Nested = vdet::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 8,
        MulCost = 16,
    };
};

template <>
struct NumTraits<vdet::MultiPoly> : GenericNumTraits<vdet::MultiPoly> {
    using Real = vdet::MultiPoly;
    using NonInteger = vdet::MultiPoly;
    using Literal = vdet::MultiPoly;
    using Nested = vdet::MultiPoly;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 32,
        MulCost = 128,
    };
};

} // namespace Eigen
