#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vdet/exact_arith.hpp"

namespace vdet {

/// Exponent vector X_1^e_1 ... X_m^e_m; its length is the ring's variable count.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t variable_count) : exponents_(variable_count, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exponents);

    std::size_t variable_count() const { return exponents_.size(); }
    std::uint64_t degree() const { return degree_; }
    std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exponents_; }

    bool divides(const Monomial& other) const;
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Requires b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents_ == b.exponents_; }

private:
    std::vector<std::uint32_t> exponents_;
    std::uint64_t degree_ = 0;
};

/// Graded-lex "greater": higher total degree first, ties broken lexicographically
/// with X1 > X2 > ... . Used as the map order so iteration starts at the leading term.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial over Integer in X_1..X_m with a fixed variable count.
/// Zero coefficients are never stored, so equal polynomials have identical term maps.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Integer, GrlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(std::size_t variable_count) : variable_count_(variable_count) {}

    static MultiPoly constant(const Integer& c, std::size_t variable_count);
    /// The indeterminate X_index, 1-based; throws ShapeError when index is outside 1..variable_count.
    static MultiPoly variable(std::size_t index, std::size_t variable_count);
    /// Builds from (exponents, coefficient) pairs; duplicates are summed, zeros dropped.
    static MultiPoly from_terms(std::size_t variable_count,
                                const std::vector<std::pair<std::vector<std::uint32_t>, Integer>>& terms);

    std::size_t variable_count() const { return variable_count_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    long degree() const;
    const std::pair<const Monomial, Integer>& leading_term() const;

    /// Terms in graded-lex order, e.g. "3*X1^2*X2 - 1".
    std::string to_string() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);

private:
    void require_same_ring(const MultiPoly& other, const char* op) const;
    void add_term(const Monomial& mono, const Integer& coeff);

    std::size_t variable_count_ = 0;
    TermMap terms_;
};

/// Exact quotient by multivariate division under graded-lex leading terms.
/// Throws ArithmeticError when b is zero or leaves a nonzero remainder.
MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);
MultiPoly pow(const MultiPoly& base, unsigned long exponent);
/// Substitutes X_i := point[i - 1]; throws ShapeError on a length mismatch.
Rational eval(const MultiPoly& p, std::span<const Rational> point);
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
std::ostream& operator<<(std::ostream& os, const MultiPoly& p);
inline std::string to_string(const MultiPoly& p) { return p.to_string(); }
std::uint64_t hash_value(const MultiPoly& p);

} // namespace vdet
