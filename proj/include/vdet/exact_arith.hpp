#pragma once

// Arbitrary-precision integers and rationals over GMP, plus exact binomials.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace vdet {

class Rational;

class Integer {
public:
    Integer() = default;
    Integer(long value) : value_(value) {}              // NOLINT: implicit by design of literals
    explicit Integer(const mpz_class& value) : value_(value) {}

    /// Parses an optionally signed decimal string; throws std::invalid_argument.
    static Integer parse(std::string_view text);

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool fits_long() const { return value_.fits_slong_p(); }
    long to_long() const;

    std::string to_string() const { return value_.get_str(10); }
    const mpz_class& raw() const { return value_; }

    Integer operator-() const { return Integer(mpz_class(-value_)); }
    Integer& operator+=(const Integer& rhs) { value_ += rhs.value_; return *this; }
    Integer& operator-=(const Integer& rhs) { value_ -= rhs.value_; return *this; }
    Integer& operator*=(const Integer& rhs) { value_ *= rhs.value_; return *this; }

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

    friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b)
    {
        return cmp(a.value_, b.value_) <=> 0;
    }

private:
    mpz_class value_;
};

/// Exact quotient; throws ArithmeticError on a zero divisor or a nonzero remainder.
Integer exact_div(const Integer& a, const Integer& b);
/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);
Integer abs(const Integer& a);
Integer pow(const Integer& base, unsigned long exponent);
inline bool is_zero(const Integer& a) { return a.is_zero(); }
std::ostream& operator<<(std::ostream& os, const Integer& a);
inline std::string to_string(const Integer& a) { return a.to_string(); }

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value)
{
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}
/// Hash of the value over its limbs; equal values hash equally.
std::uint64_t hash_value(const Integer& a);

/// Reduced fraction with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}             // NOLINT
    Rational(const Integer& value) : value_(value.raw()) {} // NOLINT
    /// Throws ArithmeticError when denominator is zero.
    Rational(const Integer& numerator, const Integer& denominator);

    /// Accepts "p" or "p/q" with optional sign on p (and on q, normalized away).
    static Rational parse(std::string_view text);

    Integer numerator() const { return Integer(mpz_class(value_.get_num())); }
    Integer denominator() const { return Integer(mpz_class(value_.get_den())); }
    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// "p/q", or just "p" when the denominator is one.
    std::string to_string() const;
    const mpq_class& raw() const { return value_; }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        return cmp(a.value_, b.value_) <=> 0;
    }

private:
    explicit Rational(const mpq_class& value) : value_(value) {}
    friend Rational exact_div(const Rational& a, const Rational& b);
    friend Rational pow(const Rational& base, unsigned long exponent);

    mpq_class value_;
};

/// Field division; throws ArithmeticError on a zero divisor.
Rational exact_div(const Rational& a, const Rational& b);
Rational pow(const Rational& base, unsigned long exponent);
inline bool is_zero(const Rational& a) { return a.is_zero(); }
std::ostream& operator<<(std::ostream& os, const Rational& a);
inline std::string to_string(const Rational& a) { return a.to_string(); }
std::uint64_t hash_value(const Rational& a);

/// C(n, k) by the multiplicative formula with running exact division.
/// Returns 0 for k < 0 or k > n; throws std::invalid_argument for n < 0.
Integer binomial(const Integer& n, const Integer& k);
Integer binomial(long n, long k);

} // namespace vdet
