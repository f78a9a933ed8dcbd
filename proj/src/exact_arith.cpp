#include "vdet/exact_arith.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

#include "vdet/errors.hpp"

namespace vdet {

namespace {

bool is_decimal(std::string_view text)
{
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        text.remove_prefix(1);
    }
    return !text.empty()
           && std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

Integer Integer::parse(std::string_view text)
{
    if (!is_decimal(text)) {
        throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    }
    if (text.front() == '+') {
        text.remove_prefix(1);
    }
    return Integer(mpz_class(std::string(text), 10));
}

long Integer::to_long() const
{
    if (!fits_long()) {
        throw std::overflow_error("integer does not fit in a machine word: " + to_string());
    }
    return value_.get_si();
}

Integer exact_div(const Integer& a, const Integer& b)
{
    if (b.is_zero()) {
        throw ArithmeticError("integer division by zero");
    }
    if (!mpz_divisible_p(a.raw().get_mpz_t(), b.raw().get_mpz_t())) {
        throw ArithmeticError("inexact integer division: " + a.to_string() + " / " + b.to_string());
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(q);
}

Integer gcd(const Integer& a, const Integer& b)
{
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
    return Integer(g);
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer pow(const Integer& base, unsigned long exponent)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exponent);
    return Integer(r);
}

std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.to_string(); }

std::uint64_t hash_value(const Integer& a)
{
    const mpz_srcptr z = a.raw().get_mpz_t();
    std::uint64_t h = hash_combine(0, static_cast<std::uint64_t>(z->_mp_size));
    const std::size_t limbs = mpz_size(z);
    for (std::size_t i = 0; i < limbs; ++i) {
        h = hash_combine(h, static_cast<std::uint64_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))));
    }
    return h;
}

Rational::Rational(const Integer& numerator, const Integer& denominator)
{
    if (denominator.is_zero()) {
        throw ArithmeticError("rational with zero denominator");
    }
    value_ = mpq_class(numerator.raw(), denominator.raw());
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(Integer::parse(text));
    }
    return Rational(Integer::parse(text.substr(0, slash)), Integer::parse(text.substr(slash + 1)));
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return value_.get_num().get_str(10);
    }
    return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Rational exact_div(const Rational& a, const Rational& b)
{
    if (b.is_zero()) {
        throw ArithmeticError("rational division by zero");
    }
    return Rational(mpq_class(a.value_ / b.value_));
}

Rational pow(const Rational& base, unsigned long exponent)
{
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.value_.get_num().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.value_.get_den().get_mpz_t(), exponent);
    // Powers of coprime parts stay coprime, so no canonicalize is needed.
    mpq_class r;
    mpq_set_num(r.get_mpq_t(), num.get_mpz_t());
    mpq_set_den(r.get_mpq_t(), den.get_mpz_t());
    return Rational(r);
}

std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.to_string(); }

std::uint64_t hash_value(const Rational& a)
{
    return hash_combine(hash_value(Integer(mpz_class(a.raw().get_num()))),
                        hash_value(Integer(mpz_class(a.raw().get_den()))));
}

Integer binomial(const Integer& n, const Integer& k)
{
    if (n.sign() < 0) {
        throw std::invalid_argument("binomial requires n >= 0, got " + n.to_string());
    }
    if (k.sign() < 0 || k > n) {
        return Integer(0);
    }
    Integer kk = std::min(k, n - k);
    if (!kk.fits_long()) {
        throw std::overflow_error("binomial lower index too large: " + kk.to_string());
    }
    const long steps = kk.to_long();
    const Integer base = n - kk;
    Integer result(1);
    for (long i = 1; i <= steps; ++i) {
        // result = C(base + i - 1, i - 1) here, so the division below is exact.
        result = exact_div(result * (base + Integer(i)), Integer(i));
    }
    return result;
}

Integer binomial(long n, long k) { return binomial(Integer(n), Integer(k)); }

} // namespace vdet
