#include "vdet/multipoly.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

#include "vdet/errors.hpp"

namespace vdet {

Monomial::Monomial(std::vector<std::uint32_t> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0}))
{
}

bool Monomial::divides(const Monomial& other) const
{
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] > other.exponents_[i]) {
            return false;
        }
    }
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    for (std::size_t i = 0; i < r.exponents_.size(); ++i) {
        r.exponents_[i] += b.exponents_[i];
    }
    r.degree_ += b.degree_;
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    for (std::size_t i = 0; i < r.exponents_.size(); ++i) {
        r.exponents_[i] -= b.exponents_[i];
    }
    r.degree_ -= b.degree_;
    return r;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const
{
    if (a.degree() != b.degree()) {
        return a.degree() > b.degree();
    }
    return a.exponents() > b.exponents();
}

MultiPoly MultiPoly::constant(const Integer& c, std::size_t variable_count)
{
    MultiPoly p(variable_count);
    if (!c.is_zero()) {
        p.terms_.emplace(Monomial(variable_count), c);
    }
    return p;
}

MultiPoly MultiPoly::variable(std::size_t index, std::size_t variable_count)
{
    if (index < 1 || index > variable_count) {
        throw ShapeError("variable index X" + std::to_string(index) + " outside 1.."
                         + std::to_string(variable_count));
    }
    std::vector<std::uint32_t> e(variable_count, 0);
    e[index - 1] = 1;
    MultiPoly p(variable_count);
    p.terms_.emplace(Monomial(std::move(e)), Integer(1));
    return p;
}

MultiPoly MultiPoly::from_terms(std::size_t variable_count,
                                const std::vector<std::pair<std::vector<std::uint32_t>, Integer>>& terms)
{
    MultiPoly p(variable_count);
    for (const auto& [exps, coeff] : terms) {
        if (exps.size() != variable_count) {
            throw ShapeError("exponent vector length " + std::to_string(exps.size())
                             + " does not match variable count " + std::to_string(variable_count));
        }
        p.add_term(Monomial(exps), coeff);
    }
    return p;
}

long MultiPoly::degree() const
{
    return terms_.empty() ? -1 : static_cast<long>(terms_.begin()->first.degree());
}

const std::pair<const Monomial, Integer>& MultiPoly::leading_term() const
{
    if (terms_.empty()) {
        throw ArithmeticError("leading term of the zero polynomial");
    }
    return *terms_.begin();
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        Integer mag = abs(coeff);
        if (first) {
            if (coeff.sign() < 0) {
                os << '-';
            }
        } else {
            os << (coeff.sign() < 0 ? " - " : " + ");
        }
        first = false;

        bool wrote = false;
        if (mono.degree() == 0 || mag != Integer(1)) {
            os << mag;
            wrote = true;
        }
        for (std::size_t i = 0; i < mono.variable_count(); ++i) {
            if (mono[i] == 0) {
                continue;
            }
            if (wrote) {
                os << '*';
            }
            os << 'X' << (i + 1);
            if (mono[i] > 1) {
                os << '^' << mono[i];
            }
            wrote = true;
        }
    }
    return os.str();
}

void MultiPoly::require_same_ring(const MultiPoly& other, const char* op) const
{
    if (variable_count_ != other.variable_count_) {
        throw ShapeError(std::string("polynomial ") + op + " with mismatched variable counts "
                         + std::to_string(variable_count_) + " and " + std::to_string(other.variable_count_));
    }
}

void MultiPoly::add_term(const Monomial& mono, const Integer& coeff)
{
    if (coeff.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto& [mono, coeff] : r.terms_) {
        coeff = -coeff;
    }
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs)
{
    require_same_ring(rhs, "addition");
    for (const auto& [mono, coeff] : rhs.terms_) {
        add_term(mono, coeff);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs)
{
    require_same_ring(rhs, "subtraction");
    for (const auto& [mono, coeff] : rhs.terms_) {
        add_term(mono, -coeff);
    }
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs)
{
    *this = *this * rhs;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    a.require_same_ring(b, "multiplication");
    MultiPoly r(a.variable_count_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            r.add_term(ma * mb, ca * cb);
        }
    }
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b)
{
    return a.variable_count_ == b.variable_count_ && a.terms_ == b.terms_;
}

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b)
{
    if (a.variable_count() != b.variable_count()) {
        throw ShapeError("polynomial division with mismatched variable counts");
    }
    if (b.is_zero()) {
        throw ArithmeticError("polynomial division by zero");
    }
    const auto& [lead_mono, lead_coeff] = b.leading_term();
    MultiPoly quotient(a.variable_count());
    MultiPoly rest = a;
    while (!rest.is_zero()) {
        const auto& [mono, coeff] = rest.leading_term();
        if (!lead_mono.divides(mono)) {
            throw ArithmeticError("inexact polynomial division: (" + a.to_string() + ") / (" + b.to_string() + ")");
        }
        Integer c;
        try {
            c = exact_div(coeff, lead_coeff);
        } catch (const ArithmeticError&) {
            throw ArithmeticError("inexact polynomial division: (" + a.to_string() + ") / (" + b.to_string() + ")");
        }
        MultiPoly step(a.variable_count());
        step.terms_.emplace(mono / lead_mono, c);
        rest -= step * b;
        quotient += step;
    }
    return quotient;
}

MultiPoly pow(const MultiPoly& base, unsigned long exponent)
{
    MultiPoly result = MultiPoly::constant(Integer(1), base.variable_count());
    MultiPoly square = base;
    while (exponent > 0) {
        if (exponent & 1UL) {
            result *= square;
        }
        exponent >>= 1;
        if (exponent > 0) {
            square *= square;
        }
    }
    return result;
}

Rational eval(const MultiPoly& p, std::span<const Rational> point)
{
    if (point.size() != p.variable_count()) {
        throw ShapeError("evaluation point has " + std::to_string(point.size()) + " values for "
                         + std::to_string(p.variable_count()) + " variables");
    }
    Rational sum(0);
    for (const auto& [mono, coeff] : p.terms()) {
        Rational term(coeff);
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (mono[i] != 0) {
                term *= pow(point[i], mono[i]);
            }
        }
        sum += term;
    }
    return sum;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

std::uint64_t hash_value(const MultiPoly& p)
{
    std::uint64_t h = hash_combine(0, p.variable_count());
    for (const auto& [mono, coeff] : p.terms()) {
        for (std::uint32_t e : mono.exponents()) {
            h = hash_combine(h, e);
        }
        h = hash_combine(h, hash_value(coeff));
    }
    return h;
}

} // namespace vdet
