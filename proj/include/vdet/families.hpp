#pragma once

// The four structured matrix families and their product-formula determinants.
//
//   PowerDerivative         2m x 2m, rows X_i^(j-1) over rows j*X_i^(j-1)
//   PowerDerivativeShifted  2m x 2m, rows X_i^(j+1) over rows (j+1)*X_i^j
//   BinomialPower           ml x ml, m blocks of l rows C(n+j-1, k-1)*X_i^(j-1)
//   BinomialPascal          m x m, entries C(n+j-1, i-1)
//
// Blocks are stacked top to bottom in variable order; the sign of the closed
// forms depends on that layout.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vdet/errors.hpp"
#include "vdet/matrix.hpp"

namespace vdet {

enum class FamilyKind { PowerDerivative, PowerDerivativeShifted, BinomialPower, BinomialPascal };

std::string_view to_string(FamilyKind kind);
/// Accepts the canonical names plus short aliases (thm1, cor2, thm3, lemma4, pascal, ...).
FamilyKind parse_family_kind(std::string_view text);

struct Symbolic {
    bool operator==(const Symbolic&) const = default;
};

/// Either the indeterminates X_1..X_m, or concrete rational values for them.
using Assignment = std::variant<Symbolic, std::vector<Rational>>;

struct FamilySpec {
    FamilyKind kind = FamilyKind::PowerDerivative;
    long m = 1;
    long n = 0; ///< BinomialPower, BinomialPascal
    long l = 0; ///< BinomialPower
    Assignment assignment = Symbolic{};

    bool is_symbolic() const { return std::holds_alternative<Symbolic>(assignment); }
    bool operator==(const FamilySpec&) const = default;
};

/// Throws SpecError describing the first violated constraint.
void validate(const FamilySpec& spec);
Index matrix_size(const FamilySpec& spec);
/// Number of indeterminates the family uses (0 for BinomialPascal).
std::size_t variable_count(const FamilySpec& spec);
/// "PowerDerivative(m=2, X=(1, 2))" style label.
std::string describe(const FamilySpec& spec);

/// det = (-1)^sign_exponent * prod X_i^variable_power * prod_{i<j} (X_j - X_i)^difference_power
struct ClosedForm {
    long sign_exponent = 0;
    unsigned long variable_power = 0;
    unsigned long difference_power = 0;
    bool operator==(const ClosedForm&) const = default;
};

ClosedForm closed_form(const FamilySpec& spec);

/// One block of a binomial-power matrix: `rows` rows in variable xs[variable].
struct BinomialBlock {
    std::size_t variable = 0;
    Index rows = 0;
    bool operator==(const BinomialBlock&) const = default;
};

/// Blocks of rows C(n+j-1, k-1) * x^(j-1), k = 1..rows, j = 1..cols, stacked in order.
template <ExactRing R>
Matrix<R> build_binomial_blocks(std::span<const BinomialBlock> blocks, std::span<const R> xs, long n, Index cols,
                                const Ring<R>& ring)
{
    Index total = 0;
    for (const auto& b : blocks) {
        total += b.rows;
    }
    Matrix<R> a = zeros(total, cols, ring);
    Index row = 0;
    for (const auto& b : blocks) {
        R power = ring.one();
        for (Index j = 1; j <= cols; ++j) {
            for (Index k = 1; k <= b.rows; ++k) {
                const Integer c = binomial(n + static_cast<long>(j) - 1, static_cast<long>(k) - 1);
                a(row + k - 1, j - 1) = ring.constant(c) * power;
            }
            power = power * xs[b.variable];
        }
        row += b.rows;
    }
    return a;
}

/// The family's matrix with X_i := xs[i-1]. xs must hold variable_count(spec) values.
template <ExactRing R>
Matrix<R> build_matrix(const FamilySpec& spec, std::span<const R> xs, const Ring<R>& ring)
{
    validate(spec);
    if (xs.size() != variable_count(spec)) {
        throw SpecError("expected " + std::to_string(variable_count(spec)) + " variable values, got "
                        + std::to_string(xs.size()));
    }
    const Index m = static_cast<Index>(spec.m);
    switch (spec.kind) {
    case FamilyKind::PowerDerivative:
    case FamilyKind::PowerDerivativeShifted: {
        const bool shifted = spec.kind == FamilyKind::PowerDerivativeShifted;
        Matrix<R> a = zeros(2 * m, 2 * m, ring);
        for (Index i = 0; i < m; ++i) {
            // power = X_i^(j-1) for plain, X_i^j for shifted, at column j.
            R power = shifted ? xs[i] : ring.one();
            for (Index j = 1; j <= 2 * m; ++j) {
                if (shifted) {
                    a(i, j - 1) = power * xs[i];
                    a(m + i, j - 1) = ring.constant(Integer(static_cast<long>(j + 1))) * power;
                } else {
                    a(i, j - 1) = power;
                    a(m + i, j - 1) = ring.constant(Integer(static_cast<long>(j))) * power;
                }
                power = power * xs[i];
            }
        }
        return a;
    }
    case FamilyKind::BinomialPower: {
        std::vector<BinomialBlock> blocks;
        for (std::size_t i = 0; i < static_cast<std::size_t>(spec.m); ++i) {
            blocks.push_back({i, static_cast<Index>(spec.l)});
        }
        return build_binomial_blocks<R>(blocks, xs, spec.n, m * spec.l, ring);
    }
    case FamilyKind::BinomialPascal: {
        Matrix<R> a = zeros(m, m, ring);
        for (Index i = 1; i <= m; ++i) {
            for (Index j = 1; j <= m; ++j) {
                a(i - 1, j - 1) = ring.constant(binomial(spec.n + static_cast<long>(j) - 1, static_cast<long>(i) - 1));
            }
        }
        return a;
    }
    }
    throw SpecError("unknown family kind");
}

template <ExactRing R>
R evaluate_closed_form(const ClosedForm& form, std::span<const R> xs, const Ring<R>& ring)
{
    R value = ring.one();
    if (form.variable_power > 0) {
        for (const R& x : xs) {
            value = value * ring_pow(x, form.variable_power, ring);
        }
    }
    if (form.difference_power > 0) {
        for (std::size_t j = 0; j < xs.size(); ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                value = value * ring_pow(xs[j] - xs[i], form.difference_power, ring);
            }
        }
    }
    return (form.sign_exponent % 2 == 0) ? value : -value;
}

template <ExactRing R>
R closed_form_value(const FamilySpec& spec, std::span<const R> xs, const Ring<R>& ring)
{
    validate(spec);
    if (xs.size() != variable_count(spec)) {
        throw SpecError("expected " + std::to_string(variable_count(spec)) + " variable values, got "
                        + std::to_string(xs.size()));
    }
    return evaluate_closed_form(closed_form(spec), xs, ring);
}

/// X_1..X_count as polynomials in `count` variables.
std::vector<MultiPoly> indeterminates(std::size_t count);

using AnyMatrix = std::variant<Matrix<Rational>, Matrix<MultiPoly>>;
using AnyScalar = std::variant<Rational, MultiPoly>;

/// Polynomial matrix for Symbolic assignments, rational otherwise. BinomialPascal
/// has no indeterminates and is always built over the rationals.
AnyMatrix build(const FamilySpec& spec);
AnyScalar closed_form_det(const FamilySpec& spec);
std::string to_string(const AnyScalar& value);

struct SizeGuards {
    Index symbolic = 8;
    Index numeric = 40;
};

struct VerificationReport {
    FamilySpec spec;
    Index size = 0;
    std::string ring;
    std::string det_oracle;      ///< Bareiss on the built matrix
    std::string det_closed_form; ///< product formula
    bool equal = false;
};

/// Computes both sides independently and compares them exactly.
/// Throws SizeGuardError when the matrix exceeds the guard for its mode.
VerificationReport verify_identity(const FamilySpec& spec, const SizeGuards& guards = {});

} // namespace vdet
