#pragma once

// Certificate-producing reductions for the four families.
//
// Every engine drives a Reducer, which applies elementary operations one at a
// time and books their determinant multipliers. The result is a certificate
//
//     det(original) = sign * prod(factors) * det(residual)
//
// plus a trace holding one stage per operation. Engines reduce all the way to
// the 0x0 matrix, so the certificate total is the determinant itself.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vdet/errors.hpp"
#include "vdet/families.hpp"
#include "vdet/matrix.hpp"

namespace vdet {

template <class R>
struct ExtractedFactor {
    R value;
    std::string label;
};

template <class R>
struct FactorCertificate {
    int sign = 1;
    std::vector<ExtractedFactor<R>> factors;
    Matrix<R> residual;
};

template <class R>
struct TraceStage {
    std::string label; ///< intermediate matrix name, e.g. "A^(3)" or "A^⟨2⟩"
    long level = 0;    ///< engine-specific recursion index (block count, pivot, l, ...)
    ElementaryOp<R> op;
    std::optional<R> factor; ///< multiplier extracted by this op, when not one
    int sign_delta = 1;
    Index rows = 0;
    Index cols = 0;
    std::optional<Matrix<R>> snapshot; ///< matrix after the op, when small enough
    std::uint64_t fingerprint = 0;     ///< of the matrix after the op, when not snapshotted
    int sign = 1;                      ///< certificate sign after this stage
    std::size_t factor_count = 0;      ///< certificate factors after this stage
};

template <class R>
struct ReductionTrace {
    Matrix<R> original;
    std::vector<TraceStage<R>> stages;
};

template <class R>
struct Reduction {
    FactorCertificate<R> certificate;
    ReductionTrace<R> trace;
};

struct TraceOptions {
    Index snapshot_limit = 8; ///< snapshot matrices with max(rows, cols) at most this
    bool full_snapshots = false;
};

template <ExactRing R>
class Reducer {
public:
    Reducer(Matrix<R> original, Ring<R> ring, TraceOptions options = {})
        : ring_(std::move(ring)), options_(options), current_(original)
    {
        trace_.original = std::move(original);
    }

    const Matrix<R>& current() const { return current_; }
    const Ring<R>& ring() const { return ring_; }

    void step(const std::string& label, long level, ElementaryOp<R> op)
    {
        OpEffect<R> applied = apply_op_in_place(current_, op);
        sign_ *= applied.sign;
        std::optional<R> factor;
        if (applied.factor && !(*applied.factor == ring_.one())) {
            factor = *applied.factor;
            factors_.push_back({*applied.factor, label});
        }

        TraceStage<R> stage{label, level, std::move(op), std::move(factor), applied.sign, current_.rows(),
                            current_.cols(), std::nullopt, 0, sign_, factors_.size()};
        if (options_.full_snapshots || std::max(current_.rows(), current_.cols()) <= options_.snapshot_limit) {
            stage.snapshot = current_;
        } else {
            stage.fingerprint = fingerprint(current_);
        }
        trace_.stages.push_back(std::move(stage));
    }

    Reduction<R> finish() &&
    {
        return {FactorCertificate<R>{sign_, std::move(factors_), std::move(current_)}, std::move(trace_)};
    }

private:
    Ring<R> ring_;
    TraceOptions options_;
    Matrix<R> current_;
    int sign_ = 1;
    std::vector<ExtractedFactor<R>> factors_;
    ReductionTrace<R> trace_;
};

/// sign * prod(factors); the determinant itself once the residual is 0x0.
template <ExactRing R>
R certificate_total(const FactorCertificate<R>& cert, const Ring<R>& ring)
{
    R total = ring.one();
    for (const auto& f : cert.factors) {
        total = total * f.value;
    }
    return cert.sign < 0 ? -total : total;
}

/// sign * prod(factors) * det_bareiss(residual) == det_bareiss(original).
template <ExactRing R>
bool check_certificate(const FactorCertificate<R>& cert, const Matrix<R>& original, const Ring<R>& ring)
{
    if (cert.residual.rows() != cert.residual.cols()) {
        throw ShapeError("certificate residual is not square");
    }
    return certificate_total(cert, ring) * det_bareiss(cert.residual, ring) == det_bareiss(original, ring);
}

/// Certificate validity at every stage that kept a snapshot. Returns the number
/// of stages checked, or nullopt if some stage fails.
template <ExactRing R>
std::optional<std::size_t> check_prefixes(const Reduction<R>& reduction, const Ring<R>& ring)
{
    const R expected = det_bareiss(reduction.trace.original, ring);
    std::size_t checked = 0;
    for (const auto& stage : reduction.trace.stages) {
        if (!stage.snapshot) {
            continue;
        }
        FactorCertificate<R> prefix{stage.sign,
                                    {reduction.certificate.factors.begin(),
                                     reduction.certificate.factors.begin()
                                         + static_cast<std::ptrdiff_t>(stage.factor_count)},
                                    *stage.snapshot};
        if (!(certificate_total(prefix, ring) * det_bareiss(*stage.snapshot, ring) == expected)) {
            return std::nullopt;
        }
        ++checked;
    }
    return checked;
}

/// Re-applies every recorded op from the original and compares each result
/// with the stage's snapshot or fingerprint and its shape and sign.
template <ExactRing R>
bool replay_trace(const ReductionTrace<R>& trace)
{
    Matrix<R> cur = trace.original;
    int sign = 1;
    for (const auto& stage : trace.stages) {
        const OpEffect<R> applied = apply_op_in_place(cur, stage.op);
        sign *= applied.sign;
        if (applied.sign != stage.sign_delta || sign != stage.sign || cur.rows() != stage.rows
            || cur.cols() != stage.cols) {
            return false;
        }
        if (stage.snapshot ? !equal(cur, *stage.snapshot) : fingerprint(cur) != stage.fingerprint) {
            return false;
        }
    }
    return true;
}

namespace detail {

template <ExactRing R>
void require_generic(std::span<const R> xs, const char* engine)
{
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (is_zero(xs[i])) {
            throw ReductionError(std::string(engine) + ": X" + std::to_string(i + 1) + " is zero");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (xs[i] == xs[j]) {
                throw ReductionError(std::string(engine) + ": X" + std::to_string(j + 1) + " and X"
                                     + std::to_string(i + 1) + " coincide");
            }
        }
    }
}

template <ExactRing R>
void sweep_columns(Reducer<R>& red, const std::string& label, long level, const R& scale)
{
    for (Index c = red.current().cols() - 1; c >= 1; --c) {
        red.step(label, level, AddScaledColumn<R>{c - 1, c, scale});
    }
}

template <ExactRing R>
void power_derivative_levels(Reducer<R>& red, std::span<const R> xs)
{
    for (std::size_t p = 0; p < xs.size(); ++p) {
        const Index k = static_cast<Index>(xs.size() - p);
        const long level = static_cast<long>(k);
        const R& x1 = xs[p];
        auto x = [&](Index i) -> const R& { return xs[p + static_cast<std::size_t>(i)]; };

        sweep_columns(red, "A^(1)", level, R(-x1));
        red.step("A^(2)", level, DeleteRowCol{0, 0});
        if (k > 1) {
            red.step("A^(3)", level, MoveRow{k - 1, 0});
        }
        for (Index i = 1; i < k; ++i) {
            red.step("A^(4)", level, FactorOutRow<R>{i, x(i) - x1});
        }
        for (Index i = 1; i < k; ++i) {
            red.step("A^(5)", level, AddScaledRow<R>{i, k - 1 + i, -x(i)});
            red.step("A^(5)", level, FactorOutRow<R>{k - 1 + i, x(i) - x1});
        }
        sweep_columns(red, "A^(6)", level, R(-x1));
        red.step("A^(7)", level, DeleteRowCol{0, 0});
        for (Index i = 1; i < k; ++i) {
            red.step("A^(8)", level, FactorOutRow<R>{i - 1, x(i) - x1});
            red.step("A^(8)", level, AddScaledRow<R>{i - 1, k - 2 + i, -x(i)});
            red.step("A^(8)", level, FactorOutRow<R>{k - 2 + i, x(i) - x1});
        }
    }
}

} // namespace detail

/// Power-derivative family on xs, one inductive step per variable: sweep by X1,
/// expose and drop a unit row, move the X1 derivative row to the top, factor
/// (Xi - X1) twice from each remaining variable, sweep again and extract X1.
template <ExactRing R>
Reduction<R> reduce_power_derivative(std::span<const R> xs, const Ring<R>& ring, TraceOptions options = {})
{
    if (xs.empty()) {
        throw ReductionError("reduce_power_derivative needs m ≥ 1");
    }
    detail::require_generic(xs, "reduce_power_derivative");
    FamilySpec spec{FamilyKind::PowerDerivative, static_cast<long>(xs.size()), 0, 0, Symbolic{}};
    Reducer<R> red(build_matrix(spec, xs, ring), ring, options);
    detail::power_derivative_levels(red, xs);
    return std::move(red).finish();
}

/// Shifted family: factor X_i^2 from the value rows and X_i from the derivative
/// rows, subtract to reach the plain family, then reduce that.
template <ExactRing R>
Reduction<R> reduce_shifted(std::span<const R> xs, const Ring<R>& ring, TraceOptions options = {})
{
    if (xs.empty()) {
        throw ReductionError("reduce_shifted needs m ≥ 1");
    }
    detail::require_generic(xs, "reduce_shifted");
    const Index m = static_cast<Index>(xs.size());
    FamilySpec spec{FamilyKind::PowerDerivativeShifted, static_cast<long>(m), 0, 0, Symbolic{}};
    Reducer<R> red(build_matrix(spec, xs, ring), ring, options);
    for (Index i = 0; i < m; ++i) {
        red.step("A_1^(1)", 0, FactorOutRow<R>{i, xs[i] * xs[i]});
    }
    for (Index i = 0; i < m; ++i) {
        red.step("A_2^(1)", 0, FactorOutRow<R>{m + i, xs[i]});
    }
    for (Index i = 0; i < m; ++i) {
        red.step("A_2^(2)", 0, AddScaledRow<R>{i, m + i, -ring.one()});
    }
    detail::power_derivative_levels(red, xs);
    return std::move(red).finish();
}

/// Mid-reduction binomial-power matrix: blocks of rows C(n+j-1, k-1) * x^(j-1).
template <class R>
struct BinomialState {
    Matrix<R> matrix;
    std::vector<BinomialBlock> blocks;
    std::vector<R> xs;
    long n = 0;
};

template <ExactRing R>
BinomialState<R> binomial_state(std::span<const R> xs, long n, long l, const Ring<R>& ring)
{
    FamilySpec spec{FamilyKind::BinomialPower, static_cast<long>(xs.size()), n, l, Symbolic{}};
    BinomialState<R> state{build_matrix(spec, xs, ring), {}, {xs.begin(), xs.end()}, n};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        state.blocks.push_back({i, static_cast<Index>(l)});
    }
    return state;
}

/// The matrix a state should hold if every block is in canonical form.
template <ExactRing R>
Matrix<R> canonical_matrix(const BinomialState<R>& state, const Ring<R>& ring)
{
    return build_binomial_blocks<R>(state.blocks, state.xs, state.n, state.matrix.cols(), ring);
}

namespace detail {

/// One unit-row elimination round at blocks[pivot]; updates the bookkeeping.
template <ExactRing R>
void binomial_round(Reducer<R>& red, std::vector<BinomialBlock>& blocks, std::size_t pivot,
                    std::span<const R> xs, const std::string& label, long level)
{
    if (pivot >= blocks.size() || blocks[pivot].rows == 0) {
        throw ReductionError("binomial round needs a nonempty pivot block");
    }
    Index offset = 0;
    for (std::size_t b = 0; b < pivot; ++b) {
        offset += blocks[b].rows;
    }
    const R& xp = xs[blocks[pivot].variable];

    sweep_columns(red, label, level, R(-xp));
    red.step(label, level, DeleteRowCol{offset, 0});
    blocks[pivot].rows -= 1;

    Index row = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const R& xb = xs[blocks[b].variable];
        for (Index k = 0; k < blocks[b].rows; ++k) {
            if (b == pivot) {
                red.step(label, level, FactorOutRow<R>{row + k, xp});
                continue;
            }
            if (k > 0) {
                red.step(label, level, AddScaledRow<R>{row + k - 1, row + k, -xb});
            }
            red.step(label, level, FactorOutRow<R>{row + k, xb - xp});
        }
        row += blocks[b].rows;
    }
    std::erase_if(blocks, [](const BinomialBlock& b) { return b.rows == 0; });
}

} // namespace detail

template <class R>
struct BlockRound {
    BinomialState<R> state;
    int sign = 1;
    std::vector<R> factors;
};

/// One round on a standalone state: sweep by the pivot block's variable, drop
/// the unit row and first column, and factor every surviving row back into
/// canonical form. Blocks that run out of rows are removed.
template <ExactRing R>
BlockRound<R> reduce_binomial_block_round(const BinomialState<R>& state, std::size_t pivot, const Ring<R>& ring)
{
    Reducer<R> red(state.matrix, ring, TraceOptions{0, false});
    std::vector<BinomialBlock> blocks = state.blocks;
    detail::binomial_round(red, blocks, pivot, std::span<const R>(state.xs), "A^⟨1⟩", 1);
    Reduction<R> done = std::move(red).finish();
    BlockRound<R> out{{std::move(done.certificate.residual), std::move(blocks), state.xs, state.n},
                      done.certificate.sign,
                      {}};
    for (auto& f : done.certificate.factors) {
        out.factors.push_back(std::move(f.value));
    }
    return out;
}

/// Induction on the number of blocks: l rounds at the first block remove it,
/// extracting X1^(l(l-1)/2) and (Xi - X1)^(l^2); repeat on the rest.
template <ExactRing R>
Reduction<R> reduce_binomial_induction_m(std::span<const R> xs, long n, long l, const Ring<R>& ring,
                                         TraceOptions options = {})
{
    validate(FamilySpec{FamilyKind::BinomialPower, static_cast<long>(xs.size()), n, l, Symbolic{}});
    detail::require_generic(xs, "reduce_binomial_induction_m");
    BinomialState<R> state = binomial_state(xs, n, l, ring);
    Reducer<R> red(state.matrix, ring, options);
    std::vector<BinomialBlock> blocks = state.blocks;
    for (std::size_t p = 0; p < xs.size(); ++p) {
        for (long j = 1; j <= l; ++j) {
            detail::binomial_round(red, blocks, 0, xs, "A^⟨" + std::to_string(j) + "⟩", static_cast<long>(p + 1));
        }
    }
    return std::move(red).finish();
}

/// Induction on l: one round per block in order, each removing one row from
/// that block, leaves the same family with l - 1; repeat down to l = 0.
template <ExactRing R>
Reduction<R> reduce_binomial_induction_l(std::span<const R> xs, long n, long l, const Ring<R>& ring,
                                         TraceOptions options = {})
{
    validate(FamilySpec{FamilyKind::BinomialPower, static_cast<long>(xs.size()), n, l, Symbolic{}});
    detail::require_generic(xs, "reduce_binomial_induction_l");
    BinomialState<R> state = binomial_state(xs, n, l, ring);
    Reducer<R> red(state.matrix, ring, options);
    std::vector<BinomialBlock> blocks = state.blocks;
    for (long level = l; level >= 1; --level) {
        // Blocks that are already done this level sit before the pivot, so the
        // pivot is always at position j - 1 while any block keeps rows.
        const std::size_t count = blocks.size();
        for (std::size_t j = 0; j < count; ++j) {
            const std::size_t pivot = level == 1 ? 0 : j;
            detail::binomial_round(red, blocks, pivot, xs, "A^⟨" + std::to_string(j + 1) + "⟩", level);
        }
    }
    return std::move(red).finish();
}

/// Pascal matrix [C(n+j-1, i-1)]: adjacent column differences expose a unit
/// first row; dropping it leaves the m-1 matrix for the same n.
inline Reduction<Rational> reduce_pascal(long n, long m, TraceOptions options = {})
{
    const FamilySpec spec{FamilyKind::BinomialPascal, m, n, 0, Symbolic{}};
    validate(spec);
    const RationalRing ring{};
    Reducer<Rational> red(build_matrix<Rational>(spec, {}, ring), ring, options);
    for (long s = m; s >= 1; --s) {
        const std::string label = "A_{n," + std::to_string(s - 1) + "}";
        detail::sweep_columns(red, label, s, Rational(-1));
        red.step(label, s, DeleteRowCol{0, 0});
    }
    return std::move(red).finish();
}

// --- spec-level entry points ----------------------------------------------------

enum class Engine { PowerDerivative, Shifted, BinomialByBlock, BinomialByRow, Pascal };

/// CLI names: thm1, cor2, thm3-m, thm3-l, pascal.
std::string_view to_string(Engine engine);
Engine parse_engine(std::string_view text);
/// The family an engine reduces.
FamilyKind engine_family(Engine engine);
/// Engines applicable to a family, in a fixed order.
std::vector<Engine> engines_for(FamilyKind kind);

using AnyReduction = std::variant<Reduction<Rational>, Reduction<MultiPoly>>;

/// Runs `engine` on the family described by spec (Symbolic or numeric).
/// Throws SpecError if the engine does not apply to spec.kind.
AnyReduction reduce(const FamilySpec& spec, Engine engine, TraceOptions options = {});

struct CertificateReport {
    bool valid = false;             ///< check_certificate against the built matrix
    bool residual_empty = false;    ///< residual is 0x0
    bool matches_closed_form = false;
    std::string total;              ///< sign * prod(factors), rendered
    std::optional<std::size_t> prefixes_checked; ///< set when prefix checking was requested and passed
    bool prefixes_valid = true;
};

CertificateReport check_reduction(const FamilySpec& spec, const AnyReduction& reduction, bool check_prefix_stages);

} // namespace vdet
