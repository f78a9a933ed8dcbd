#pragma once

// Dense matrices over an exact ring, elementary operations that report how they
// change the determinant, and two independent determinant oracles.
//
// Matrices are plain Eigen objects over exact scalars. Every function here takes
// its input by const reference and returns a new matrix.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "vdet/errors.hpp"
#include "vdet/ring.hpp"

namespace vdet {

using Index = Eigen::Index;

template <class R>
using Matrix = Eigen::Matrix<R, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Largest size det_cofactor accepts.
inline constexpr Index kCofactorMaxSize = 6;

template <ExactRing R>
Matrix<R> filled(Index rows, Index cols, const R& value)
{
    Matrix<R> m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) {
            m(i, j) = value;
        }
    }
    return m;
}

template <ExactRing R>
Matrix<R> zeros(Index rows, Index cols, const Ring<R>& ring)
{
    return filled(rows, cols, ring.zero());
}

template <ExactRing R>
Matrix<R> identity(Index n, const Ring<R>& ring)
{
    Matrix<R> m = zeros(n, n, ring);
    for (Index i = 0; i < n; ++i) {
        m(i, i) = ring.one();
    }
    return m;
}

/// Row-by-row literal; throws ShapeError on ragged input.
template <ExactRing R>
Matrix<R> from_rows(const std::vector<std::vector<R>>& rows)
{
    const Index r = static_cast<Index>(rows.size());
    const Index c = r == 0 ? 0 : static_cast<Index>(rows.front().size());
    Matrix<R> m(r, c);
    for (Index i = 0; i < r; ++i) {
        if (static_cast<Index>(rows[i].size()) != c) {
            throw ShapeError("ragged matrix literal");
        }
        for (Index j = 0; j < c; ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

template <ExactRing R>
bool equal(const Matrix<R>& a, const Matrix<R>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            if (!(a(i, j) == b(i, j))) {
                return false;
            }
        }
    }
    return true;
}

// --- shape plumbing -------------------------------------------------------

namespace detail {

inline void check_index(Index i, Index bound, const char* what)
{
    if (i < 0 || i >= bound) {
        throw ShapeError(std::string(what) + " index " + std::to_string(i) + " outside 0.."
                         + std::to_string(bound - 1));
    }
}

template <class R>
void check_square(const Matrix<R>& m, const char* what)
{
    if (m.rows() != m.cols()) {
        throw ShapeError(std::string(what) + " needs a square matrix, got " + std::to_string(m.rows()) + "x"
                         + std::to_string(m.cols()));
    }
}

} // namespace detail

template <ExactRing R>
Matrix<R> delete_row(const Matrix<R>& m, Index row)
{
    detail::check_index(row, m.rows(), "row");
    Matrix<R> out(m.rows() - 1, m.cols());
    out.topRows(row) = m.topRows(row);
    out.bottomRows(m.rows() - row - 1) = m.bottomRows(m.rows() - row - 1);
    return out;
}

template <ExactRing R>
Matrix<R> delete_col(const Matrix<R>& m, Index col)
{
    detail::check_index(col, m.cols(), "column");
    Matrix<R> out(m.rows(), m.cols() - 1);
    out.leftCols(col) = m.leftCols(col);
    out.rightCols(m.cols() - col - 1) = m.rightCols(m.cols() - col - 1);
    return out;
}

/// Entries at the given row and column indices, in the order listed.
template <ExactRing R>
Matrix<R> submatrix(const Matrix<R>& m, std::span<const Index> rows, std::span<const Index> cols)
{
    Matrix<R> out(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        detail::check_index(rows[i], m.rows(), "row");
        for (std::size_t j = 0; j < cols.size(); ++j) {
            detail::check_index(cols[j], m.cols(), "column");
            out(static_cast<Index>(i), static_cast<Index>(j)) = m(rows[i], cols[j]);
        }
    }
    return out;
}

template <ExactRing R>
Matrix<R> transpose(const Matrix<R>& m)
{
    return m.transpose();
}

template <class R, class F>
auto map_entries(const Matrix<R>& m, F&& f) -> Matrix<std::decay_t<decltype(f(m(0, 0)))>>
{
    using S = std::decay_t<decltype(f(m(0, 0)))>;
    Matrix<S> out(m.rows(), m.cols());
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            out(i, j) = f(m(i, j));
        }
    }
    return out;
}

// --- elementary operations -----------------------------------------------

/// col[dst] += scale * col[src]
template <class R>
struct AddScaledColumn {
    Index src;
    Index dst;
    R scale;
};

/// row[dst] += scale * row[src]
template <class R>
struct AddScaledRow {
    Index src;
    Index dst;
    R scale;
};

/// row[row] /= factor, exactly.
template <class R>
struct FactorOutRow {
    Index row;
    R factor;
};

template <class R>
struct FactorOutColumn {
    Index col;
    R factor;
};

struct SwapRows {
    Index a;
    Index b;
};

/// Removes row `from` and reinserts it so that it ends up at index `to`.
struct MoveRow {
    Index from;
    Index to;
};

/// Laplace step on a row whose only possibly-nonzero entry sits in column `col`.
struct DeleteRowCol {
    Index row;
    Index col;
};

template <class R>
using ElementaryOp = std::variant<AddScaledColumn<R>, AddScaledRow<R>, FactorOutRow<R>, FactorOutColumn<R>,
                                  SwapRows, MoveRow, DeleteRowCol>;

/// det(before) = sign * factor * det(matrix), with an absent factor meaning one.
template <class R>
struct Applied {
    Matrix<R> matrix;
    int sign = 1;
    std::optional<R> factor;
};

namespace detail {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

inline int parity_sign(Index k) { return (k % 2 == 0) ? 1 : -1; }

template <class R>
R divide_entry(const R& entry, const R& factor, const char* what)
{
    try {
        return exact_div(entry, factor);
    } catch (const ArithmeticError&) {
        throw ArithmeticError(std::string(what) + ": factor " + to_string(factor) + " does not divide entry "
                              + to_string(entry));
    }
}

} // namespace detail

/// Multiplier bookkeeping of one op: det(before) = sign * factor * det(after).
template <class R>
struct OpEffect {
    int sign = 1;
    std::optional<R> factor;
};

/// Applies op to m in place. On error m is left unchanged.
template <ExactRing R>
OpEffect<R> apply_op_in_place(Matrix<R>& m, const ElementaryOp<R>& op)
{
    using detail::check_index;
    return std::visit(
        detail::overloaded{
            [&](const AddScaledColumn<R>& o) {
                check_index(o.src, m.cols(), "column");
                check_index(o.dst, m.cols(), "column");
                if (o.src == o.dst) {
                    throw ShapeError("AddScaledColumn needs distinct columns");
                }
                for (Index i = 0; i < m.rows(); ++i) {
                    if (!is_zero(m(i, o.src))) {
                        m(i, o.dst) = m(i, o.dst) + o.scale * m(i, o.src);
                    }
                }
                return OpEffect<R>{};
            },
            [&](const AddScaledRow<R>& o) {
                check_index(o.src, m.rows(), "row");
                check_index(o.dst, m.rows(), "row");
                if (o.src == o.dst) {
                    throw ShapeError("AddScaledRow needs distinct rows");
                }
                for (Index j = 0; j < m.cols(); ++j) {
                    if (!is_zero(m(o.src, j))) {
                        m(o.dst, j) = m(o.dst, j) + o.scale * m(o.src, j);
                    }
                }
                return OpEffect<R>{};
            },
            [&](const FactorOutRow<R>& o) {
                check_index(o.row, m.rows(), "row");
                if (is_zero(o.factor)) {
                    throw ArithmeticError("FactorOutRow by zero");
                }
                std::vector<R> divided;
                divided.reserve(static_cast<std::size_t>(m.cols()));
                for (Index j = 0; j < m.cols(); ++j) {
                    divided.push_back(detail::divide_entry(m(o.row, j), o.factor, "FactorOutRow"));
                }
                for (Index j = 0; j < m.cols(); ++j) {
                    m(o.row, j) = std::move(divided[static_cast<std::size_t>(j)]);
                }
                return OpEffect<R>{1, o.factor};
            },
            [&](const FactorOutColumn<R>& o) {
                check_index(o.col, m.cols(), "column");
                if (is_zero(o.factor)) {
                    throw ArithmeticError("FactorOutColumn by zero");
                }
                std::vector<R> divided;
                divided.reserve(static_cast<std::size_t>(m.rows()));
                for (Index i = 0; i < m.rows(); ++i) {
                    divided.push_back(detail::divide_entry(m(i, o.col), o.factor, "FactorOutColumn"));
                }
                for (Index i = 0; i < m.rows(); ++i) {
                    m(i, o.col) = std::move(divided[static_cast<std::size_t>(i)]);
                }
                return OpEffect<R>{1, o.factor};
            },
            [&](const SwapRows& o) {
                check_index(o.a, m.rows(), "row");
                check_index(o.b, m.rows(), "row");
                if (o.a != o.b) {
                    m.row(o.a).swap(m.row(o.b));
                }
                return OpEffect<R>{o.a == o.b ? 1 : -1, std::nullopt};
            },
            [&](const MoveRow& o) {
                check_index(o.from, m.rows(), "row");
                check_index(o.to, m.rows(), "row");
                const Index step = o.from < o.to ? 1 : -1;
                for (Index i = o.from; i != o.to; i += step) {
                    m.row(i).swap(m.row(i + step));
                }
                return OpEffect<R>{detail::parity_sign(o.from - o.to), std::nullopt};
            },
            [&](const DeleteRowCol& o) {
                check_index(o.row, m.rows(), "row");
                check_index(o.col, m.cols(), "column");
                detail::check_square(m, "DeleteRowCol");
                for (Index j = 0; j < m.cols(); ++j) {
                    if (j != o.col && !is_zero(m(o.row, j))) {
                        throw ShapeError("DeleteRowCol: row " + std::to_string(o.row)
                                         + " has a nonzero entry outside the pivot column");
                    }
                }
                OpEffect<R> effect{detail::parity_sign(o.row + o.col), m(o.row, o.col)};
                m = delete_col(delete_row(m, o.row), o.col);
                return effect;
            },
        },
        op);
}

template <ExactRing R>
Applied<R> apply_op(const Matrix<R>& m, const ElementaryOp<R>& op)
{
    Applied<R> r{m, 1, std::nullopt};
    OpEffect<R> effect = apply_op_in_place(r.matrix, op);
    r.sign = effect.sign;
    r.factor = std::move(effect.factor);
    return r;
}

/// Human-readable form with 1-based indices, e.g. "AddScaledColumn(src=1, dst=2, scale=-X1)".
template <ExactRing R>
std::string describe(const ElementaryOp<R>& op)
{
    std::ostringstream os;
    std::visit(detail::overloaded{
                   [&](const AddScaledColumn<R>& o) {
                       os << "AddScaledColumn(src=" << o.src + 1 << ", dst=" << o.dst + 1
                          << ", scale=" << to_string(o.scale) << ')';
                   },
                   [&](const AddScaledRow<R>& o) {
                       os << "AddScaledRow(src=" << o.src + 1 << ", dst=" << o.dst + 1
                          << ", scale=" << to_string(o.scale) << ')';
                   },
                   [&](const FactorOutRow<R>& o) {
                       os << "FactorOutRow(row=" << o.row + 1 << ", factor=" << to_string(o.factor) << ')';
                   },
                   [&](const FactorOutColumn<R>& o) {
                       os << "FactorOutColumn(col=" << o.col + 1 << ", factor=" << to_string(o.factor) << ')';
                   },
                   [&](const SwapRows& o) { os << "SwapRows(" << o.a + 1 << ", " << o.b + 1 << ')'; },
                   [&](const MoveRow& o) { os << "MoveRow(from=" << o.from + 1 << ", to=" << o.to + 1 << ')'; },
                   [&](const DeleteRowCol& o) {
                       os << "DeleteRowCol(row=" << o.row + 1 << ", col=" << o.col + 1 << ')';
                   },
               },
               op);
    return os.str();
}

// --- determinant oracles ---------------------------------------------------

/// Laplace expansion along the first row. Throws ShapeError for non-square
/// input or sizes above kCofactorMaxSize. det of the 0x0 matrix is one.
template <ExactRing R>
R det_cofactor(const Matrix<R>& m, const Ring<R>& ring)
{
    detail::check_square(m, "det_cofactor");
    if (m.rows() > kCofactorMaxSize) {
        throw ShapeError("det_cofactor is limited to " + std::to_string(kCofactorMaxSize) + "x"
                         + std::to_string(kCofactorMaxSize));
    }
    if (m.rows() == 0) {
        return ring.one();
    }
    if (m.rows() == 1) {
        return m(0, 0);
    }
    Matrix<R> rest = delete_row(m, 0);
    R sum = ring.zero();
    for (Index j = 0; j < m.cols(); ++j) {
        if (is_zero(m(0, j))) {
            continue;
        }
        R term = m(0, j) * det_cofactor(delete_col(rest, j), ring);
        sum = (j % 2 == 0) ? sum + term : sum - term;
    }
    return sum;
}

/// Single-step fraction-free elimination. The pivot is the first nonzero entry
/// at or below the diagonal in the current column; each row swap flips the sign.
/// An inexact division inside the loop is a ring bug and surfaces as ArithmeticError.
template <ExactRing R>
R det_bareiss(const Matrix<R>& m, const Ring<R>& ring)
{
    detail::check_square(m, "det_bareiss");
    const Index n = m.rows();
    if (n == 0) {
        return ring.one();
    }
    Matrix<R> a = m;
    R previous = ring.one();
    int sign = 1;
    for (Index k = 0; k + 1 < n; ++k) {
        Index pivot = k;
        while (pivot < n && is_zero(a(pivot, k))) {
            ++pivot;
        }
        if (pivot == n) {
            return ring.zero();
        }
        if (pivot != k) {
            a.row(pivot).swap(a.row(k));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j) {
                R cross = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = exact_div(cross, previous);
            }
        }
        previous = a(k, k);
    }
    R det = a(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

/// "[[1, X1], [1, 2*X1]]"
template <ExactRing R>
std::string render(const Matrix<R>& m)
{
    std::ostringstream os;
    os << '[';
    for (Index i = 0; i < m.rows(); ++i) {
        os << (i == 0 ? "[" : ", [");
        for (Index j = 0; j < m.cols(); ++j) {
            if (j != 0) {
                os << ", ";
            }
            os << to_string(m(i, j));
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

/// Order-sensitive hash of shape and entries; used for compact trace summaries.
template <ExactRing R>
std::uint64_t fingerprint(const Matrix<R>& m)
{
    std::uint64_t h = hash_combine(hash_combine(0, static_cast<std::uint64_t>(m.rows())),
                                   static_cast<std::uint64_t>(m.cols()));
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            h = hash_combine(h, hash_value(m(i, j)));
        }
    }
    return h;
}

} // namespace vdet
