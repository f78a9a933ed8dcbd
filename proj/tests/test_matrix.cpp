#include "doctest.h"

#include <random>

#include "test_support.hpp"
#include "vdet/matrix.hpp"

using namespace vdet;
using vdet::testing::C;
using vdet::testing::X;

namespace {

const IntegerRing kZ{};
const RationalRing kQ{};

Matrix<Integer> int_matrix(const std::vector<std::vector<long>>& rows)
{
    std::vector<std::vector<Integer>> converted;
    for (const auto& r : rows) {
        converted.emplace_back(r.begin(), r.end());
    }
    return from_rows(converted);
}

} // namespace

TEST_CASE("apply AddScaledColumn on the identity")
{
    const PolyRing ring{2};
    const Applied<MultiPoly> r = apply_op(identity(2, ring), ElementaryOp<MultiPoly>{AddScaledColumn<MultiPoly>{0, 1, X(1, 2)}});
    CHECK(equal(r.matrix, from_rows<MultiPoly>({{C(1, 2), X(1, 2)}, {C(0, 2), C(1, 2)}})));
    CHECK(r.sign == 1);
    CHECK_FALSE(r.factor.has_value());
}

TEST_CASE("apply FactorOutRow extracts the factor")
{
    const MultiPoly two_x = C(2, 1) * X(1, 1);
    const Matrix<MultiPoly> m = from_rows<MultiPoly>({{two_x, C(4, 1) * X(1, 1)}, {C(1, 1), C(1, 1)}});
    const Applied<MultiPoly> r = apply_op(m, ElementaryOp<MultiPoly>{FactorOutRow<MultiPoly>{0, two_x}});
    CHECK(equal(r.matrix, from_rows<MultiPoly>({{C(1, 1), C(2, 1)}, {C(1, 1), C(1, 1)}})));
    REQUIRE(r.factor.has_value());
    CHECK(*r.factor == two_x);

    CHECK_THROWS_AS(apply_op(m, ElementaryOp<MultiPoly>{FactorOutRow<MultiPoly>{1, two_x}}), ArithmeticError);
    CHECK_THROWS_AS(apply_op(m, ElementaryOp<MultiPoly>{FactorOutRow<MultiPoly>{0, MultiPoly(1)}}), ArithmeticError);
}

TEST_CASE("apply sign bookkeeping for swaps, moves and deletions")
{
    const Matrix<Integer> m = int_matrix({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
    CHECK(apply_op(m, ElementaryOp<Integer>{SwapRows{0, 2}}).sign == -1);
    CHECK(apply_op(m, ElementaryOp<Integer>{SwapRows{1, 1}}).sign == 1);

    const Applied<Integer> moved = apply_op(m, ElementaryOp<Integer>{MoveRow{2, 0}});
    CHECK(moved.sign == 1);
    CHECK(equal(moved.matrix, int_matrix({{7, 8, 10}, {1, 2, 3}, {4, 5, 6}})));
    CHECK(apply_op(m, ElementaryOp<Integer>{MoveRow{1, 0}}).sign == -1);
    CHECK(apply_op(m, ElementaryOp<Integer>{MoveRow{0, 2}}).sign == 1);

    const Matrix<Integer> bordered = int_matrix({{1, 2, 3}, {0, 5, 0}, {7, 8, 10}});
    const Applied<Integer> del = apply_op(bordered, ElementaryOp<Integer>{DeleteRowCol{1, 1}});
    CHECK(del.sign == 1);
    CHECK(*del.factor == Integer(5));
    CHECK(equal(del.matrix, int_matrix({{1, 3}, {7, 10}})));
    CHECK(det_bareiss(bordered, kZ) == Integer(5) * det_bareiss(del.matrix, kZ));

    const Matrix<Integer> off = int_matrix({{0, 4}, {3, 9}});
    const Applied<Integer> del2 = apply_op(off, ElementaryOp<Integer>{DeleteRowCol{0, 1}});
    CHECK(del2.sign == -1);
    CHECK(Integer(del2.sign) * *del2.factor * det_bareiss(del2.matrix, kZ) == det_bareiss(off, kZ));

    CHECK_THROWS_AS(apply_op(m, ElementaryOp<Integer>{DeleteRowCol{0, 0}}), ShapeError);
    CHECK_THROWS_AS(apply_op(m, ElementaryOp<Integer>{SwapRows{0, 3}}), ShapeError);
    CHECK_THROWS_AS(apply_op(m, ElementaryOp<Integer>{AddScaledRow<Integer>{1, 1, Integer(2)}}), ShapeError);
}

TEST_CASE("describe uses 1-based indices")
{
    CHECK(describe(ElementaryOp<MultiPoly>{AddScaledColumn<MultiPoly>{0, 1, -X(1, 2)}})
          == "AddScaledColumn(src=1, dst=2, scale=-X1)");
    CHECK(describe(ElementaryOp<Integer>{MoveRow{1, 0}}) == "MoveRow(from=2, to=1)");
}

TEST_CASE("det_cofactor examples")
{
    const PolyRing ring{1};
    const Matrix<MultiPoly> base = from_rows<MultiPoly>({{C(1, 1), X(1, 1)}, {C(1, 1), C(2, 1) * X(1, 1)}});
    CHECK(det_cofactor(base, ring) == X(1, 1));
    CHECK(det_cofactor(Matrix<Integer>(0, 0), kZ) == Integer(1));
    CHECK(det_bareiss(Matrix<Integer>(0, 0), kZ) == Integer(1));
    CHECK(det_cofactor(Matrix<MultiPoly>(0, 0), PolyRing{3}) == C(1, 3));

    const Matrix<Integer> thm1_at_12 = int_matrix({{1, 1, 1, 1}, {1, 2, 4, 8}, {1, 2, 3, 4}, {1, 4, 12, 32}});
    CHECK(det_cofactor(thm1_at_12, kZ) == Integer(-2));
    CHECK(det_bareiss(thm1_at_12, kZ) == Integer(-2));

    CHECK_THROWS_AS(det_cofactor(Matrix<Integer>(2, 3), kZ), ShapeError);
    CHECK_THROWS_AS(det_cofactor(identity(7, kZ), kZ), ShapeError);
    CHECK_THROWS_AS(det_bareiss(Matrix<Integer>(3, 2), kZ), ShapeError);
}

TEST_CASE("det_bareiss examples")
{
    for (Index n = 1; n <= 5; ++n) {
        CHECK(det_bareiss(identity(n, kZ), kZ) == Integer(1));
    }
    const PolyRing ring{2};
    const Matrix<MultiPoly> vdm = from_rows<MultiPoly>({{C(1, 2), X(1, 2)}, {C(1, 2), X(2, 2)}});
    CHECK(det_bareiss(vdm, ring) == X(2, 2) - X(1, 2));
    // Zero leading pivot forces a swap.
    CHECK(det_bareiss(int_matrix({{0, 1}, {1, 0}}), kZ) == Integer(-1));
    CHECK(det_bareiss(int_matrix({{0, 1, 2}, {0, 3, 4}, {0, 5, 6}}), kZ) == Integer(0));
}

TEST_CASE("Bareiss agrees with cofactor expansion on random matrices")
{
    std::mt19937_64 rng(500);
    for (int trial = 0; trial < 500; ++trial) {
        const Index n = testing::uniform(rng, 1, 5);
        const Matrix<Integer> m = testing::random_integer_matrix(rng, n);
        REQUIRE(det_bareiss(m, kZ) == det_cofactor(m, kZ));
    }
    for (int trial = 0; trial < 100; ++trial) {
        const Index n = testing::uniform(rng, 1, 5);
        const Matrix<Rational> m = testing::random_rational_matrix(rng, n);
        REQUIRE(det_bareiss(m, kQ) == det_cofactor(m, kQ));
    }
    for (int trial = 0; trial < 40; ++trial) {
        const Index n = testing::uniform(rng, 1, 4);
        const std::size_t vars = static_cast<std::size_t>(testing::uniform(rng, 1, 3));
        const Matrix<MultiPoly> m = testing::random_poly_matrix(rng, n, vars);
        REQUIRE(det_bareiss(m, PolyRing{vars}) == det_cofactor(m, PolyRing{vars}));
    }
}

TEST_CASE("determinant is alternating and transpose invariant")
{
    std::mt19937_64 rng(501);
    for (int trial = 0; trial < 200; ++trial) {
        const Index n = testing::uniform(rng, 2, 6);
        const Matrix<Integer> m = testing::random_integer_matrix(rng, n);
        const Index a = testing::uniform(rng, 0, n - 1);
        Index b = testing::uniform(rng, 0, n - 2);
        if (b >= a) {
            ++b;
        }
        const Matrix<Integer> swapped = apply_op(m, ElementaryOp<Integer>{SwapRows{a, b}}).matrix;
        CHECK(det_bareiss(swapped, kZ) == -det_bareiss(m, kZ));
        Matrix<Integer> repeated = m;
        repeated.row(b) = m.row(a);
        CHECK(det_bareiss(repeated, kZ).is_zero());
        CHECK(det_bareiss(transpose(m), kZ) == det_bareiss(m, kZ));
    }
}

TEST_CASE("each multiplier from apply relates the two determinants")
{
    std::mt19937_64 rng(502);
    for (int trial = 0; trial < 150; ++trial) {
        const Index n = testing::uniform(rng, 1, 5);
        Matrix<Rational> current = testing::random_rational_matrix(rng, n);
        for (int step = 0; step < 8 && current.rows() > 0; ++step) {
            const Index size = current.rows();
            auto idx = [&] { return testing::uniform(rng, 0, size - 1); };
            ElementaryOp<Rational> op = SwapRows{idx(), idx()};
            switch (testing::uniform(rng, 0, 5)) {
            case 0:
                if (size > 1) {
                    const Index s = idx();
                    const Index d = (s + 1) % size;
                    op = AddScaledColumn<Rational>{s, d, testing::small_rational(rng)};
                }
                break;
            case 1:
                if (size > 1) {
                    const Index s = idx();
                    const Index d = (s + 1) % size;
                    op = AddScaledRow<Rational>{s, d, testing::small_rational(rng)};
                }
                break;
            case 2: {
                Rational f = testing::small_rational(rng);
                if (!f.is_zero()) {
                    op = FactorOutRow<Rational>{idx(), f};
                }
                break;
            }
            case 3: {
                Rational f = testing::small_rational(rng);
                if (!f.is_zero()) {
                    op = FactorOutColumn<Rational>{idx(), f};
                }
                break;
            }
            case 4:
                op = MoveRow{idx(), idx()};
                break;
            default: {
                // Clear a row except one entry, then delete it.
                const Index r = idx();
                const Index c = idx();
                for (Index j = 0; j < size; ++j) {
                    if (j != c) {
                        current(r, j) = Rational(0);
                    }
                }
                const Matrix<Rational> restart = current;
                const Applied<Rational> del = apply_op(current, ElementaryOp<Rational>{DeleteRowCol{r, c}});
                CHECK(Rational(del.sign) * *del.factor * det_bareiss(del.matrix, kQ) == det_bareiss(restart, kQ));
                current = del.matrix;
                continue;
            }
            }
            const Rational before = det_bareiss(current, kQ);
            const Applied<Rational> r = apply_op(current, op);
            const Rational m = Rational(r.sign) * r.factor.value_or(Rational(1));
            CHECK(m * det_bareiss(r.matrix, kQ) == before);
            current = r.matrix;
        }
    }
}

TEST_CASE("multipliers compose along an operation chain")
{
    std::mt19937_64 rng(503);
    for (int trial = 0; trial < 100; ++trial) {
        const Index n = testing::uniform(rng, 2, 5);
        const Matrix<Rational> original = testing::random_rational_matrix(rng, n);
        Matrix<Rational> current = original;
        Rational total(1);
        for (int step = 0; step < 10; ++step) {
            const Index a = testing::uniform(rng, 0, n - 1);
            const Index b = (a + 1 + testing::uniform(rng, 0, n - 2)) % n;
            ElementaryOp<Rational> op = MoveRow{a, b};
            const long kind = testing::uniform(rng, 0, 3);
            Rational f = testing::small_rational(rng);
            if (f.is_zero()) {
                f = Rational(1);
            }
            if (kind == 0) {
                op = AddScaledRow<Rational>{a, b, f};
            } else if (kind == 1) {
                op = AddScaledColumn<Rational>{a, b, f};
            } else if (kind == 2) {
                op = FactorOutRow<Rational>{a, f};
            }
            const Applied<Rational> r = apply_op(current, op);
            total *= Rational(r.sign) * r.factor.value_or(Rational(1));
            current = r.matrix;
        }
        CHECK(total * det_bareiss(current, kQ) == det_bareiss(original, kQ));
    }
}

TEST_CASE("shape helpers")
{
    const Matrix<Integer> m = int_matrix({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    CHECK(delete_row(m, 1).rows() == 2);
    CHECK(delete_row(m, 1).cols() == 3);
    CHECK(equal(delete_row(m, 1), int_matrix({{1, 2, 3}, {7, 8, 9}})));
    CHECK(equal(delete_col(m, 0), int_matrix({{2, 3}, {5, 6}, {8, 9}})));
    CHECK(equal(transpose(transpose(m)), m));
    const std::vector<Index> all{0, 1, 2};
    CHECK(equal(submatrix<Integer>(m, all, all), m));
    const std::vector<Index> corners{0, 2};
    CHECK(equal(submatrix<Integer>(m, corners, corners), int_matrix({{1, 3}, {7, 9}})));
    CHECK_THROWS_AS(delete_row(m, 3), ShapeError);
    CHECK_THROWS_AS(delete_col(m, -1), ShapeError);

    const Matrix<Rational> q = map_entries(m, [](const Integer& x) { return Rational(x, Integer(2)); });
    CHECK(q(0, 0) == Rational::parse("1/2"));
    CHECK(render(int_matrix({{1, 2}, {3, 4}})) == "[[1, 2], [3, 4]]");
}
