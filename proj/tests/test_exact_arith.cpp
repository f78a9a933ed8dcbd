#include "doctest.h"

#include <random>

#include "test_support.hpp"
#include "vdet/errors.hpp"
#include "vdet/exact_arith.hpp"

using namespace vdet;

TEST_CASE("binomial boundary values")
{
    CHECK(binomial(5, 0) == Integer(1));
    CHECK(binomial(5, 2) == Integer(10));
    CHECK(binomial(3, 7) == Integer(0));
    CHECK(binomial(3, -1) == Integer(0));
    CHECK(binomial(0, 0) == Integer(1));
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial of large arguments stays exact")
{
    // C(100, 50) from a reference table.
    CHECK(binomial(100, 50).to_string() == "100891344545564193334812497256");
    CHECK(binomial(100, 50) == binomial(100, 50 + 0));
    CHECK(binomial(100, 97) == binomial(100, 3));
}

TEST_CASE("Pascal's rule for 0 <= i <= j <= 64")
{
    for (long j = 0; j <= 64; ++j) {
        for (long i = 0; i <= j; ++i) {
            if (j == 0) {
                continue; // C(-1, .) is outside the domain
            }
            CHECK(binomial(j, i) - binomial(j - 1, i) == binomial(j - 1, i - 1));
        }
    }
}

TEST_CASE("binomial matches a row-by-row Pascal triangle")
{
    std::vector<Integer> row{Integer(1)};
    for (long n = 1; n <= 70; ++n) {
        std::vector<Integer> next(row.size() + 1, Integer(0));
        for (std::size_t k = 0; k < next.size(); ++k) {
            next[k] = (k < row.size() ? row[k] : Integer(0)) + (k > 0 ? row[k - 1] : Integer(0));
        }
        row = next;
        for (long k = 0; k <= n; ++k) {
            REQUIRE(binomial(n, k) == row[static_cast<std::size_t>(k)]);
        }
    }
}

TEST_CASE("integer ring operations")
{
    CHECK(exact_div(Integer(12), Integer(4)) == Integer(3));
    CHECK(exact_div(Integer(-12), Integer(4)) == Integer(-3));
    CHECK_THROWS_AS(exact_div(Integer(7), Integer(2)), ArithmeticError);
    CHECK_THROWS_AS(exact_div(Integer(7), Integer(0)), ArithmeticError);

    Integer z = Integer(-3) * Integer(0);
    CHECK(z.sign() == 0);
    CHECK(z.is_zero());
    CHECK(z.to_string() == "0");

    CHECK(gcd(Integer(-12), Integer(18)) == Integer(6));
    CHECK(Integer(-5) < Integer(3));
    CHECK(Integer::parse("-000123") == Integer(-123));
    CHECK(Integer::parse("+42") == Integer(42));
    CHECK_THROWS_AS(Integer::parse("12a"), std::invalid_argument);
    CHECK_THROWS_AS(Integer::parse(""), std::invalid_argument);
}

TEST_CASE("integer ring axioms on random big values")
{
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 300; ++trial) {
        Integer a = testing::big_integer(rng, 60);
        Integer b = testing::big_integer(rng, 60);
        Integer c = testing::big_integer(rng, 60);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Integer(0));
        if (!b.is_zero()) {
            CHECK(exact_div(a * b, b) == a);
        }
        CHECK(Integer::parse(a.to_string()) == a);
    }
}

TEST_CASE("rational canonical form")
{
    CHECK(Rational::parse("1/3") + Rational::parse("1/6") == Rational::parse("1/2"));
    CHECK((Rational::parse("1/3") + Rational::parse("1/6")).to_string() == "1/2");

    Rational r(Integer(4), Integer(-6));
    CHECK(r.numerator() == Integer(-2));
    CHECK(r.denominator() == Integer(3));
    CHECK(r.to_string() == "-2/3");
    CHECK(Rational::parse("6/3").to_string() == "2");
    CHECK(Rational::parse("0/5").sign() == 0);
    CHECK(Rational::parse("0/5").denominator() == Integer(1));

    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), ArithmeticError);
    CHECK_THROWS_AS(exact_div(Rational(1), Rational(0)), ArithmeticError);
    CHECK(exact_div(Rational(3), Rational::parse("3/4")) == Rational(4));
    CHECK(pow(Rational::parse("-2/3"), 3) == Rational::parse("-8/27"));
}

TEST_CASE("rational values are equal iff their fields are identical")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        Rational a = testing::small_rational(rng, 6, 6);
        Rational b = testing::small_rational(rng, 6, 6);
        const bool fields_equal = a.numerator() == b.numerator() && a.denominator() == b.denominator();
        CHECK((a == b) == fields_equal);
        CHECK(a.denominator().sign() > 0);
        CHECK(gcd(a.numerator(), a.denominator()) == Integer(1));
        CHECK(Rational::parse(a.to_string()) == a);
        if (!b.is_zero()) {
            CHECK(exact_div(a * b, b) == a);
        }
    }
}
