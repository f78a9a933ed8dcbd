#include "doctest.h"

#include <random>

#include "test_support.hpp"
#include "vdet/serialize.hpp"

using namespace vdet;
using vdet::testing::C;
using vdet::testing::X;

TEST_CASE("scalar encodings")
{
    CHECK(to_json(Integer::parse("-123456789012345678901234567890")).dump()
          == "\"-123456789012345678901234567890\"");
    CHECK(to_json(Rational(Integer(-6), Integer(8))).dump() == "\"-3/4\"");
    CHECK(to_json(Rational(5)).dump() == "\"5\"");
    CHECK(to_json(C(3, 2) * pow(X(1, 2), 2) * X(2, 2) - C(1, 2)).dump() == "[[[2,1],\"3\"],[[0,0],\"-1\"]]");
    CHECK(to_json(MultiPoly(2)).dump() == "[]");

    CHECK(rational_from_json(Json("10/4")) == Rational(Integer(5), Integer(2)));
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), FormatError);
    CHECK_THROWS_AS(rational_from_json(Json(3)), FormatError);
    CHECK_THROWS_AS(integer_from_json(Json("12a")), FormatError);
    CHECK_THROWS_AS(poly_from_json(Json::parse("[[[1],\"2\"]]"), 2), FormatError);
}

TEST_CASE("matrix encoding golden")
{
    const Matrix<MultiPoly> a = std::get<Matrix<MultiPoly>>(build(FamilySpec{FamilyKind::PowerDerivative, 1}));
    CHECK(to_json(a, PolyRing{1}).dump()
          == R"({"rows":2,"cols":2,"ring":"poly","nvars":1,"entries":[[[[[0],"1"]],[[[1],"1"]]],[[[[0],"1"]],[[[1],"2"]]]]})");

    const Matrix<Rational> p = from_rows<Rational>({{Rational(1), Rational(1)}, {Rational(2), Rational(3)}});
    CHECK(to_json(p, RationalRing{}).dump() == R"({"rows":2,"cols":2,"ring":"rat","entries":[["1","1"],["2","3"]]})");
}

TEST_CASE("matrix round trips")
{
    std::mt19937_64 rng(51);
    for (int t = 0; t < 20; ++t) {
        const auto size = static_cast<Index>(t % 5);
        const auto q = testing::random_rational_matrix(rng, size);
        CHECK(equal(matrix_from_json<Rational>(Json::parse(to_json(q, RationalRing{}).dump())), q));
        const auto z = testing::random_integer_matrix(rng, size, 9);
        CHECK(equal(matrix_from_json<Integer>(to_json(z, IntegerRing{})), z));
        const auto p = testing::random_poly_matrix(rng, size, 3);
        PolyRing ring{};
        CHECK(equal(matrix_from_json<MultiPoly>(to_json(p, PolyRing{3}), &ring), p));
        CHECK(ring.variable_count == 3);
    }
    CHECK_THROWS_AS(matrix_from_json<Rational>(to_json(identity(2, IntegerRing{}), IntegerRing{})), FormatError);
    CHECK_THROWS_AS(matrix_from_json<Rational>(Json::parse(R"({"rows":2,"cols":1,"ring":"rat","entries":[["1"]]})")),
                    FormatError);

    const AnyMatrix widened = any_matrix_from_json(to_json(identity(2, IntegerRing{}), IntegerRing{}));
    CHECK(equal(std::get<Matrix<Rational>>(widened), identity(2, RationalRing{})));
}

TEST_CASE("family spec encoding")
{
    const FamilySpec pd{FamilyKind::PowerDerivative, 2, 0, 0, Symbolic{}};
    CHECK(to_json(pd).dump() == R"({"kind":"PowerDerivative","m":2,"assignment":"symbolic"})");
    const FamilySpec bp{FamilyKind::BinomialPower, 2, 3, 2,
                        std::vector<Rational>{Rational(Integer(1), Integer(2)), Rational(-3)}};
    CHECK(to_json(bp).dump() == R"({"kind":"BinomialPower","m":2,"n":3,"l":2,"assignment":["1/2","-3"]})");
    const FamilySpec pascal{FamilyKind::BinomialPascal, 3, 5, 0, Symbolic{}};
    CHECK(to_json(pascal).dump() == R"({"kind":"BinomialPascal","m":3,"n":5,"assignment":"symbolic"})");
    for (const auto& s : {pd, bp, pascal}) {
        CHECK(spec_from_json(Json::parse(to_json(s).dump())) == s);
    }
    CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"kind":"Hankel","m":2,"assignment":"symbolic"})")), FormatError);
    CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"kind":"thm1","assignment":"symbolic"})")), FormatError);
    CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"kind":"thm1","m":1,"assignment":"numeric"})")), FormatError);
}

TEST_CASE("verification report encoding")
{
    const VerificationReport r = verify_identity(FamilySpec{FamilyKind::PowerDerivative, 1});
    CHECK(to_json(r).dump()
          == R"({"spec":{"kind":"PowerDerivative","m":1,"assignment":"symbolic"},"size":2,"ring":"poly","det_oracle":"X1","det_closed_form":"X1","equal":true})");
    const VerificationReport back = report_from_json(to_json(r));
    CHECK(back.spec == r.spec);
    CHECK(back.det_oracle == r.det_oracle);
    CHECK(back.equal);
}

TEST_CASE("certificate and trace encoding")
{
    const auto xs = indeterminates(1);
    const auto red = reduce_power_derivative<MultiPoly>(xs, PolyRing{1});
    const Json cert = to_json(red.certificate, PolyRing{1});
    CHECK(cert.dump() == R"j({"sign":1,"factors":[{"label":"A^(7)","value":"X1"}],"total":"X1","residual":{"rows":0,"cols":0,"ring":"poly","nvars":1,"entries":[]}})j");

    const Json trace = to_json(red.trace, PolyRing{1});
    REQUIRE(trace["stages"].size() == 3);
    CHECK(trace["stages"][0]["step_label"] == "A^(1)");
    CHECK(trace["stages"][0]["op"] == "AddScaledColumn(src=1, dst=2, scale=-X1)");
    CHECK(trace["stages"][2]["factor"] == "X1");
    CHECK(trace["stages"][2]["residual_shape"] == Json::array({0, 0}));
    CHECK_FALSE(trace["stages"][0].contains("factor"));

    const auto big = reduce_power_derivative<Rational>(
        std::vector<Rational>{Rational(1), Rational(2), Rational(3), Rational(4), Rational(5)}, RationalRing{});
    const Json big_trace = to_json(big.trace, RationalRing{});
    CHECK(big_trace["stages"][0].contains("fingerprint"));
    CHECK(big_trace["stages"][0]["fingerprint"].get<std::string>().size() == 16);
    CHECK_FALSE(big_trace["stages"][0].contains("matrix"));
}
