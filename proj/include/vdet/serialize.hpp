#pragma once

// JSON encodings of ring elements, matrices, family specs, verification
// reports, certificates and traces.
//
//   Integer   "123"               decimal string
//   Rational  "-3/4" or "5"       canonical p/q, integers without denominator
//   MultiPoly [[[e1, ..., em], "c"], ...]   terms in graded-lex order
//   Matrix    {rows, cols, ring: "int"|"rat"|"poly", nvars (poly only), entries: [[...], ...]}
//
// Object keys keep insertion order so that output is byte-stable.

#include <string>

#include "json.hpp"

#include "vdet/errors.hpp"
#include "vdet/families.hpp"
#include "vdet/matrix.hpp"
#include "vdet/reduction.hpp"

namespace vdet {

using Json = nlohmann::ordered_json;

/// Thrown for malformed or mismatched JSON input.
class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Json to_json(const Integer& a);
Json to_json(const Rational& a);
Json to_json(const MultiPoly& p);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
MultiPoly poly_from_json(const Json& j, std::size_t variable_count);

namespace detail {

inline std::size_t ring_variables(const Ring<Integer>&) { return 0; }
inline std::size_t ring_variables(const Ring<Rational>&) { return 0; }
inline std::size_t ring_variables(const Ring<MultiPoly>& r) { return r.variable_count; }

template <class R>
R element_from_json(const Json& j, std::size_t variable_count)
{
    if constexpr (std::is_same_v<R, Integer>) {
        return integer_from_json(j);
    } else if constexpr (std::is_same_v<R, Rational>) {
        return rational_from_json(j);
    } else {
        return poly_from_json(j, variable_count);
    }
}

} // namespace detail

template <ExactRing R>
Json to_json(const Matrix<R>& m, const Ring<R>& ring)
{
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["ring"] = std::string(Ring<R>::name);
    if constexpr (std::is_same_v<R, MultiPoly>) {
        j["nvars"] = ring.variable_count;
    }
    Json entries = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Index j2 = 0; j2 < m.cols(); ++j2) {
            row.push_back(to_json(m(i, j2)));
        }
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

/// Parses a matrix of ring R; throws FormatError if the ring tag differs.
template <ExactRing R>
Matrix<R> matrix_from_json(const Json& j, Ring<R>* ring_out = nullptr)
{
    try {
        if (j.at("ring").get<std::string>() != Ring<R>::name) {
            throw FormatError("expected a " + std::string(Ring<R>::name) + " matrix, got "
                              + j.at("ring").get<std::string>());
        }
        Ring<R> ring{};
        if constexpr (std::is_same_v<R, MultiPoly>) {
            ring.variable_count = j.at("nvars").get<std::size_t>();
        }
        const Index rows = j.at("rows").get<Index>();
        const Index cols = j.at("cols").get<Index>();
        const Json& entries = j.at("entries");
        if (rows < 0 || cols < 0 || entries.size() != static_cast<std::size_t>(rows)) {
            throw FormatError("matrix entries do not match rows");
        }
        Matrix<R> m = zeros(rows, cols, ring);
        for (Index i = 0; i < rows; ++i) {
            const Json& row = entries.at(static_cast<std::size_t>(i));
            if (row.size() != static_cast<std::size_t>(cols)) {
                throw FormatError("matrix row " + std::to_string(i) + " does not match cols");
            }
            for (Index c = 0; c < cols; ++c) {
                m(i, c) = detail::element_from_json<R>(row.at(static_cast<std::size_t>(c)),
                                                       detail::ring_variables(ring));
            }
        }
        if (ring_out != nullptr) {
            *ring_out = ring;
        }
        return m;
    } catch (const Json::exception& e) {
        throw FormatError(std::string("malformed matrix: ") + e.what());
    }
}

Json to_json(const AnyMatrix& m, std::size_t variable_count);
AnyMatrix any_matrix_from_json(const Json& j);

Json to_json(const FamilySpec& spec);
FamilySpec spec_from_json(const Json& j);

Json to_json(const VerificationReport& report);
VerificationReport report_from_json(const Json& j);

template <ExactRing R>
Json to_json(const FactorCertificate<R>& cert, const Ring<R>& ring)
{
    Json factors = Json::array();
    for (const auto& f : cert.factors) {
        factors.push_back(Json{{"label", f.label}, {"value", to_string(f.value)}});
    }
    Json j;
    j["sign"] = cert.sign;
    j["factors"] = std::move(factors);
    j["total"] = to_string(certificate_total(cert, ring));
    j["residual"] = to_json(cert.residual, ring);
    return j;
}

std::string hex64(std::uint64_t value);

template <ExactRing R>
Json to_json(const TraceStage<R>& stage, const Ring<R>& ring)
{
    Json j;
    j["step_label"] = stage.label;
    j["level"] = stage.level;
    j["op"] = describe(stage.op);
    if (stage.factor) {
        j["factor"] = to_string(*stage.factor);
    }
    if (stage.sign_delta != 1) {
        j["sign_delta"] = stage.sign_delta;
    }
    j["residual_shape"] = Json::array({stage.rows, stage.cols});
    j["sign"] = stage.sign;
    j["factor_count"] = stage.factor_count;
    if (stage.snapshot) {
        j["matrix"] = to_json(*stage.snapshot, ring);
    } else {
        j["fingerprint"] = hex64(stage.fingerprint);
    }
    return j;
}

template <ExactRing R>
Json to_json(const ReductionTrace<R>& trace, const Ring<R>& ring)
{
    Json stages = Json::array();
    for (const auto& s : trace.stages) {
        stages.push_back(to_json(s, ring));
    }
    Json j;
    j["original"] = to_json(trace.original, ring);
    j["stages"] = std::move(stages);
    return j;
}

} // namespace vdet
