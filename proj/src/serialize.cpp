#include "vdet/serialize.hpp"

#include <cstdio>

namespace vdet {

Json to_json(const Integer& a) { return a.to_string(); }
Json to_json(const Rational& a) { return a.to_string(); }

Json to_json(const MultiPoly& p)
{
    Json terms = Json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        terms.push_back(Json::array({mono.exponents(), coeff.to_string()}));
    }
    return terms;
}

namespace {

std::string expect_string(const Json& j, const char* what)
{
    if (!j.is_string()) {
        throw FormatError(std::string(what) + " must be a string, got " + j.dump());
    }
    return j.get<std::string>();
}

template <class F>
auto reparse(F&& f, const char* what) -> decltype(f())
{
    try {
        return f();
    } catch (const Json::exception& e) {
        throw FormatError(std::string("malformed ") + what + ": " + e.what());
    } catch (const FormatError&) {
        throw;
    } catch (const std::logic_error& e) {
        throw FormatError(std::string("malformed ") + what + ": " + e.what());
    }
}

} // namespace

Integer integer_from_json(const Json& j)
{
    return reparse([&] { return Integer::parse(expect_string(j, "integer")); }, "integer");
}

Rational rational_from_json(const Json& j)
{
    return reparse([&] { return Rational::parse(expect_string(j, "rational")); }, "rational");
}

MultiPoly poly_from_json(const Json& j, std::size_t variable_count)
{
    return reparse(
        [&] {
            if (!j.is_array()) {
                throw FormatError("polynomial must be a term list");
            }
            std::vector<std::pair<std::vector<std::uint32_t>, Integer>> terms;
            for (const Json& t : j) {
                if (!t.is_array() || t.size() != 2) {
                    throw FormatError("polynomial term must be [exponents, coefficient]");
                }
                auto exps = t.at(0).get<std::vector<std::uint32_t>>();
                if (exps.size() != variable_count) {
                    throw FormatError("term has " + std::to_string(exps.size()) + " exponents, expected "
                                      + std::to_string(variable_count));
                }
                terms.emplace_back(std::move(exps), integer_from_json(t.at(1)));
            }
            return MultiPoly::from_terms(variable_count, terms);
        },
        "polynomial");
}

Json to_json(const AnyMatrix& m, std::size_t variable_count)
{
    return std::visit(
        [&](const auto& a) -> Json {
            using R = typename std::decay_t<decltype(a)>::Scalar;
            Ring<R> ring{};
            if constexpr (std::is_same_v<R, MultiPoly>) {
                ring.variable_count = variable_count;
            }
            return to_json(a, ring);
        },
        m);
}

AnyMatrix any_matrix_from_json(const Json& j)
{
    const std::string ring = reparse([&] { return j.at("ring").get<std::string>(); }, "matrix");
    if (ring == "poly") {
        return matrix_from_json<MultiPoly>(j);
    }
    if (ring == "rat" || ring == "int") {
        if (ring == "int") {
            return map_entries(matrix_from_json<Integer>(j), [](const Integer& x) { return Rational(x); });
        }
        return matrix_from_json<Rational>(j);
    }
    throw FormatError("unknown ring '" + ring + "'");
}

Json to_json(const FamilySpec& spec)
{
    Json j;
    j["kind"] = std::string(to_string(spec.kind));
    j["m"] = spec.m;
    if (spec.kind == FamilyKind::BinomialPower || spec.kind == FamilyKind::BinomialPascal) {
        j["n"] = spec.n;
    }
    if (spec.kind == FamilyKind::BinomialPower) {
        j["l"] = spec.l;
    }
    if (const auto* values = std::get_if<std::vector<Rational>>(&spec.assignment)) {
        Json xs = Json::array();
        for (const auto& x : *values) {
            xs.push_back(to_json(x));
        }
        j["assignment"] = std::move(xs);
    } else {
        j["assignment"] = "symbolic";
    }
    return j;
}

FamilySpec spec_from_json(const Json& j)
{
    return reparse(
        [&] {
            FamilySpec spec;
            spec.kind = parse_family_kind(j.at("kind").get<std::string>());
            spec.m = j.at("m").get<long>();
            spec.n = j.value("n", 0L);
            spec.l = j.value("l", 0L);
            const Json& a = j.at("assignment");
            if (a.is_string()) {
                if (a.get<std::string>() != "symbolic") {
                    throw FormatError("assignment must be \"symbolic\" or a list of rationals");
                }
                spec.assignment = Symbolic{};
            } else {
                std::vector<Rational> xs;
                for (const Json& x : a) {
                    xs.push_back(rational_from_json(x));
                }
                spec.assignment = std::move(xs);
            }
            return spec;
        },
        "family spec");
}

Json to_json(const VerificationReport& report)
{
    Json j;
    j["spec"] = to_json(report.spec);
    j["size"] = report.size;
    j["ring"] = report.ring;
    j["det_oracle"] = report.det_oracle;
    j["det_closed_form"] = report.det_closed_form;
    j["equal"] = report.equal;
    return j;
}

VerificationReport report_from_json(const Json& j)
{
    return reparse(
        [&] {
            return VerificationReport{spec_from_json(j.at("spec")),
                                      j.at("size").get<Index>(),
                                      j.at("ring").get<std::string>(),
                                      j.at("det_oracle").get<std::string>(),
                                      j.at("det_closed_form").get<std::string>(),
                                      j.at("equal").get<bool>()};
        },
        "verification report");
}

std::string hex64(std::uint64_t value)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

} // namespace vdet
