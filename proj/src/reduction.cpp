#include "vdet/reduction.hpp"

#include <cctype>

namespace vdet {

std::string_view to_string(Engine engine)
{
    switch (engine) {
    case Engine::PowerDerivative:
        return "thm1";
    case Engine::Shifted:
        return "cor2";
    case Engine::BinomialByBlock:
        return "thm3-m";
    case Engine::BinomialByRow:
        return "thm3-l";
    case Engine::Pascal:
        return "pascal";
    }
    return "?";
}

Engine parse_engine(std::string_view text)
{
    std::string key;
    for (char c : text) {
        key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    for (Engine e : {Engine::PowerDerivative, Engine::Shifted, Engine::BinomialByBlock, Engine::BinomialByRow,
                     Engine::Pascal}) {
        if (key == to_string(e)) {
            return e;
        }
    }
    if (key == "lemma4") {
        return Engine::Pascal;
    }
    throw SpecError("unknown engine '" + std::string(text) + "' (expected thm1, cor2, thm3-m, thm3-l or pascal)");
}

FamilyKind engine_family(Engine engine)
{
    switch (engine) {
    case Engine::PowerDerivative:
        return FamilyKind::PowerDerivative;
    case Engine::Shifted:
        return FamilyKind::PowerDerivativeShifted;
    case Engine::BinomialByBlock:
    case Engine::BinomialByRow:
        return FamilyKind::BinomialPower;
    case Engine::Pascal:
        return FamilyKind::BinomialPascal;
    }
    return FamilyKind::PowerDerivative;
}

std::vector<Engine> engines_for(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::PowerDerivative:
        return {Engine::PowerDerivative};
    case FamilyKind::PowerDerivativeShifted:
        return {Engine::Shifted};
    case FamilyKind::BinomialPower:
        return {Engine::BinomialByBlock, Engine::BinomialByRow};
    case FamilyKind::BinomialPascal:
        return {Engine::Pascal};
    }
    return {};
}

namespace {

template <ExactRing R>
Reduction<R> run_engine(const FamilySpec& spec, Engine engine, std::span<const R> xs, const Ring<R>& ring,
                        TraceOptions options)
{
    switch (engine) {
    case Engine::PowerDerivative:
        return reduce_power_derivative(xs, ring, options);
    case Engine::Shifted:
        return reduce_shifted(xs, ring, options);
    case Engine::BinomialByBlock:
        return reduce_binomial_induction_m(xs, spec.n, spec.l, ring, options);
    case Engine::BinomialByRow:
        return reduce_binomial_induction_l(xs, spec.n, spec.l, ring, options);
    case Engine::Pascal:
        break;
    }
    throw SpecError("engine " + std::string(to_string(engine)) + " takes no variables");
}

} // namespace

AnyReduction reduce(const FamilySpec& spec, Engine engine, TraceOptions options)
{
    validate(spec);
    if (engine_family(engine) != spec.kind) {
        throw SpecError("engine " + std::string(to_string(engine)) + " reduces "
                        + std::string(to_string(engine_family(engine))) + ", not "
                        + std::string(to_string(spec.kind)));
    }
    if (engine == Engine::Pascal) {
        return reduce_pascal(spec.n, spec.m, options);
    }
    if (const auto* values = std::get_if<std::vector<Rational>>(&spec.assignment)) {
        return run_engine<Rational>(spec, engine, *values, RationalRing{}, options);
    }
    const std::vector<MultiPoly> xs = indeterminates(variable_count(spec));
    return run_engine<MultiPoly>(spec, engine, xs, PolyRing{xs.size()}, options);
}

CertificateReport check_reduction(const FamilySpec& spec, const AnyReduction& reduction, bool check_prefix_stages)
{
    const AnyScalar closed = closed_form_det(spec);
    CertificateReport report;
    std::visit(
        [&](const auto& red) {
            using R = typename std::decay_t<decltype(red.trace.original)>::Scalar;
            Ring<R> ring{};
            if constexpr (std::is_same_v<R, MultiPoly>) {
                ring.variable_count = variable_count(spec);
            }
            const R total = certificate_total(red.certificate, ring);
            report.total = to_string(total);
            report.valid = check_certificate(red.certificate, red.trace.original, ring);
            report.residual_empty = red.certificate.residual.rows() == 0;
            const R* expected = std::get_if<R>(&closed);
            report.matches_closed_form = report.residual_empty && expected != nullptr && total == *expected;
            if (check_prefix_stages) {
                report.prefixes_checked = check_prefixes(red, ring);
                report.prefixes_valid = report.prefixes_checked.has_value();
            }
        },
        reduction);
    return report;
}

} // namespace vdet
