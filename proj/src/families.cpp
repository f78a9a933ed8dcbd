#include "vdet/families.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vdet {

std::string_view to_string(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::PowerDerivative:
        return "PowerDerivative";
    case FamilyKind::PowerDerivativeShifted:
        return "PowerDerivativeShifted";
    case FamilyKind::BinomialPower:
        return "BinomialPower";
    case FamilyKind::BinomialPascal:
        return "BinomialPascal";
    }
    return "?";
}

FamilyKind parse_family_kind(std::string_view text)
{
    std::string key;
    for (char c : text) {
        if (c != '-' && c != '_') {
            key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
    }
    if (key == "powerderivative" || key == "thm1" || key == "pd") {
        return FamilyKind::PowerDerivative;
    }
    if (key == "powerderivativeshifted" || key == "shifted" || key == "cor2") {
        return FamilyKind::PowerDerivativeShifted;
    }
    if (key == "binomialpower" || key == "thm3" || key == "bp") {
        return FamilyKind::BinomialPower;
    }
    if (key == "binomialpascal" || key == "pascal" || key == "lemma4") {
        return FamilyKind::BinomialPascal;
    }
    throw SpecError("unknown family '" + std::string(text) + "'");
}

void validate(const FamilySpec& spec)
{
    if (spec.m < 1) {
        throw SpecError(std::string(to_string(spec.kind)) + " requires m ≥ 1");
    }
    switch (spec.kind) {
    case FamilyKind::PowerDerivative:
    case FamilyKind::PowerDerivativeShifted:
        break;
    case FamilyKind::BinomialPower:
        if (spec.l < 1) {
            throw SpecError("BinomialPower requires l ≥ 1");
        }
        if (spec.n < spec.l) {
            throw SpecError("BinomialPower requires n ≥ l");
        }
        break;
    case FamilyKind::BinomialPascal:
        if (spec.n < spec.m) {
            throw SpecError("BinomialPascal requires 1 ≤ m ≤ n");
        }
        break;
    }
    if (const auto* values = std::get_if<std::vector<Rational>>(&spec.assignment)) {
        if (values->size() != variable_count(spec)) {
            throw SpecError(std::string(to_string(spec.kind)) + " needs " + std::to_string(variable_count(spec))
                            + " values, got " + std::to_string(values->size()));
        }
    }
}

Index matrix_size(const FamilySpec& spec)
{
    switch (spec.kind) {
    case FamilyKind::PowerDerivative:
    case FamilyKind::PowerDerivativeShifted:
        return 2 * spec.m;
    case FamilyKind::BinomialPower:
        return spec.m * spec.l;
    case FamilyKind::BinomialPascal:
        return spec.m;
    }
    return 0;
}

std::size_t variable_count(const FamilySpec& spec)
{
    return spec.kind == FamilyKind::BinomialPascal ? 0 : static_cast<std::size_t>(std::max(spec.m, 0L));
}

std::string describe(const FamilySpec& spec)
{
    std::ostringstream os;
    os << to_string(spec.kind) << "(m=" << spec.m;
    if (spec.kind == FamilyKind::BinomialPower || spec.kind == FamilyKind::BinomialPascal) {
        os << ", n=" << spec.n;
    }
    if (spec.kind == FamilyKind::BinomialPower) {
        os << ", l=" << spec.l;
    }
    if (const auto* values = std::get_if<std::vector<Rational>>(&spec.assignment)) {
        os << ", X=(";
        for (std::size_t i = 0; i < values->size(); ++i) {
            os << (i == 0 ? "" : ", ") << (*values)[i];
        }
        os << ')';
    } else if (spec.kind != FamilyKind::BinomialPascal) {
        os << ", symbolic";
    }
    os << ')';
    return os.str();
}

ClosedForm closed_form(const FamilySpec& spec)
{
    validate(spec);
    const long m = spec.m;
    const long l = spec.l;
    switch (spec.kind) {
    case FamilyKind::PowerDerivative:
        return {m * (m - 1) / 2, 1, 4};
    case FamilyKind::PowerDerivativeShifted:
        return {m * (m - 1) / 2, 4, 4};
    case FamilyKind::BinomialPower:
        return {0, static_cast<unsigned long>(l * (l - 1) / 2), static_cast<unsigned long>(l * l)};
    case FamilyKind::BinomialPascal:
        return {0, 0, 0};
    }
    return {};
}

std::vector<MultiPoly> indeterminates(std::size_t count)
{
    std::vector<MultiPoly> xs;
    xs.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) {
        xs.push_back(MultiPoly::variable(i, count));
    }
    return xs;
}

AnyMatrix build(const FamilySpec& spec)
{
    validate(spec);
    if (spec.kind == FamilyKind::BinomialPascal) {
        return build_matrix<Rational>(spec, {}, RationalRing{});
    }
    if (const auto* values = std::get_if<std::vector<Rational>>(&spec.assignment)) {
        return build_matrix<Rational>(spec, *values, RationalRing{});
    }
    const std::vector<MultiPoly> xs = indeterminates(variable_count(spec));
    return build_matrix<MultiPoly>(spec, xs, PolyRing{xs.size()});
}

AnyScalar closed_form_det(const FamilySpec& spec)
{
    validate(spec);
    if (spec.kind == FamilyKind::BinomialPascal) {
        return closed_form_value<Rational>(spec, {}, RationalRing{});
    }
    if (const auto* values = std::get_if<std::vector<Rational>>(&spec.assignment)) {
        return closed_form_value<Rational>(spec, *values, RationalRing{});
    }
    const std::vector<MultiPoly> xs = indeterminates(variable_count(spec));
    return closed_form_value<MultiPoly>(spec, xs, PolyRing{xs.size()});
}

std::string to_string(const AnyScalar& value)
{
    return std::visit([](const auto& v) { return v.to_string(); }, value);
}

VerificationReport verify_identity(const FamilySpec& spec, const SizeGuards& guards)
{
    validate(spec);
    const Index size = matrix_size(spec);
    const bool symbolic = spec.is_symbolic() && spec.kind != FamilyKind::BinomialPascal;
    const Index guard = symbolic ? guards.symbolic : guards.numeric;
    if (size > guard) {
        throw SizeGuardError(std::string(symbolic ? "symbolic" : "numeric") + " size " + std::to_string(size)
                             + " exceeds guard " + std::to_string(guard));
    }

    VerificationReport report{spec, size, {}, {}, {}, false};
    const AnyMatrix matrix = build(spec);
    const AnyScalar closed = closed_form_det(spec);
    std::visit(
        [&](const auto& a) {
            using R = typename std::decay_t<decltype(a)>::Scalar;
            const R& expected = std::get<R>(closed);
            Ring<R> ring{};
            if constexpr (std::is_same_v<R, MultiPoly>) {
                ring.variable_count = variable_count(spec);
            }
            const R oracle = det_bareiss(a, ring);
            report.ring = std::string(Ring<R>::name);
            report.det_oracle = to_string(oracle);
            report.det_closed_form = to_string(expected);
            report.equal = oracle == expected;
        },
        matrix);
    return report;
}

} // namespace vdet
