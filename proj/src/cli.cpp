#include "vdet/cli.hpp"

#include <atomic>
#include <chrono>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "vdet/sampling.hpp"
#include "vdet/serialize.hpp"

namespace vdet::cli {

// --- parameter ranges ----------------------------------------------------------

namespace {

long parse_long(std::string_view text, std::string_view whole)
{
    long value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw UsageError("bad parameter value '" + std::string(whole) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
    }
    while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

long ParamRange::Term::eval(long m, long l) const
{
    switch (name) {
    case 'm':
        return m + offset;
    case 'l':
        return l + offset;
    default:
        return offset;
    }
}

ParamRange ParamRange::parse(std::string_view text, std::string_view allowed_names)
{
    ParamRange range;
    range.text_ = std::string(text);
    auto parse_term = [&](std::string_view t) {
        t = trim(t);
        Term term;
        if (!t.empty() && (t.front() == 'm' || t.front() == 'l')) {
            if (allowed_names.find(t.front()) == std::string_view::npos) {
                throw UsageError("'" + std::string(text) + "' may not refer to " + std::string(1, t.front()));
            }
            term.name = t.front();
            t.remove_prefix(1);
            if (t.empty()) {
                return term;
            }
            if (t.front() != '+' && t.front() != '-') {
                throw UsageError("bad parameter value '" + std::string(text) + "'");
            }
            const bool negative = t.front() == '-';
            t.remove_prefix(1);
            term.offset = parse_long(t, text);
            if (negative) {
                term.offset = -term.offset;
            }
            return term;
        }
        term.offset = parse_long(t, text);
        return term;
    };

    std::string_view rest = text;
    while (true) {
        const std::size_t comma = rest.find(',');
        const std::string_view piece = rest.substr(0, comma);
        const std::size_t dots = piece.find("..");
        if (dots == std::string_view::npos) {
            const Term t = parse_term(piece);
            range.pieces_.emplace_back(t, t);
        } else {
            range.pieces_.emplace_back(parse_term(piece.substr(0, dots)), parse_term(piece.substr(dots + 2)));
        }
        if (comma == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(comma + 1);
    }
    return range;
}

std::vector<long> ParamRange::resolve(long m, long l) const
{
    std::vector<long> values;
    for (const auto& [lo, hi] : pieces_) {
        for (long v = lo.eval(m, l); v <= hi.eval(m, l); ++v) {
            values.push_back(v);
        }
    }
    return values;
}

// --- grid expansion ----------------------------------------------------------------

namespace {

std::string guard_reason(const FamilySpec& spec, const SizeGuards& guards)
{
    try {
        validate(spec);
    } catch (const SpecError& e) {
        return e.what();
    }
    const bool symbolic = spec.is_symbolic() && spec.kind != FamilyKind::BinomialPascal;
    const Index guard = symbolic ? guards.symbolic : guards.numeric;
    const Index size = matrix_size(spec);
    if (size > guard) {
        return "size " + std::to_string(size) + " exceeds the " + (symbolic ? "symbolic" : "numeric") + " guard "
               + std::to_string(guard);
    }
    return {};
}

} // namespace

std::vector<GridPoint> expand(const GridSpec& grid)
{
    RationalSampler sampler(grid.seed);
    std::vector<GridPoint> points;
    auto push = [&](FamilySpec spec, std::string reason) {
        points.push_back({points.size() + 1, std::move(spec), std::move(reason)});
    };
    for (long m : grid.m.resolve(0, 0)) {
        const std::vector<long> ls = grid.l ? grid.l->resolve(m, 0) : std::vector<long>{0};
        for (long l : ls) {
            const std::vector<long> ns = grid.n ? grid.n->resolve(m, l) : std::vector<long>{0};
            for (long n : ns) {
                FamilySpec spec{grid.kind, m, n, l, Symbolic{}};
                if (grid.kind == FamilyKind::BinomialPascal || grid.mode == AssignmentMode::Symbolic) {
                    push(spec, guard_reason(spec, grid.guards));
                    continue;
                }
                if (grid.mode == AssignmentMode::Explicit) {
                    spec.assignment = grid.values;
                    push(spec, guard_reason(spec, grid.guards));
                    continue;
                }
                for (long t = 0; t < grid.trials; ++t) {
                    spec.assignment = std::vector<Rational>{};
                    std::string reason;
                    try {
                        validate(FamilySpec{grid.kind, m, n, l, Symbolic{}});
                    } catch (const SpecError& e) {
                        reason = e.what();
                    }
                    if (reason.empty()) {
                        spec.assignment =
                            sampler.draw_assignment(static_cast<std::size_t>(m), grid.allow_repeats);
                        reason = guard_reason(spec, grid.guards);
                    }
                    push(spec, reason);
                }
            }
        }
    }
    return points;
}

int exit_code(const RunSummary& summary) { return summary.passed() ? kExitPass : kExitCheckFailed; }

// --- command plumbing ---------------------------------------------------------------

namespace {

struct Options {
    std::string family;
    std::string m;
    std::string n;
    std::string l;
    bool symbolic = false;
    std::string values;
    std::uint64_t seed = 0;
    bool seed_given = false;
    long trials = 0;
    long max_size = 0;
    std::string engine;
    std::string out_path;
    std::string format = "json";
    bool allow_repeats = false;
    bool full_snapshots = false;
    bool timings = false;
    bool certify = false;
    unsigned jobs = 1;
};

std::vector<Rational> parse_values(const std::string& text)
{
    std::vector<Rational> xs;
    std::string_view rest = text;
    while (!rest.empty()) {
        const std::size_t comma = rest.find(',');
        const std::string_view item = trim(rest.substr(0, comma));
        try {
            xs.push_back(Rational::parse(item));
        } catch (const std::exception&) {
            throw UsageError("bad rational '" + std::string(item) + "' in --values");
        }
        if (comma == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(comma + 1);
    }
    if (xs.empty()) {
        throw UsageError("--values needs at least one value");
    }
    return xs;
}

GridSpec make_grid(const Options& o)
{
    GridSpec grid;
    try {
        grid.kind = parse_family_kind(o.family);
    } catch (const SpecError& e) {
        throw UsageError(e.what());
    }
    const std::string family(to_string(grid.kind));
    grid.m = ParamRange::parse(o.m, "");

    const bool uses_l = grid.kind == FamilyKind::BinomialPower;
    const bool uses_n = uses_l || grid.kind == FamilyKind::BinomialPascal;
    if (!o.l.empty() && !uses_l) {
        throw UsageError("--l does not apply to " + family);
    }
    if (!o.n.empty() && !uses_n) {
        throw UsageError("--n does not apply to " + family);
    }
    if (uses_l) {
        if (o.l.empty()) {
            throw UsageError(family + " needs --l");
        }
        grid.l = ParamRange::parse(o.l, "m");
    }
    if (uses_n) {
        if (o.n.empty()) {
            throw UsageError(family + " needs --n");
        }
        grid.n = ParamRange::parse(o.n, uses_l ? "ml" : "m");
    }

    const int modes = int(o.symbolic) + int(!o.values.empty()) + int(o.trials > 0);
    if (modes > 1) {
        throw UsageError("choose one of --symbolic, --values, --trials");
    }
    if (!o.values.empty()) {
        grid.mode = AssignmentMode::Explicit;
        grid.values = parse_values(o.values);
    } else if (o.trials > 0) {
        grid.mode = AssignmentMode::Random;
        grid.trials = o.trials;
    }
    if (o.seed_given && grid.mode != AssignmentMode::Random) {
        throw UsageError("--seed needs --trials");
    }
    grid.seed = o.seed;
    grid.allow_repeats = o.allow_repeats;
    if (o.max_size > 0) {
        if (grid.mode == AssignmentMode::Symbolic && grid.kind != FamilyKind::BinomialPascal) {
            grid.guards.symbolic = o.max_size;
        } else {
            grid.guards.numeric = o.max_size;
        }
    }
    return grid;
}

/// Output sink: the --out file when given, otherwise stdout.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback)
    {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) {
                throw UsageError("cannot open '" + path + "' for writing");
            }
            stream_ = &file_;
        }
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

template <class T, class F>
std::vector<T> parallel_map(const std::vector<GridPoint>& points, unsigned jobs, F&& f)
{
    std::vector<T> results(points.size());
    if (jobs <= 1 || points.size() <= 1) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            results[i] = f(points[i]);
        }
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const unsigned count = std::min<unsigned>(jobs, static_cast<unsigned>(points.size()));
    for (unsigned w = 0; w < count; ++w) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < points.size(); i = next++) {
                results[i] = f(points[i]);
            }
        });
    }
    for (auto& t : workers) {
        t.join();
    }
    return results;
}

double elapsed_ms(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string format_ms(double ms)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << ms;
    return os.str();
}

Json summary_record(std::string_view command, const GridSpec& grid, const RunSummary& s)
{
    Json j;
    j["type"] = "summary";
    j["command"] = std::string(command);
    j["tool"] = "vdet";
    j["version"] = std::string(kToolVersion);
    j["family"] = std::string(to_string(grid.kind));
    if (grid.mode == AssignmentMode::Random) {
        j["seed"] = grid.seed;
        j["trials"] = grid.trials;
    }
    j["points"] = s.points;
    j["equal"] = s.equal;
    j["unequal"] = s.unequal;
    j["skipped"] = s.skipped;
    j["errors"] = s.errors;
    j["passed"] = s.passed();
    return j;
}

std::string summary_line(std::string_view command, const RunSummary& s, std::string_view equal_word)
{
    std::ostringstream os;
    os << command << ": " << s.points << " points, " << s.equal << ' ' << equal_word << ", " << s.unequal
       << " unequal, " << s.skipped << " skipped, " << s.errors << " errors";
    return os.str();
}

GridPoint single_point(const GridSpec& grid, std::string_view command)
{
    std::vector<GridPoint> points = expand(grid);
    if (points.size() != 1) {
        throw UsageError(std::string(command) + " needs exactly one parameter point, got "
                         + std::to_string(points.size()));
    }
    if (!points[0].skip_reason.empty()) {
        throw UsageError(points[0].skip_reason);
    }
    return points[0];
}

// --- build ----------------------------------------------------------------------------------

int cmd_build(const Options& o, std::ostream& out)
{
    const GridSpec grid = make_grid(o);
    const GridPoint point = single_point(grid, "build");
    const AnyMatrix matrix = build(point.spec);
    Sink sink(o.out_path, out);
    if (o.format == "text") {
        *sink << std::visit([](const auto& a) { return render(a); }, matrix) << '\n';
    } else {
        *sink << to_json(matrix, variable_count(point.spec)).dump() << '\n';
    }
    return kExitPass;
}

// --- verify ---------------------------------------------------------------------------------

struct CertificateOutcome {
    Engine engine = Engine::PowerDerivative;
    std::string status; ///< "valid", "invalid" or "rejected"
    std::string reason;
    CertificateReport report;
};

struct VerifyOutcome {
    std::string verdict; ///< equal, unequal, skipped, error
    std::string reason;
    VerificationReport report;
    std::vector<CertificateOutcome> certificates;
    double ms = 0;
};

CertificateOutcome certify(const FamilySpec& spec, Engine engine)
{
    CertificateOutcome c{engine, {}, {}, {}};
    try {
        const AnyReduction red = reduce(spec, engine);
        c.report = check_reduction(spec, red, spec.is_symbolic() && matrix_size(spec) <= 6);
        const bool ok = c.report.valid && c.report.matches_closed_form && c.report.prefixes_valid;
        c.status = ok ? "valid" : "invalid";
    } catch (const ReductionError& e) {
        c.status = "rejected";
        c.reason = e.what();
    }
    return c;
}

VerifyOutcome verify_point(const GridPoint& point, const GridSpec& grid, const std::vector<Engine>& engines)
{
    VerifyOutcome outcome;
    if (!point.skip_reason.empty()) {
        outcome.verdict = "skipped";
        outcome.reason = point.skip_reason;
        return outcome;
    }
    const auto start = std::chrono::steady_clock::now();
    try {
        outcome.report = verify_identity(point.spec, grid.guards);
        bool ok = outcome.report.equal;
        for (Engine e : engines) {
            outcome.certificates.push_back(certify(point.spec, e));
            ok = ok && outcome.certificates.back().status != "invalid";
        }
        outcome.verdict = ok ? "equal" : "unequal";
    } catch (const std::exception& e) {
        outcome.verdict = "error";
        outcome.reason = e.what();
    }
    outcome.ms = elapsed_ms(start);
    return outcome;
}

void tally(RunSummary& s, const std::string& verdict)
{
    ++s.points;
    if (verdict == "equal") {
        ++s.equal;
    } else if (verdict == "unequal") {
        ++s.unequal;
    } else if (verdict == "skipped") {
        ++s.skipped;
    } else {
        ++s.errors;
    }
}

std::vector<Engine> selected_engines(const Options& o, FamilyKind kind)
{
    if (o.engine.empty()) {
        return engines_for(kind);
    }
    Engine e{};
    try {
        e = parse_engine(o.engine);
    } catch (const SpecError& ex) {
        throw UsageError(ex.what());
    }
    if (engine_family(e) != kind) {
        throw UsageError("engine " + std::string(to_string(e)) + " does not reduce " + std::string(to_string(kind)));
    }
    return {e};
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err)
{
    const GridSpec grid = make_grid(o);
    if (!o.engine.empty() && !o.certify) {
        throw UsageError("--engine needs --certify");
    }
    const std::vector<Engine> engines = o.certify ? selected_engines(o, grid.kind) : std::vector<Engine>{};
    const std::vector<GridPoint> points = expand(grid);
    const auto outcomes = parallel_map<VerifyOutcome>(
        points, o.jobs, [&](const GridPoint& p) { return verify_point(p, grid, engines); });

    Sink sink(o.out_path, out);
    RunSummary summary;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const GridPoint& p = points[i];
        const VerifyOutcome& r = outcomes[i];
        tally(summary, r.verdict);
        if (o.format == "text") {
            *sink << '#' << p.index << ' ' << describe(p.spec) << ": " << r.verdict;
            if (r.verdict == "equal") {
                *sink << "  det = " << r.report.det_oracle;
            } else if (r.verdict == "unequal") {
                *sink << "  oracle = " << r.report.det_oracle << "  closed form = " << r.report.det_closed_form;
            } else {
                *sink << " (" << r.reason << ')';
            }
            for (const auto& c : r.certificates) {
                *sink << "  [" << to_string(c.engine) << ": " << c.status << ']';
            }
            if (o.timings && r.verdict != "skipped") {
                *sink << "  " << format_ms(r.ms) << " ms";
            }
            *sink << '\n';
            continue;
        }
        Json j;
        j["type"] = "verify";
        j["index"] = p.index;
        j["spec"] = to_json(p.spec);
        if (r.verdict == "equal" || r.verdict == "unequal") {
            j["size"] = r.report.size;
            j["ring"] = r.report.ring;
            j["det_closed_form"] = r.report.det_closed_form;
            j["det_oracle"] = r.report.det_oracle;
        }
        j["verdict"] = r.verdict;
        if (!r.reason.empty()) {
            j["reason"] = r.reason;
        }
        if (!r.certificates.empty()) {
            Json certs = Json::array();
            for (const auto& c : r.certificates) {
                Json cj;
                cj["engine"] = std::string(to_string(c.engine));
                cj["status"] = c.status;
                if (c.status == "rejected") {
                    cj["reason"] = c.reason;
                } else {
                    cj["total"] = c.report.total;
                    cj["matches_closed_form"] = c.report.matches_closed_form;
                }
                certs.push_back(std::move(cj));
            }
            j["certificates"] = std::move(certs);
        }
        if (o.timings && r.verdict != "skipped") {
            j["wall_time_ms"] = format_ms(r.ms);
        }
        *sink << j.dump() << '\n';
    }
    if (o.format == "text") {
        *sink << summary_line("verify", summary, "equal") << '\n';
    } else {
        *sink << summary_record("verify", grid, summary).dump() << '\n';
    }
    if (o.format != "text" || !o.out_path.empty()) {
        err << summary_line("verify", summary, "equal") << '\n';
    }
    return exit_code(summary);
}

// --- trace ----------------------------------------------------------------------------------

template <class R>
void print_trace_text(std::ostream& os, const Reduction<R>& red)
{
    std::size_t i = 0;
    for (const auto& s : red.trace.stages) {
        os << std::setw(5) << ++i << "  " << std::left << std::setw(8) << s.label << std::right << " level "
           << s.level << "  " << describe(s.op);
        if (s.factor) {
            os << "  factor " << to_string(*s.factor);
        }
        if (s.sign_delta != 1) {
            os << "  sign -1";
        }
        os << "  -> " << s.rows << 'x' << s.cols << '\n';
    }
    const auto& c = red.certificate;
    os << "certificate: sign " << (c.sign > 0 ? "+1" : "-1") << ", factors [";
    for (std::size_t k = 0; k < c.factors.size(); ++k) {
        os << (k == 0 ? "" : ", ") << to_string(c.factors[k].value);
    }
    os << "], residual " << c.residual.rows() << 'x' << c.residual.cols() << '\n';
}

int cmd_trace(const Options& o, std::ostream& out)
{
    const GridSpec grid = make_grid(o);
    const GridPoint point = single_point(grid, "trace");
    const Engine engine = selected_engines(o, grid.kind).front();
    AnyReduction red;
    try {
        red = reduce(point.spec, engine, TraceOptions{8, o.full_snapshots});
    } catch (const ReductionError& e) {
        throw UsageError(e.what());
    }
    const CertificateReport check = check_reduction(point.spec, red, matrix_size(point.spec) <= 6);
    const bool ok = check.valid && check.residual_empty && check.matches_closed_form && check.prefixes_valid;

    Sink sink(o.out_path, out);
    if (o.format == "text") {
        *sink << "trace " << to_string(engine) << " on " << describe(point.spec) << '\n';
        std::visit([&](const auto& r) { print_trace_text(*sink, r); }, red);
        *sink << "total: " << check.total << '\n';
        *sink << "check: " << (check.valid ? "valid" : "INVALID") << ", "
              << (check.matches_closed_form ? "matches" : "DIFFERS FROM") << " closed form";
        if (check.prefixes_checked) {
            *sink << ", " << *check.prefixes_checked << " prefixes valid";
        } else if (!check.prefixes_valid) {
            *sink << ", PREFIX FAILURE";
        }
        *sink << '\n';
        return ok ? kExitPass : kExitCheckFailed;
    }
    Json j;
    j["type"] = "trace";
    j["spec"] = to_json(point.spec);
    j["engine"] = std::string(to_string(engine));
    std::visit(
        [&](const auto& r) {
            using R = typename std::decay_t<decltype(r.trace.original)>::Scalar;
            Ring<R> ring{};
            if constexpr (std::is_same_v<R, MultiPoly>) {
                ring.variable_count = variable_count(point.spec);
            }
            const Json trace = to_json(r.trace, ring);
            j["original"] = trace["original"];
            j["stages"] = trace["stages"];
            j["certificate"] = to_json(r.certificate, ring);
        },
        red);
    Json cj;
    cj["valid"] = check.valid;
    cj["residual_empty"] = check.residual_empty;
    cj["matches_closed_form"] = check.matches_closed_form;
    if (check.prefixes_checked) {
        cj["prefixes_checked"] = *check.prefixes_checked;
    }
    cj["prefixes_valid"] = check.prefixes_valid;
    j["check"] = std::move(cj);
    *sink << j.dump() << '\n';
    return ok ? kExitPass : kExitCheckFailed;
}

// --- bench ----------------------------------------------------------------------------------

struct BenchOutcome {
    std::string verdict;
    std::string reason;
    Index size = 0;
    double bareiss_ms = 0;
    double closed_form_ms = 0;
};

BenchOutcome bench_point(const GridPoint& point)
{
    BenchOutcome b;
    if (!point.skip_reason.empty()) {
        b.verdict = "skipped";
        b.reason = point.skip_reason;
        return b;
    }
    try {
        const auto a = std::get<Matrix<Rational>>(build(point.spec));
        b.size = a.rows();
        auto start = std::chrono::steady_clock::now();
        const Rational oracle = det_bareiss(a, RationalRing{});
        b.bareiss_ms = elapsed_ms(start);
        start = std::chrono::steady_clock::now();
        const Rational closed = std::get<Rational>(closed_form_det(point.spec));
        b.closed_form_ms = elapsed_ms(start);
        b.verdict = oracle == closed ? "equal" : "unequal";
    } catch (const std::exception& e) {
        b.verdict = "error";
        b.reason = e.what();
    }
    return b;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err)
{
    const GridSpec grid = make_grid(o);
    if (grid.mode == AssignmentMode::Symbolic && grid.kind != FamilyKind::BinomialPascal) {
        throw UsageError("bench needs numeric assignments (--values or --trials); symbolic grids are rejected");
    }
    const std::vector<GridPoint> points = expand(grid);
    const auto outcomes = parallel_map<BenchOutcome>(points, o.jobs, bench_point);

    Sink sink(o.out_path, out);
    RunSummary summary;
    double total_bareiss = 0;
    double total_closed = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const GridPoint& p = points[i];
        const BenchOutcome& b = outcomes[i];
        tally(summary, b.verdict);
        total_bareiss += b.bareiss_ms;
        total_closed += b.closed_form_ms;
        const bool ran = b.verdict == "equal" || b.verdict == "unequal";
        if (ran) {
            err << '#' << p.index << ' ' << b.size << 'x' << b.size << "  bareiss " << format_ms(b.bareiss_ms)
                << " ms  closed form " << format_ms(b.closed_form_ms) << " ms  " << b.verdict << '\n';
        }
        if (o.format == "text") {
            *sink << '#' << p.index << ' ' << describe(p.spec) << ": "
                  << (b.verdict == "equal" ? "agree" : b.verdict);
            if (!b.reason.empty()) {
                *sink << " (" << b.reason << ')';
            }
            if (o.timings && ran) {
                *sink << "  bareiss " << format_ms(b.bareiss_ms) << " ms  closed form " << format_ms(b.closed_form_ms)
                      << " ms";
            }
            *sink << '\n';
            continue;
        }
        Json j;
        j["type"] = "bench";
        j["index"] = p.index;
        j["spec"] = to_json(p.spec);
        if (ran) {
            j["size"] = b.size;
            j["agree"] = b.verdict == "equal";
        }
        j["verdict"] = b.verdict;
        if (!b.reason.empty()) {
            j["reason"] = b.reason;
        }
        if (o.timings && ran) {
            j["bareiss_ms"] = format_ms(b.bareiss_ms);
            j["closed_form_ms"] = format_ms(b.closed_form_ms);
        }
        *sink << j.dump() << '\n';
    }
    if (o.format == "text") {
        *sink << summary_line("bench", summary, "agree") << '\n';
    } else {
        *sink << summary_record("bench", grid, summary).dump() << '\n';
    }
    err << summary_line("bench", summary, "agree") << "; total bareiss " << format_ms(total_bareiss)
        << " ms, closed form " << format_ms(total_closed) << " ms\n";
    return exit_code(summary);
}

void add_common(CLI::App* sub, Options& o)
{
    sub->add_option("--family", o.family, "PowerDerivative | PowerDerivativeShifted | BinomialPower | BinomialPascal")
        ->required();
    sub->add_option("--m", o.m, "m values: 3, 1..4, 1,3,5")->required();
    sub->add_option("--n", o.n, "n values; may use m and l, e.g. l, l+2, m..12");
    sub->add_option("--l", o.l, "l values; may use m");
    sub->add_flag("--symbolic", o.symbolic, "use the indeterminates X1..Xm (default)");
    sub->add_option("--values", o.values, "explicit values p/q,p/q,...");
    sub->add_option("--trials", o.trials, "random rational assignments per parameter point")->check(CLI::PositiveNumber);
    sub->add_option_function<std::uint64_t>(
        "--seed", [&o](const std::uint64_t& s) { o.seed = s, o.seed_given = true; }, "seed for --trials");
    sub->add_flag("--allow-repeats", o.allow_repeats, "do not force random values to be distinct");
    sub->add_option("--max-size", o.max_size, "size guard for this run's mode (defaults: symbolic 8, numeric 40)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out_path, "write the report here instead of stdout");
    sub->add_option("--format", o.format, "json | text")->check(CLI::IsMember({"json", "text"}));
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact structured-determinant verifier", "vdet"};
    app.set_version_flag("--version", std::string("vdet ") + std::string(kToolVersion));
    app.require_subcommand(1);

    CLI::App* build_cmd = app.add_subcommand("build", "print a family matrix");
    add_common(build_cmd, o);

    CLI::App* verify_cmd = app.add_subcommand("verify", "compare closed forms with Bareiss over a grid");
    add_common(verify_cmd, o);
    verify_cmd->add_flag("--certify", o.certify, "also run the reduction engines and check their certificates");
    verify_cmd->add_option("--engine", o.engine, "with --certify, run only this engine");
    verify_cmd->add_flag("--timings", o.timings, "include wall times in the report (not reproducible)");
    verify_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

    CLI::App* trace_cmd = app.add_subcommand("trace", "replay a reduction and print its trace and certificate");
    add_common(trace_cmd, o);
    trace_cmd->add_option("--engine", o.engine, "thm1 | cor2 | thm3-m | thm3-l | pascal");
    trace_cmd->add_flag("--full-snapshots", o.full_snapshots, "store every intermediate matrix");

    CLI::App* bench_cmd = app.add_subcommand("bench", "time Bareiss against the closed form on numeric grids");
    add_common(bench_cmd, o);
    bench_cmd->add_flag("--timings", o.timings, "include wall times in the report (not reproducible)");
    bench_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (build_cmd->parsed()) {
            return cmd_build(o, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(o, out, err);
        }
        if (trace_cmd->parsed()) {
            return cmd_trace(o, out);
        }
        return cmd_bench(o, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SpecError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
}

} // namespace vdet::cli
