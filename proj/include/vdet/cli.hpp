#pragma once

// The vdet command-line tool as a library: subcommands build, verify, trace
// and bench over parameter grids.
//
// Exit codes: 0 every executed check passed, 1 some check failed,
// 2 usage error (bad flags, invalid single spec, symbolic bench).

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vdet/families.hpp"
#include "vdet/reduction.hpp"

namespace vdet::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Thrown for bad flag values; reported with exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A parameter value list such as "3", "1..4", "1,3,5", "l", "l+2" or "m..12".
/// Terms may refer to the point's m and l.
class ParamRange {
public:
    static ParamRange parse(std::string_view text, std::string_view allowed_names);
    std::vector<long> resolve(long m, long l) const;
    const std::string& text() const { return text_; }

private:
    struct Term {
        char name = 0; ///< 0, 'm' or 'l'
        long offset = 0;
        long eval(long m, long l) const;
    };
    std::vector<std::pair<Term, Term>> pieces_;
    std::string text_;
};

enum class AssignmentMode { Symbolic, Random, Explicit };

struct GridSpec {
    FamilyKind kind = FamilyKind::PowerDerivative;
    ParamRange m;
    std::optional<ParamRange> n;
    std::optional<ParamRange> l;
    AssignmentMode mode = AssignmentMode::Symbolic;
    std::uint64_t seed = 0;
    long trials = 1;
    bool allow_repeats = false;
    std::vector<Rational> values;
    SizeGuards guards;
};

struct GridPoint {
    std::size_t index = 0; ///< 1-based position in grid order
    FamilySpec spec;
    std::string skip_reason; ///< empty when the point runs
};

/// Grid order: m, then l, then n, then trial. Random assignments are drawn from
/// one sampler in that order, so a seed fixes every point.
std::vector<GridPoint> expand(const GridSpec& grid);

struct RunSummary {
    std::size_t points = 0;
    std::size_t equal = 0;
    std::size_t unequal = 0;
    std::size_t skipped = 0;
    std::size_t errors = 0;

    bool passed() const { return unequal == 0 && errors == 0; }
};

int exit_code(const RunSummary& summary);

/// Runs the tool; args exclude the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace vdet::cli
