#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "visorlab/core_curves.hpp"

namespace visorlab::cli {

struct CheckResult {
    std::string name;
    double max_residual = 0.0;
    /// Pass threshold; exact checks pass only at residual 0 and ignore tolerance overrides.
    double tolerance = 0.0;
    bool exact = false;
    std::size_t evaluated = 0;
    /// Not run because the sample count is too small for it.
    bool skipped = false;
    bool passed = false;
};

struct VerifyOptions {
    std::size_t samples = 101;
    Grid grid = Grid::UniformAngle;
    std::optional<double> tolerance;
    std::map<std::string, double> tolerances;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    /// Some checks were skipped or ran on fewer than kMinimumCoverage samples per axis.
    bool low_coverage = false;

    bool passed() const;
    /// First failing check, or nullptr.
    const CheckResult* first_failure() const;
    /// Fixed-format text table, one line per check.
    std::string str() const;
};

inline constexpr std::size_t kMinimumCoverage = 11;

/// Names of every check run_verification performs, in report order.
std::vector<std::string> verification_check_names();

/// Evaluates every invariant of the curve, fold and envelope constructions on grids of
/// `samples` points per axis and compares the worst residual against its tolerance.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace visorlab::cli
