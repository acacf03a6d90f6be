#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "visorlab/cli/config.hpp"

namespace visorlab::cli {

/// Process exit codes: success, a failed check, bad usage or configuration.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
};

/// Entry point for `visorlab <subcommand> [flags]`; args[0] is the program name.
/// Errors are reported on `err` and mapped to an ExitCode; nothing is thrown.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Subcommands. Each writes its files into output_directory(config) and prints a summary
// on `out`. Bad arguments throw ArgumentError (ConfigError for configuration problems).

/// template.svg: the printable cut/crease template.
int cmd_template(const RunConfig& config, std::ostream& out);

/// curve_alpha_<deg>.csv/.svg: the flat curve (alpha = 0) or the 3D rim, with its
/// projection onto the card back; fold_alpha_<deg>.obj: the folded card with its ribs.
int cmd_curve(const RunConfig& config, double alpha_deg, std::ostream& out);

/// sweep_<k>_alpha_<deg>.csv per angle plus sweep.svg overlaying their projections.
int cmd_sweep(const RunConfig& config, const std::vector<double>& alphas_deg, std::ostream& out);

/// Runs the invariant suite; prints the table and writes verify_report.txt.
/// Returns kExitCheckFailed when any check fails.
int cmd_verify(const RunConfig& config, std::ostream& out);

/// caustic.csv/.svg: reflected ray bundle and the computed caustic.
int cmd_caustic(const RunConfig& config, std::ostream& out);

/// epicycloid.csv/.svg: the rolling-circle construction of the full nephroid.
int cmd_epicycloid(const RunConfig& config, std::ostream& out);

/// Nine fold angles, uniform from 0 to 180 degrees.
std::vector<double> default_sweep_degrees();

/// File-name label for an angle in degrees, e.g. 90 -> "90", 22.5 -> "22.5".
std::string angle_label(double degrees);

}  // namespace visorlab::cli
