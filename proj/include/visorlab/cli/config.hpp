#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "visorlab/card_template.hpp"
#include "visorlab/core_curves.hpp"
#include "visorlab/errors.hpp"

namespace visorlab::cli {

/// Malformed or out-of-range configuration (JSON file or flags).
class ConfigError : public ArgumentError {
  public:
    explicit ConfigError(const std::string& what) : ArgumentError(what) {}
};

/// Run parameters shared by all subcommands. The JSON config file uses the same field names:
///
///   { "card": { "circle_radius_mm": 30, "rib_count": 24, "card_width_mm": 150,
///               "card_height_mm": 100, "margin_mm": 10 },
///     "samples": 101, "grid": "uniform-angle", "tolerance": 1e-9,
///     "tolerances": { "fold.cone_rim": 1e-9 }, "output": "out", "alphas": [0, 90, 180] }
///
/// Every field is optional. Angles are in degrees.
struct RunConfig {
    CardSpec card;
    std::size_t samples = 101;
    Grid grid = Grid::UniformAngle;
    /// Replaces the tolerance of every verification check that has one.
    std::optional<double> tolerance;
    /// Per-check tolerance overrides, keyed by check name.
    std::map<std::string, double> tolerances;
    /// Output directory; empty means $VISORLAB_OUT_DIR, then the working directory.
    std::string output;
    /// Fold angles for `sweep`, in degrees; empty means the default sweep.
    std::optional<std::vector<double>> alphas_deg;

    void validate() const;
};

/// Parses JSON config text on top of the defaults. Throws ConfigError with a diagnostic.
RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::filesystem::path& path);

/// --out / "output" / $VISORLAB_OUT_DIR / ".", in that order.
std::filesystem::path output_directory(const RunConfig& config);

}  // namespace visorlab::cli
