#include "visorlab/cli/commands.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>

#include <CLI11.hpp>

#include "visorlab/card_template.hpp"
#include "visorlab/cli/verify.hpp"
#include "visorlab/envelopes.hpp"
#include "visorlab/fold3d.hpp"
#include "visorlab/fold_obj.hpp"
#include "visorlab/format.hpp"
#include "visorlab/polyline_csv.hpp"
#include "visorlab/svg.hpp"

namespace visorlab::cli {

namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

fs::path prepare_output(const RunConfig& config) {
    const fs::path dir = output_directory(config);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw ConfigError("cannot create output directory '" + dir.string() + "'");
    }
    return dir;
}

void write_file(const fs::path& path, const std::string& contents) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    file << contents;
    if (!file) {
        throw ConfigError("cannot write '" + path.string() + "'");
    }
}

FoldAngle checked_angle(double degrees) {
    if (!(degrees >= 0.0 && degrees <= 180.0)) {
        throw ArgumentError("fold angle must lie in [0, 180] degrees, got " + format_general(degrees, 10));
    }
    return FoldAngle::from_degrees(degrees);
}

// Colour ramp from blue (first) to red (last).
std::string ramp_colour(std::size_t index, std::size_t count) {
    const double t = count > 1 ? static_cast<double>(index) / static_cast<double>(count - 1) : 0.0;
    const auto channel = [](double v) { return static_cast<int>(std::lround(255.0 * v)); };
    std::array<char, 8> buf{};
    std::snprintf(buf.data(), buf.size(), "#%02x%02x%02x", channel(t), channel(0.2), channel(1.0 - t));
    return buf.data();
}

}  // namespace

std::vector<double> default_sweep_degrees() {
    std::vector<double> degrees;
    for (int k = 0; k <= 8; ++k) {
        degrees.push_back(22.5 * k);
    }
    return degrees;
}

std::string angle_label(double degrees) { return format_general(degrees, 10); }

int cmd_template(const RunConfig& config, std::ostream& out) {
    config.validate();
    const SvgDocument doc = make_template(config.card);
    const fs::path path = prepare_output(config) / "template.svg";
    write_file(path, doc.str());
    out << "template: " << doc.count(StrokeClass::Cut) << " cuts, " << doc.count(StrokeClass::Mountain)
        << " mountain creases, " << doc.count(StrokeClass::Valley) << " valley creases -> " << path.string() << '\n';
    return kExitOk;
}

int cmd_curve(const RunConfig& config, double alpha_deg, std::ostream& out) {
    config.validate();
    const FoldAngle alpha = checked_angle(alpha_deg);
    const fs::path dir = prepare_output(config);
    const std::string stem = "curve_alpha_" + angle_label(alpha_deg);

    FigureOptions figure;
    figure.unit_circle = true;
    figure.x_axis = true;
    std::string csv;
    Polyline2 shown;
    if (alpha.radians() == 0.0) {
        shown = sample_flat_curve(config.samples, config.grid);
        csv = export_polyline_csv(shown);
    } else {
        const Polyline3 rim = sample_fold_curve(alpha, config.samples, config.grid);
        csv = export_polyline_csv(rim);
        shown = project_xy(rim);
    }
    const std::string obj_name = "fold_alpha_" + angle_label(alpha_deg) + ".obj";
    write_file(dir / (stem + ".csv"), csv);
    write_file(dir / (stem + ".svg"), export_curve_svg({shown}, {}, figure).str());
    write_file(dir / obj_name, export_fold_obj(alpha, config.card, static_cast<std::size_t>(config.card.rib_count)));
    out << "curve alpha=" << angle_label(alpha_deg) << " deg: " << config.samples << " samples ("
        << (alpha.radians() == 0.0 ? "flat" : "3D") << ") -> " << (dir / (stem + ".csv")).string() << ", "
        << (dir / (stem + ".svg")).string() << '\n'
        << "curve: folded card with " << config.card.rib_count << " ribs -> " << (dir / obj_name).string() << '\n';
    return kExitOk;
}

int cmd_sweep(const RunConfig& config, const std::vector<double>& alphas_deg, std::ostream& out) {
    config.validate();
    if (alphas_deg.empty()) {
        throw ArgumentError("sweep: the list of fold angles is empty");
    }
    std::vector<FoldAngle> alphas;
    for (double deg : alphas_deg) {
        alphas.push_back(checked_angle(deg));
    }
    const fs::path dir = prepare_output(config);

    std::vector<Polyline2> projections;
    std::vector<CurveStyle> styles;
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        const Polyline3 rim = sample_fold_curve(alphas[k], config.samples, config.grid);
        std::array<char, 24> index{};
        std::snprintf(index.data(), index.size(), "%02zu", k);
        const fs::path path = dir / ("sweep_" + std::string(index.data()) + "_alpha_" + angle_label(alphas_deg[k]) + ".csv");
        write_file(path, export_polyline_csv(rim));
        out << "sweep: " << path.string() << '\n';
        projections.push_back(project_xy(rim));
        styles.push_back({ramp_colour(k, alphas.size()), StrokeClass::Cut});
    }
    FigureOptions figure;
    figure.unit_circle = true;
    figure.x_axis = true;
    write_file(dir / "sweep.svg", export_curve_svg(projections, styles, figure).str());
    out << "sweep: " << alphas.size() << " curves, combined figure -> " << (dir / "sweep.svg").string() << '\n';
    return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
    config.validate();
    VerifyOptions options;
    options.samples = config.samples;
    options.grid = config.grid;
    options.tolerance = config.tolerance;
    options.tolerances = config.tolerances;
    const VerifyReport report = run_verification(options);
    const std::string text = report.str();
    out << text;
    write_file(prepare_output(config) / "verify_report.txt", text);
    if (report.low_coverage) {
        out << "verify: low coverage with samples=" << config.samples << "; results are indicative only\n";
    }
    if (const CheckResult* failed = report.first_failure()) {
        out << "verify: FAILED " << failed->name << " (max residual " << format_general(failed->max_residual, 6)
            << ", tolerance " << (failed->exact ? std::string("exact") : format_general(failed->tolerance, 6))
            << ")\n";
        return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_caustic(const RunConfig& config, std::ostream& out) {
    config.validate();
    if (config.samples < 3) {
        throw ArgumentError("caustic: needs samples >= 3");
    }
    const EnvelopeResult caustic = caustic_curve(config.samples);
    const Point2 cusp = caustic_cusp(caustic.curve);

    double worst = 0.0;
    for (Point2 p : caustic.curve.points()) {
        if (std::abs(p.x) > 1e-2 || std::abs(p.y) < 0.45) {
            worst = std::max(worst, std::abs(half_nephroid_residual(p)));
        }
    }
    std::size_t low_confidence = 0;
    for (bool flag : caustic.low_confidence) {
        low_confidence += flag ? 1 : 0;
    }

    FigureOptions figure;
    figure.unit_circle = true;
    figure.x_axis = true;
    const std::size_t rays = std::min<std::size_t>(config.samples, 41);
    for (std::size_t j = 1; j <= rays; ++j) {
        const double s = -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(rays + 1);
        const Point2 hit = rib_base(s);
        const Point2 d = reflect_ray_in_circle(s).direction();
        const Point2 exit = hit + (-2.0 * dot(hit, d)) * d;
        figure.guide_segments.push_back({{s, 0.0}, hit});
        figure.guide_segments.push_back({hit, exit});
    }
    const fs::path dir = prepare_output(config);
    write_file(dir / "caustic.csv", export_polyline_csv(caustic.curve));
    write_file(dir / "caustic.svg", export_curve_svg({caustic.curve}, {{"#d35400", StrokeClass::Cut}}, figure).str());

    out << "caustic: " << caustic.curve.size() << " envelope points (" << caustic.dropped.size() << " dropped, "
        << low_confidence << " low-confidence)\n"
        << "caustic: cusp at (" << format_fixed(cusp.x, 6) << ", " << format_fixed(cusp.y, 6) << ")\n"
        << "caustic: half-size nephroid residual max " << format_general(worst, 6) << " away from cusps\n"
        << "caustic: -> " << (dir / "caustic.csv").string() << ", " << (dir / "caustic.svg").string() << '\n';
    return kExitOk;
}

int cmd_epicycloid(const RunConfig& config, std::ostream& out) {
    config.validate();
    const std::size_t n = config.samples;
    std::vector<double> params(n);
    std::vector<Point2> points(n);
    double worst_residual = 0.0;
    double worst_identity = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n - 1);
        params[i] = t;
        points[i] = epicycloid_point(t);
        worst_residual = std::max(worst_residual, std::abs(implicit_residual(points[i])));
        if (t <= kPi) {
            worst_identity = std::max(worst_identity, distance(points[i], flat_visor_point(std::cos(t))));
        }
    }
    const Polyline2 curve(std::move(params), std::move(points));

    FigureOptions figure;
    figure.unit_circle = true;
    figure.x_axis = true;
    for (double t : {kPi / 6.0, kPi / 2.0, 5.0 * kPi / 6.0, 4.0 * kPi / 3.0}) {
        const Point2 centre{1.5 * std::cos(t), 1.5 * std::sin(t)};
        figure.guide_circles.push_back({centre, 0.5});
        figure.guide_segments.push_back({centre, epicycloid_point(t)});
    }
    const fs::path dir = prepare_output(config);
    write_file(dir / "epicycloid.csv", export_polyline_csv(curve));
    write_file(dir / "epicycloid.svg", export_curve_svg({curve}, {{"#8e44ad", StrokeClass::Cut}}, figure).str());
    out << "epicycloid: " << n << " samples; max implicit residual " << format_general(worst_residual, 6)
        << "; max distance to flat curve " << format_general(worst_identity, 6) << '\n'
        << "epicycloid: -> " << (dir / "epicycloid.csv").string() << ", " << (dir / "epicycloid.svg").string()
        << '\n';
    return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Knight's Visor pop-up card geometry: curves, folds, envelopes and templates", "visorlab"};
    app.require_subcommand(1);

    struct Flags {
        std::string config_path;
        std::optional<std::size_t> samples;
        std::optional<std::string> grid;
        std::optional<std::string> out_dir;
        std::optional<int> ribs;
        std::optional<double> radius_mm;
        std::optional<double> tolerance;
        double alpha_deg = 90.0;
        std::vector<double> alphas_deg;
    } flags;

    auto add_common = [&flags](CLI::App* sub) {
        sub->add_option("--config", flags.config_path, "JSON run configuration");
        sub->add_option("--samples", flags.samples, "Samples per curve / grid axis (>= 2)");
        sub->add_option("--grid", flags.grid, "Sampling grid: uniform-s or uniform-angle");
        sub->add_option("--out", flags.out_dir, "Output directory (default $VISORLAB_OUT_DIR or .)");
        sub->add_option("--ribs", flags.ribs, "Number of cuts in the template");
        sub->add_option("--radius-mm", flags.radius_mm, "Guide circle radius in mm");
        sub->add_option("--tolerance", flags.tolerance, "Override every verification tolerance");
    };

    CLI::App* tmpl = app.add_subcommand("template", "Write the printable cut/crease template (SVG)");
    CLI::App* curve = app.add_subcommand("curve", "Sample the rim at one fold angle (CSV + SVG)");
    CLI::App* sweep = app.add_subcommand("sweep", "Sample the rim at several fold angles");
    CLI::App* verify = app.add_subcommand("verify", "Run the invariant suite; exit 1 on any failure");
    CLI::App* caustic = app.add_subcommand("caustic", "Compute the caustic of parallel rays in the circle");
    CLI::App* epi = app.add_subcommand("epicycloid", "Trace the nephroid as an epicycloid");
    for (CLI::App* sub : {tmpl, curve, sweep, verify, caustic, epi}) {
        add_common(sub);
    }
    curve->add_option("--alpha", flags.alpha_deg, "Fold angle in degrees, 0 (closed) to 180 (open)")
        ->capture_default_str();
    sweep->add_option("--alpha", flags.alphas_deg, "Fold angle in degrees (repeatable)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        RunConfig config = flags.config_path.empty() ? RunConfig{} : load_config(flags.config_path);
        if (flags.samples) {
            config.samples = *flags.samples;
        }
        if (flags.grid) {
            config.grid = parse_grid(*flags.grid);
        }
        if (flags.out_dir) {
            config.output = *flags.out_dir;
        }
        if (flags.ribs) {
            config.card.rib_count = *flags.ribs;
        }
        if (flags.radius_mm) {
            config.card.circle_radius_mm = *flags.radius_mm;
        }
        if (flags.tolerance) {
            config.tolerance = *flags.tolerance;
        }
        config.validate();

        if (tmpl->parsed()) {
            return cmd_template(config, out);
        }
        if (curve->parsed()) {
            return cmd_curve(config, flags.alpha_deg, out);
        }
        if (sweep->parsed()) {
            std::vector<double> alphas = flags.alphas_deg;
            if (alphas.empty()) {
                alphas = config.alphas_deg.value_or(default_sweep_degrees());
            }
            return cmd_sweep(config, alphas, out);
        }
        if (verify->parsed()) {
            return cmd_verify(config, out);
        }
        if (caustic->parsed()) {
            return cmd_caustic(config, out);
        }
        return cmd_epicycloid(config, out);
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    } catch (const EnvelopeUndefinedError& e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
}

}  // namespace visorlab::cli
