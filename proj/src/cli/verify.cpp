#include "visorlab/cli/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>

#include "visorlab/envelopes.hpp"
#include "visorlab/fold3d.hpp"

namespace visorlab::cli {

namespace {

constexpr double kPi = std::numbers::pi;

struct Measured {
    double max_residual = 0.0;
    std::size_t evaluated = 0;

    void add(double residual) {
        max_residual = std::max(max_residual, std::abs(residual));
        ++evaluated;
    }
};

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> v(n);
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double last = static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = mid + half * ((2.0 * static_cast<double>(i) - last) / last);
    }
    return v;
}

double max_abs(Point2 d) { return std::max(std::abs(d.x), std::abs(d.y)); }

// Envelope runs include s = 0 so the caustic cusp is sampled.
std::size_t envelope_samples(std::size_t n) { return n | 1U; }

// Envelope runs are shared between the checks of one verification run.
class EnvelopeCache {
  public:
    explicit EnvelopeCache(std::size_t n) : n_(envelope_samples(n)) {}

    const EnvelopeResult& caustic() {
        if (!caustic_) {
            caustic_ = caustic_curve(n_);
        }
        return *caustic_;
    }

    const EnvelopeResult& visor() {
        if (!visor_) {
            visor_ = circle_family_envelope(visor_circle_family(), n_);
        }
        return *visor_;
    }

  private:
    std::size_t n_;
    std::optional<EnvelopeResult> caustic_;
    std::optional<EnvelopeResult> visor_;
};

struct Check {
    const char* name;
    double tolerance;
    bool exact;
    /// Smallest `samples` value the check can run with.
    std::size_t min_samples;
    std::function<Measured(std::size_t n, Grid grid, EnvelopeCache& cache)> run;
};

std::vector<Check> make_checks() {
    std::vector<Check> checks;

    // Flat curve.
    checks.push_back({"flat.implicit_residual", 1e-9, false, 2, [](std::size_t n, Grid g, EnvelopeCache&) {
                          Measured m;
                          for (double s : rib_params(n, g)) {
                              m.add(implicit_residual(flat_visor_point(s)));
                          }
                          return m;
                      }});
    checks.push_back({"flat.named_points", 1e-12, false, 2, [](std::size_t, Grid, EnvelopeCache&) {
                          Measured m;
                          m.add(max_abs(flat_visor_point(0.0) - Point2{0.0, 2.0}));
                          m.add(max_abs(flat_visor_point(1.0) - Point2{1.0, 0.0}));
                          m.add(max_abs(flat_visor_point(-1.0) - Point2{-1.0, 0.0}));
                          return m;
                      }});
    checks.push_back({"flat.rib_length_preserved", 1e-12, false, 2, [](std::size_t n, Grid g, EnvelopeCache&) {
                          Measured m;
                          for (double s : rib_params(n, g)) {
                              m.add(distance(flat_visor_point(s), rib_base(s)) - rib_length(s));
                          }
                          return m;
                      }});
    checks.push_back({"flat.two_thirds_residual", 1e-9, false, 2, [](std::size_t n, Grid g, EnvelopeCache&) {
                          Measured m;
                          for (double s : rib_params(n, g)) {
                              m.add(two_thirds_residual(flat_visor_point(s)));
                          }
                          return m;
                      }});
    checks.push_back({"flat.standard_form_identity", 1e-12, false, 2, [](std::size_t n, Grid, EnvelopeCache&) {
                          Measured m;
                          for (double x : linspace(-2.0, 2.0, n)) {
                              for (double y : linspace(-2.0, 2.0, n)) {
                                  const double reference = implicit_residual({x, y});
                                  m.add((nephroid_standard_residual({x, y}, 0.5) - reference) /
                                        std::max(1.0, std::abs(reference)));
                              }
                          }
                          return m;
                      }});
    checks.push_back({"flat.epicycloid_identity", 1e-12, false, 2, [](std::size_t n, Grid, EnvelopeCache&) {
                          Measured m;
                          for (double t : linspace(0.0, kPi, n)) {
                              m.add(max_abs(epicycloid_point(t) - flat_visor_point(std::cos(t))));
                          }
                          return m;
                      }});
    checks.push_back({"flat.tangency", 1e-6, false, 2, [](std::size_t n, Grid, EnvelopeCache&) {
                          Measured m;
                          const double h = 1e-6;
                          for (double s : linspace(-1.0 + 1e-3, 1.0 - 1e-3, n)) {
                              const Point2 derivative = (0.5 / h) * (flat_visor_point(s + h) - flat_visor_point(s - h));
                              m.add(dot(flat_visor_point(s) - rib_base(s), derivative));
                          }
                          return m;
                      }});
    checks.push_back({"flat.midpoint_on_tangent", 1e-12, false, 2, [](std::size_t n, Grid g, EnvelopeCache&) {
                          Measured m;
                          for (double s : rib_params(n, g)) {
                              m.add(tangent_line(s).residual(reflection_midpoint(s)));
                          }
                          return m;
                      }});
    checks.push_back({"flat.midpoint_direction", 1e-12, false, 2, [](std::size_t n, Grid g, EnvelopeCache&) {
                          Measured m;
                          for (double s : rib_params(n, g)) {
                              m.add(cross(reflection_midpoint(s) - Point2{s, 0.0}, rib_base(s)));
                          }
                          return m;
                      }});
    checks.push_back({"flat.y_axis_symmetry", 0.0, true, 2, [](std::size_t n, Grid g, EnvelopeCache&) {
                          Measured m;
                          for (double s : rib_params(n, g)) {
                              const Point2 p = flat_visor_point(s);
                              const Point2 q = flat_visor_point(-s);
                              m.add(std::abs(p.x + q.x) + std::abs(p.y - q.y));
                          }
                          return m;
                      }});
    checks.push_back({"flat.kidney_mirror", 1e-9, false, 2, [](std::size_t n, Grid g, EnvelopeCache&) {
                          Measured m;
                          const Polyline2 lower = mirror_over_axis(sample_flat_curve(n, g));
                          for (Point2 p : lower.points()) {
                              m.add(implicit_residual(p));
                          }
                          return m;
                      }});

    // 3D rim.
    checks.push_back({"fold.closed_vs_numeric", 1e-8, false, 2, [](std::size_t n, Grid, EnvelopeCache&) {
                          Measured m;
                          for (double s : linspace(-0.999, 0.999, n)) {
                              for (double a : linspace(0.01, kPi - 0.01, n)) {
                                  m.add(distance(visor_point_3d(s, a), visor_point_3d_numeric(s, a)));
                              }
                          }
                          return m;
                      }});
    checks.push_back({"fold.sphere_back", 1e-9, false, 2, [](std::size_t n, Grid g, EnvelopeCache&) {
                          Measured m;
                          for (double s : rib_params(n, g)) {
                              const Point3 b = embed(rib_base(s));
                              for (double a : linspace(0.0, kPi, n)) {
                                  const Point3 d = visor_point_3d(s, a) - b;
                                  m.add(dot(d, d) - (1.0 - s * s));
                              }
                          }
                          return m;
                      }});
    checks.push_back({"fold.sphere_front", 1e-9, false, 2, [](std::size_t n, Grid g, EnvelopeCache&) {
                          Measured m;
                          for (double s : rib_params(n, g)) {
                              for (double a : linspace(0.0, kPi, n)) {
                                  const Point3 d = visor_point_3d(s, a) - front_anchor(s, a);
                                  m.add(dot(d, d) - (1.0 - s * s));
                              }
                          }
                          return m;
                      }});
    checks.push_back({"fold.medial_plane", 1e-12, false, 2, [](std::size_t n, Grid g, EnvelopeCache&) {
                          Measured m;
                          for (double s : rib_params(n, g)) {
                              for (double a : linspace(0.0, kPi, n)) {
                                  if (a < kPi) {
                                      const Point3 p = visor_point_3d(s, a);
                                      m.add(p.z * std::cos(0.5 * a) - p.y * std::sin(0.5 * a));
                                  }
                              }
                          }
                          return m;
                      }});
    checks.push_back({"fold.plane_v", 1e-9, false, 2, [](std::size_t n, Grid g, EnvelopeCache&) {
                          Measured m;
                          for (double s : rib_params(n, g)) {
                              if (s == 0.0 || std::abs(s) == 1.0) {
                                  continue;
                              }
                              const double r = rib_length(s);
                              for (double a : linspace(0.0, kPi, n)) {
                                  const Point3 p = visor_point_3d(s, a);
                                  m.add(r * p.x - s * p.y - r * s);
                              }
                          }
                          return m;
                      }});
    checks.push_back({"fold.cone_rim", 1e-9, false, 2, [](std::size_t n, Grid g, EnvelopeCache&) {
                          Measured m;
                          for (double s : rib_params(n, g)) {
                              const Point3 c = embed(reflection_midpoint(s));
                              for (double a : linspace(0.0, kPi, n)) {
                                  m.add(distance(visor_point_3d(s, a), c) - (1.0 - s * s));
                              }
                          }
                          return m;
                      }});
    checks.push_back({"fold.boundary_open", 1e-9, false, 2, [](std::size_t n, Grid g, EnvelopeCache&) {
                          Measured m;
                          for (double s : rib_params(n, g)) {
                              m.add(distance(visor_point_3d(s, kPi), Point3{s, 0.0, 0.0}));
                          }
                          return m;
                      }});
    checks.push_back({"fold.boundary_closed", 1e-9, false, 2, [](std::size_t n, Grid g, EnvelopeCache&) {
                          Measured m;
                          for (double s : rib_params(n, g)) {
                              m.add(distance(visor_point_3d(s, 0.0), embed(flat_visor_point(s))));
                          }
                          return m;
                      }});
    checks.push_back({"fold.continuity", 1e-6, false, 2, [](std::size_t n, Grid g, EnvelopeCache&) {
                          Measured m;
                          const double delta = 1e-7;
                          for (double s : rib_params(n, g)) {
                              m.add(distance(visor_point_3d(s, kPi - delta), Point3{s, 0.0, 0.0}));
                              m.add(distance(visor_point_3d(s, delta), embed(flat_visor_point(s))));
                          }
                          return m;
                      }});
    // |dp/dalpha| <= 1 at both ends, so the deviation at offset delta is at most ~delta.
    checks.push_back({"fold.first_order_limit", 1.01, false, 2, [](std::size_t n, Grid g, EnvelopeCache&) {
                          Measured m;
                          const double delta = 1e-4;
                          for (double s : rib_params(n, g)) {
                              m.add(distance(visor_point_3d(s, kPi - delta), Point3{s, 0.0, 0.0}) / delta);
                              m.add(distance(visor_point_3d(s, delta), embed(flat_visor_point(s))) / delta);
                          }
                          return m;
                      }});
    // Residual counts the steps where y fails to decrease strictly.
    checks.push_back({"fold.monotone_bowing", 0.0, true, 2, [](std::size_t n, Grid g, EnvelopeCache&) {
                          Measured m;
                          const std::vector<double> alphas = linspace(0.0, kPi, std::max<std::size_t>(n, 3));
                          for (double s : rib_params(n, g)) {
                              if (std::abs(s) == 1.0) {
                                  continue;
                              }
                              double violations = 0.0;
                              double previous = visor_point_3d(s, alphas.front()).y;
                              for (std::size_t k = 1; k < alphas.size(); ++k) {
                                  const double y = visor_point_3d(s, alphas[k]).y;
                                  violations += y < previous ? 0.0 : 1.0;
                                  previous = y;
                              }
                              m.add(violations);
                          }
                          return m;
                      }});

    // Envelopes.
    checks.push_back({"env.tangent_family_circle", 1e-6, false, 3, [](std::size_t n, Grid, EnvelopeCache&) {
                          Measured m;
                          const LineFamily tangents{[](double s) { return tangent_line(s); }, -0.99, 0.99};
                          const EnvelopeResult env = line_family_envelope(tangents, envelope_samples(n));
                          for (Point2 p : env.curve.points()) {
                              m.add(norm(p) - 1.0);
                          }
                          return m;
                      }});
    checks.push_back({"env.visor_envelope_residual", 1e-5, false, 3, [](std::size_t, Grid, EnvelopeCache& cache) {
                          Measured m;
                          for (Point2 p : cache.visor().curve.points()) {
                              m.add(implicit_residual(p));
                          }
                          return m;
                      }});
    checks.push_back({"env.visor_envelope_distance", 1e-4, false, 3, [](std::size_t, Grid, EnvelopeCache& cache) {
                          Measured m;
                          const Polyline2& curve = cache.visor().curve;
                          for (std::size_t i = 0; i < curve.size(); ++i) {
                              m.add(distance(curve.points()[i], flat_visor_point(curve.params()[i])));
                          }
                          return m;
                      }});
    checks.push_back({"env.circle_certificate", 1e-8, false, 3, [](std::size_t, Grid, EnvelopeCache& cache) {
                          Measured m;
                          const Polyline2& curve = cache.visor().curve;
                          for (std::size_t i = 0; i < curve.size(); ++i) {
                              const double s = curve.params()[i];
                              m.add(distance(curve.points()[i], rib_base(s)) - rib_length(s));
                          }
                          return m;
                      }});
    checks.push_back({"env.caustic_residual", 1e-5, false, 3, [](std::size_t, Grid, EnvelopeCache& cache) {
                          Measured m;
                          for (Point2 p : cache.caustic().curve.points()) {
                              if (std::abs(p.x) > 1e-2 || std::abs(p.y) < 0.45) {
                                  m.add(half_nephroid_residual(p));
                              }
                          }
                          return m;
                      }});
    checks.push_back({"env.caustic_cusp", 1e-3, false, 3, [](std::size_t, Grid, EnvelopeCache& cache) {
                          Measured m;
                          m.add(distance(caustic_cusp(cache.caustic().curve), Point2{0.0, 0.5}));
                          return m;
                      }});
    checks.push_back({"env.caustic_symmetry", 1e-8, false, 3, [](std::size_t, Grid, EnvelopeCache& cache) {
                          Measured m;
                          const Polyline2& curve = cache.caustic().curve;
                          const auto& pts = curve.points();
                          const auto& params = curve.params();
                          for (std::size_t i = 0, j = pts.size() - 1; i < pts.size(); ++i, --j) {
                              if (params[i] != -params[j]) {
                                  m.add(std::numeric_limits<double>::infinity());
                                  break;
                              }
                              m.add(std::abs(pts[i].x + pts[j].x) + std::abs(pts[i].y - pts[j].y));
                          }
                          return m;
                      }});
    checks.push_back({"env.caustic_in_disk", 0.0, true, 3, [](std::size_t, Grid, EnvelopeCache& cache) {
                          Measured m;
                          for (Point2 p : cache.caustic().curve.points()) {
                              m.add(std::max(0.0, norm(p) - 1.0));
                          }
                          return m;
                      }});
    return checks;
}

const std::vector<Check>& checks() {
    static const std::vector<Check> all = make_checks();
    return all;
}

}  // namespace

std::vector<std::string> verification_check_names() {
    std::vector<std::string> names;
    for (const Check& c : checks()) {
        names.emplace_back(c.name);
    }
    return names;
}

bool VerifyReport::passed() const { return first_failure() == nullptr; }

const CheckResult* VerifyReport::first_failure() const {
    for (const CheckResult& c : checks) {
        if (!c.passed) {
            return &c;
        }
    }
    return nullptr;
}

std::string VerifyReport::str() const {
    std::ostringstream out;
    std::array<char, 256> line{};
    std::snprintf(line.data(), line.size(), "%-30s %13s %10s %8s  %s\n", "check", "max residual", "tolerance", "evals",
                  "status");
    out << line.data();
    std::size_t passed_count = 0;
    std::size_t skipped_count = 0;
    for (const CheckResult& c : checks) {
        passed_count += c.passed && !c.skipped ? 1 : 0;
        skipped_count += c.skipped ? 1 : 0;
        std::array<char, 32> tol{};
        if (c.exact) {
            std::snprintf(tol.data(), tol.size(), "exact");
        } else {
            std::snprintf(tol.data(), tol.size(), "%.2e", c.tolerance);
        }
        const char* status = c.skipped ? "SKIP" : (c.passed ? "PASS" : "FAIL");
        std::snprintf(line.data(), line.size(), "%-30s %13.3e %10s %8zu  %s\n", c.name.c_str(), c.max_residual,
                      tol.data(), c.evaluated, status);
        out << line.data();
    }
    out << "coverage: " << (low_coverage ? "LOW" : "ok") << '\n';
    out << "result: " << (passed() ? "PASS" : "FAIL") << " (" << passed_count << '/' << checks.size() << " passed";
    if (skipped_count > 0) {
        out << ", " << skipped_count << " skipped";
    }
    out << ")\n";
    return out.str();
}

VerifyReport run_verification(const VerifyOptions& options) {
    if (options.samples < 2) {
        throw ArgumentError("verify: samples must be at least 2");
    }
    VerifyReport report;
    report.low_coverage = options.samples < kMinimumCoverage;
    EnvelopeCache cache(options.samples);
    for (const Check& check : checks()) {
        CheckResult result;
        result.name = check.name;
        result.exact = check.exact;
        result.tolerance = check.tolerance;
        if (!check.exact) {
            if (options.tolerance) {
                result.tolerance = *options.tolerance;
            }
            if (const auto it = options.tolerances.find(check.name); it != options.tolerances.end()) {
                result.tolerance = it->second;
            }
        }
        if (options.samples < check.min_samples) {
            result.skipped = true;
            result.passed = true;
            report.low_coverage = true;
        } else {
            const Measured m = check.run(options.samples, options.grid, cache);
            result.max_residual = m.max_residual;
            result.evaluated = m.evaluated;
            result.passed = check.exact ? m.max_residual == 0.0 : m.max_residual < result.tolerance;
        }
        report.checks.push_back(std::move(result));
    }
    return report;
}

}  // namespace visorlab::cli
