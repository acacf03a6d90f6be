#include "visorlab/core_curves.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace visorlab {

RibParam::RibParam(double s) : s_(s) {
    if (!(std::abs(s) <= 1.0)) {
        throw DomainError("rib outside disk: |s| must be <= 1, got " + std::to_string(s));
    }
}

Grid parse_grid(std::string_view name) {
    if (name == "uniform-s") {
        return Grid::UniformS;
    }
    if (name == "uniform-angle") {
        return Grid::UniformAngle;
    }
    throw ArgumentError("unknown grid '" + std::string(name) + "' (expected uniform-s or uniform-angle)");
}

std::string_view to_string(Grid grid) {
    return grid == Grid::UniformS ? "uniform-s" : "uniform-angle";
}

std::vector<double> rib_params(std::size_t n, Grid grid) {
    if (n < 2) {
        throw ArgumentError("sampling needs n >= 2");
    }
    std::vector<double> s(n);
    const double last = static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        // u in [-1, 1], computed so u[i] == -u[n-1-i] bit for bit.
        const double u = (2.0 * static_cast<double>(i) - last) / last;
        s[i] = grid == Grid::UniformS ? u : std::sin(0.5 * std::numbers::pi * u);
    }
    return s;
}

double rib_length(RibParam s) {
    const double v = s.value();
    return std::sqrt(std::max(0.0, 1.0 - v * v));
}

Point2 rib_base(RibParam s) { return {s.value(), rib_length(s)}; }

Line2 tangent_line(RibParam s) { return Line2(s.value(), rib_length(s), 1.0); }

Point2 reflection_midpoint(RibParam s) {
    const double v = s.value();
    const double r = rib_length(s);
    return {v * (2.0 - v * v), r * r * r};
}

Point2 flat_visor_point(RibParam s) {
    const double v = s.value();
    const double r = rib_length(s);
    return {v * (3.0 - 2.0 * v * v), 2.0 * r * r * r};
}

double implicit_residual(Point2 p) {
    const double q = p.x * p.x + p.y * p.y - 1.0;
    return q * q * q - 6.75 * p.y * p.y;
}

double two_thirds_residual(Point2 p) {
    if (p.y < 0.0) {
        throw DomainError("two-thirds form is defined for y >= 0 only");
    }
    const double root = std::cbrt(0.5 * p.y);
    return p.x * p.x + p.y * p.y - 3.0 * root * root - 1.0;
}

double nephroid_standard_residual(Point2 p, double t) {
    if (!(t > 0.0)) {
        throw DomainError("nephroid scale t must be positive");
    }
    const double q = p.x * p.x + p.y * p.y - 4.0 * t * t;
    return q * q * q - 108.0 * t * t * t * t * p.y * p.y;
}

Point2 epicycloid_point(double t) {
    return {0.5 * (3.0 * std::cos(t) - std::cos(3.0 * t)), 0.5 * (3.0 * std::sin(t) - std::sin(3.0 * t))};
}

Polyline2 mirror_over_axis(const Polyline2& curve) {
    if (curve.empty()) {
        return {};
    }
    std::vector<Point2> mirrored;
    mirrored.reserve(curve.size());
    for (const Point2& p : curve.points()) {
        mirrored.push_back({p.x, -p.y});
    }
    return Polyline2(curve.params(), std::move(mirrored));
}

Polyline2 sample_flat_curve(std::size_t n, Grid grid) {
    std::vector<double> params = rib_params(n, grid);
    std::vector<Point2> points;
    points.reserve(n);
    for (double s : params) {
        points.push_back(flat_visor_point(s));
    }
    return Polyline2(std::move(params), std::move(points));
}

}  // namespace visorlab
