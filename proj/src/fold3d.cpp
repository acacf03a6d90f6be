#include "visorlab/fold3d.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace visorlab {

namespace {

constexpr int kNewtonBudget = 64;

// Solves the 3x3 system rows * x = rhs by Cramer's rule; returns false when singular.
bool solve3(const std::array<Point3, 3>& rows, const Point3& rhs, Point3& out) {
    const double det = dot(rows[0], cross(rows[1], rows[2]));
    if (!(std::abs(det) > 0.0)) {
        return false;
    }
    // Columns of the inverse are the cyclic cross products of the rows.
    const Point3 c0 = cross(rows[1], rows[2]);
    const Point3 c1 = cross(rows[2], rows[0]);
    const Point3 c2 = cross(rows[0], rows[1]);
    out = (1.0 / det) * (rhs.x * c0 + rhs.y * c1 + rhs.z * c2);
    return true;
}

void require_proper_rib(RibParam s, const char* op) {
    if (std::abs(s.value()) >= 1.0) {
        throw DegenerateRibError(std::string(op) + ": zero-length rib at |s| = 1");
    }
}

}  // namespace

FoldAngle::FoldAngle(double alpha) : alpha_(alpha) {
    if (!(alpha >= 0.0 && alpha <= std::numbers::pi)) {
        throw DomainError("fold angle must lie in [0, pi], got " + std::to_string(alpha));
    }
}

FoldAngle FoldAngle::from_degrees(double degrees) { return FoldAngle(degrees / 180.0 * std::numbers::pi); }

Point3 front_anchor(RibParam s, FoldAngle alpha) {
    const double r = rib_length(s);
    const double a = alpha.radians();
    return {s.value(), r * std::cos(a), r * std::sin(a)};
}

Plane3 medial_plane(FoldAngle alpha) {
    const double half = 0.5 * alpha.radians();
    return Plane3({0.0, -std::sin(half), std::cos(half)}, 0.0);
}

Plane3 rib_plane(RibParam s) {
    require_proper_rib(s, "rib_plane");
    const double r = rib_length(s);
    return Plane3({r, -s.value(), 0.0}, r * s.value());
}

Point3 visor_point_3d(RibParam s, FoldAngle alpha) {
    const double v = s.value();
    const double r = rib_length(s);
    if (r == 0.0) {
        return {v, 0.0, 0.0};
    }
    const double a = alpha.radians();
    const double ca = std::cos(a);
    const double sh = std::sin(0.5 * a);
    const double ch = std::cos(0.5 * a);
    const double v2 = v * v;
    const double r3 = r * r * r;
    // s^2 cos(a) - s^2 + 2 rewritten with 1 - cos(a) = 2 sin^2(a/2).
    const double d = 2.0 * (1.0 - v2 * sh * sh);
    return {
        -v * ((v2 - 2.0) * ca + 3.0 * v2 - 4.0) / d,
        4.0 * r3 * ch * ch / d,
        2.0 * r3 * std::sin(a) / d,
    };
}

Point3 visor_point_3d_numeric(RibParam s, FoldAngle alpha) {
    require_proper_rib(s, "visor_point_3d_numeric");
    const double a = alpha.radians();
    if (!(a > 0.0 && a < std::numbers::pi)) {
        throw ArgumentError("visor_point_3d_numeric: fold angle must lie strictly inside (0, pi)");
    }

    const double r = rib_length(s);
    const Point3 foot{s.value(), 0.0, 0.0};
    const Point3 base = embed(rib_base(s));
    const Plane3 medial = medial_plane(alpha);
    const Plane3 vertical = rib_plane(s);

    // Both planes contain the foot, so their intersection is a line through it. Start on
    // that line at distance 2r, beyond the far sphere crossing, oriented out of the card.
    Point3 dir = cross(medial.normal(), vertical.normal());
    dir = (1.0 / norm(dir)) * dir;
    if (dir.z < 0.0) {
        dir = -1.0 * dir;
    }
    Point3 p = foot + (2.0 * r) * dir;

    for (int iter = 0; iter < kNewtonBudget; ++iter) {
        const Point3 offset = p - base;
        const Point3 residual{dot(offset, offset) - r * r, medial.residual(p), vertical.residual(p)};
        const std::array<Point3, 3> jacobian{2.0 * offset, medial.normal(), vertical.normal()};
        Point3 step;
        if (!solve3(jacobian, residual, step)) {
            throw NumericalError("visor_point_3d_numeric: singular constraint Jacobian");
        }
        p = p - step;
        if (norm(step) <= 1e-13 * (1.0 + norm(p))) {
            if (!(distance(p, foot) > 1e-3 * r * r * std::sin(a))) {
                throw NumericalError("visor_point_3d_numeric: converged to the rib foot");
            }
            return p;
        }
    }
    throw NumericalError("visor_point_3d_numeric: no convergence within iteration budget");
}

Point3 cone_rim_point(RibParam s, double theta) {
    require_proper_rib(s, "cone_rim_point");
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
        throw ArgumentError("cone_rim_point: theta must lie in [0, pi]");
    }
    const double radius = 1.0 - s.value() * s.value();
    const Point3 centre = embed(reflection_midpoint(s));
    const Point3 foot{s.value(), 0.0, 0.0};
    const Point3 toward_foot = (1.0 / radius) * (foot - centre);
    const Point3 up{0.0, 0.0, 1.0};
    return centre + radius * (std::cos(theta) * toward_foot + std::sin(theta) * up);
}

Polyline3 sample_fold_curve(FoldAngle alpha, std::size_t n, Grid grid) {
    std::vector<double> params = rib_params(n, grid);
    std::vector<Point3> points;
    points.reserve(n);
    for (double s : params) {
        points.push_back(visor_point_3d(s, alpha));
    }
    return Polyline3(std::move(params), std::move(points));
}

}  // namespace visorlab
