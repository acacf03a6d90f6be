#pragma once

// Closed-form constructions of the flat visor curve.
//
// Coordinates are in unit-circle units: the guide circle C is the unit circle centred on
// the origin and the card centerline is the x-axis. A rib is the segment from a = (s, 0)
// up to b = (s, r) on C, with r = sqrt(1 - s^2). Closing the card reflects the rib across
// the tangent to C at b; the reflected tip a' traces the flat visor curve, a nephroid.

#include <string_view>

#include "visorlab/geometry.hpp"

namespace visorlab {

/// Rib position s along the centerline, checked to lie in [-1, 1].
class RibParam {
  public:
    // Implicit so call sites can pass a plain double; the check still runs.
    RibParam(double s);  // NOLINT(google-explicit-constructor)

    double value() const { return s_; }

  private:
    double s_;
};

/// Sampling grid over s in [-1, 1].
enum class Grid {
    UniformS,
    /// s = cos t with t uniform in [0, pi]; concentrates samples at the cusps.
    UniformAngle,
};

Grid parse_grid(std::string_view name);
std::string_view to_string(Grid grid);

/// The n sample positions of `grid`, increasing from -1 to 1, exactly antisymmetric.
std::vector<double> rib_params(std::size_t n, Grid grid);

double rib_length(RibParam s);
Point2 rib_base(RibParam s);

/// Tangent to C at rib_base(s), in the form s*x + r*y = 1.
Line2 tangent_line(RibParam s);

/// Midpoint c of a a': the foot of the perpendicular from a onto the tangent line.
Point2 reflection_midpoint(RibParam s);

/// a' = (s(3 - 2s^2), 2(1 - s^2)^{3/2}).
Point2 flat_visor_point(RibParam s);

/// (x^2 + y^2 - 1)^3 - (27/4) y^2; zero exactly on the nephroid.
double implicit_residual(Point2 p);

/// x^2 + y^2 - 3 (y/2)^{2/3} - 1, upper half-plane only. Throws DomainError for y < 0.
double two_thirds_residual(Point2 p);

/// (x^2 + y^2 - 4t^2)^3 - 108 t^4 y^2. Throws DomainError for t <= 0.
double nephroid_standard_residual(Point2 p, double t);

/// Point traced by a radius-1/2 circle rolling outside C, after rolling through angle t.
Point2 epicycloid_point(double t);

/// Reflection across the x-axis; parameters are preserved.
Polyline2 mirror_over_axis(const Polyline2& curve);

/// n samples of flat_visor_point; params are the s values. Throws ArgumentError for n < 2.
Polyline2 sample_flat_curve(std::size_t n, Grid grid = Grid::UniformAngle);

}  // namespace visorlab
