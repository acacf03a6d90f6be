#pragma once

// The rim of the visor at an arbitrary fold angle.
//
// The card back is fixed in the xy-plane (y >= 0 half) and the card front rotates about
// the x-axis, so that the front's copy of rib_base(s) sits at
// front_anchor(s, alpha) = (s, r cos(alpha), r sin(alpha)). alpha = pi is the fully open card,
// alpha = 0 is the closed card.

#include "visorlab/core_curves.hpp"
#include "visorlab/geometry.hpp"

namespace visorlab {

/// Dihedral angle between card front and back, checked to lie in [0, pi] (radians).
class FoldAngle {
  public:
    FoldAngle(double alpha);  // NOLINT(google-explicit-constructor)

    static FoldAngle from_degrees(double degrees);

    double radians() const { return alpha_; }

  private:
    double alpha_;
};

Point3 front_anchor(RibParam s, FoldAngle alpha);

/// Plane through the x-axis bisecting the dihedral: z cos(alpha/2) - y sin(alpha/2) = 0.
Plane3 medial_plane(FoldAngle alpha);

/// Vertical plane through a = (s, 0, 0) and the flat reflected tip a'; r x - s y = r s.
/// Undefined for |s| = 1 (DegenerateRibError).
Plane3 rib_plane(RibParam s);

/// Closed-form rim point p(alpha, s).
///
/// With D = s^2 cos(alpha) - s^2 + 2:
///   x = -s((s^2 - 2) cos(alpha) + 3s^2 - 4) / D
///   y = 4 (1 - s^2)^{3/2} cos^2(alpha/2) / D
///   z = 2 (1 - s^2)^{3/2} sin(alpha) / D
/// The z form equals tan(alpha/2) y and stays finite at alpha = pi.
Point3 visor_point_3d(RibParam s, FoldAngle alpha);

/// Rim point found by Newton iteration on the constraint system
/// { |p - b|^2 = r^2, p in medial_plane(alpha), p in rib_plane(s) }, independent of the
/// closed form. Returns the root that is not the rib foot a.
///
/// Requires |s| < 1 and 0 < alpha < pi (ArgumentError otherwise); throws NumericalError
/// if the iteration does not converge.
Point3 visor_point_3d_numeric(RibParam s, FoldAngle alpha);

/// Point on the semicircle swept by the rib tip as the rib turns about its crease.
/// theta = 0 gives a = (s, 0, 0), theta = pi gives the flat tip (flat_visor_point(s), 0).
Point3 cone_rim_point(RibParam s, double theta);

/// n samples of visor_point_3d over s in [-1, 1]; params are the s values.
Polyline3 sample_fold_curve(FoldAngle alpha, std::size_t n, Grid grid = Grid::UniformAngle);

}  // namespace visorlab
