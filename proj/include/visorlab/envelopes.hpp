#pragma once

// Numerical envelopes of one-parameter families of lines and circles.
//
// Family derivatives are taken by central differences with step kEnvelopeStep (second-order
// one-sided differences at the ends of the domain), so any evaluator that is continuous and
// smooth on its domain can be used without supplying derivatives.

#include <functional>
#include <vector>

#include "visorlab/core_curves.hpp"
#include "visorlab/geometry.hpp"

namespace visorlab {

inline constexpr double kEnvelopeStep = 1e-5;
/// Samples whose envelope system has a larger 2-norm condition number are dropped.
inline constexpr double kSingularCondition = 1e8;
/// Samples above this condition number (but not dropped) are flagged low-confidence.
inline constexpr double kLowConfidenceCondition = 1e6;

struct LineFamily {
    std::function<Line2(double)> evaluator;
    double u_min = 0.0;
    double u_max = 1.0;
};

struct Circle2 {
    Point2 centre;
    double radius = 0.0;
};

struct CircleFamily {
    std::function<Circle2(double)> evaluator;
    double u_min = 0.0;
    double u_max = 1.0;
};

struct EnvelopeResult {
    /// Envelope points; params are the family parameters u that produced them.
    Polyline2 curve;
    /// Parallel to curve.points(): condition number in (kLowConfidenceCondition, kSingularCondition].
    std::vector<bool> low_confidence;
    /// Parallel to curve.points().
    std::vector<double> condition;
    /// Family parameters whose samples were singular or had no real envelope point.
    std::vector<double> dropped;
};

/// The ray entering along (0, 1) through (s, 0), reflected at b = (s, r) by the inside of the
/// mirrored unit circle. Requires |s| < 1 (DomainError otherwise).
Line2 reflect_ray_in_circle(RibParam s);

/// Envelope of a line family from n uniformly spaced samples (n >= 3).
/// Throws EnvelopeUndefinedError when every sample is singular.
EnvelopeResult line_family_envelope(const LineFamily& family, std::size_t n);

/// Envelope of a circle family from n uniformly spaced samples (n >= 3).
///
/// Each sample intersects its circle with the line dF/du = 0, which gives two candidate
/// points. The branch with the larger y is returned; for the visor family the other
/// branch is the x-axis itself.
EnvelopeResult circle_family_envelope(const CircleFamily& family, std::size_t n);

/// Rib circles of the flat visor construction: centre rib_base(s), radius rib_length(s).
CircleFamily visor_circle_family(double s_min = -0.999, double s_max = 0.999);

/// The rays reflect_ray_in_circle(s) for s in [s_min, s_max].
LineFamily reflected_ray_family(double s_min = -0.999, double s_max = 0.999);

/// Catacaustic of vertical parallel rays in the mirrored unit circle, for s in [-0.999, 0.999].
EnvelopeResult caustic_curve(std::size_t n);

/// Envelope sample nearest the axis x = 0 (the caustic's cusp).
Point2 caustic_cusp(const Polyline2& caustic);

/// (4x^2 + 4y^2 - 1)^3 - 27 x^2: the flat visor nephroid scaled by 1/2 with x and y exchanged.
double half_nephroid_residual(Point2 p);

/// 2-norm condition number of the 2x2 matrix with rows r0 and r1 (infinity when singular).
double condition_number(Point2 r0, Point2 r1);

}  // namespace visorlab
