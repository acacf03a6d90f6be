// Cross-checks against constructions written independently of the library formulas.
#include <array>
#include <cmath>
#include <numbers>
#include <optional>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "visorlab/core_curves.hpp"
#include "visorlab/envelopes.hpp"
#include "visorlab/fold3d.hpp"

namespace visorlab {
namespace {

using testing::expect_near;
constexpr double kPi = std::numbers::pi;

// Mirror the rib foot across the tangent at the rib tip by doubling the perpendicular foot.
Point2 reflected_foot(double s) {
    const Point2 a{s, 0.0};
    const Point2 b{s, std::sqrt(1.0 - s * s)};
    const Point2 foot = a - (dot(a, b) - 1.0) * b;
    return 2.0 * foot - a;
}

// Point on a radius-1/2 circle rolling outside the unit circle, started at (1, 0).
Point2 rolling_circle_point(double t) {
    const Point2 centre{1.5 * std::cos(t), 1.5 * std::sin(t)};
    const double spin = 3.0 * t;
    return centre - Point2{0.5 * std::cos(spin), 0.5 * std::sin(spin)};
}

// Rim point from a direct construction: p lies in plane V, so write p = foot + u*w + v*z with
// w the horizontal unit direction of V. Equal distance to the back and front rib tips gives a
// line in (u, v); intersect it with the back sphere and keep the root above the card.
std::optional<Point3> rim_by_sphere_intersection(double s, double alpha) {
    const double r = std::sqrt(1.0 - s * s);
    const Point3 foot{s, 0.0, 0.0};
    const Point3 w{s, r, 0.0};
    const Point3 z{0.0, 0.0, 1.0};
    const Point3 back{s, r, 0.0};
    const Point3 front{s, r * std::cos(alpha), r * std::sin(alpha)};

    // |p - back|^2 = |p - front|^2  =>  2 p.(front - back) = |front|^2 - |back|^2 = 0.
    const Point3 g = front - back;
    const double gu = dot(w, g);
    const double gv = dot(z, g);
    const double g0 = dot(foot, g);
    // gu*u + gv*v + g0 = 0; with gv != 0, v = -(g0 + gu*u) / gv.
    if (std::abs(gv) < 1e-14) {
        return std::nullopt;
    }
    const double v1 = -gu / gv;
    const double v0 = -g0 / gv;
    // |foot + u w + (v0 + v1 u) z - back|^2 = r^2, quadratic in u.
    const Point3 c0 = foot + v0 * z - back;
    const Point3 c1 = w + v1 * z;
    const double qa = dot(c1, c1);
    const double qb = 2.0 * dot(c0, c1);
    const double qc = dot(c0, c0) - r * r;
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0) {
        return std::nullopt;
    }
    std::optional<Point3> best;
    for (double sign : {-1.0, 1.0}) {
        const double u = (-qb + sign * std::sqrt(disc)) / (2.0 * qa);
        const Point3 p = foot + u * w + (v0 + v1 * u) * z;
        if (!best || distance(p, foot) > distance(*best, foot)) {
            best = p;
        }
    }
    return best;
}

// Intersection of two lines a.x = c given by point and direction.
Point2 intersect(Point2 p, Point2 d, Point2 q, Point2 e) {
    const double t = cross(q - p, e) / cross(d, e);
    return p + t * d;
}

TEST(Oracle, FlatCurveByPerpendicularFoot) {
    for (int i = -20; i <= 20; ++i) {
        const double s = 0.05 * i;
        expect_near(flat_visor_point(s), reflected_foot(s), 1e-13);
    }
    expect_near(reflected_foot(0.6), {1.368, 1.024}, 1e-12);
}

TEST(Oracle, RollingCircle) {
    for (int i = 0; i <= 24; ++i) {
        const double t = kPi * i / 12.0;
        expect_near(epicycloid_point(t), rolling_circle_point(t), 1e-13);
    }
}

TEST(Oracle, FrozenSpatialValues) {
    // Reference values from a 50-digit solve of the sphere/plane constraints.
    struct Case {
        double s;
        double alpha;
        Point3 expected;
    };
    const std::array<Case, 4> cases{{
        {0.6, kPi / 2, {1.0682926829268293, 0.62439024390243902, 0.62439024390243902}},
        {0.0, kPi / 2, {0.0, 1.0, 1.0}},
        {0.3, 2 * kPi / 3, {0.44638069705093834, 0.46546095082542656, 0.80620201576895756}},
        {0.6, kPi / 3, {1.232967032967033, 0.84395604395604396, 0.48725824916223361}},
    }};
    for (const Case& c : cases) {
        expect_near(visor_point_3d(c.s, c.alpha), c.expected, 1e-12);
        expect_near(visor_point_3d_numeric(c.s, c.alpha), c.expected, 1e-10);
        const auto direct = rim_by_sphere_intersection(c.s, c.alpha);
        ASSERT_TRUE(direct.has_value());
        expect_near(*direct, c.expected, 1e-10);
    }
    expect_near(visor_point_3d(0.6, kPi / 2), {1.068293, 0.624390, 0.624390}, 1e-6);
}

TEST(Oracle, SpatialGridAgainstSphereIntersection) {
    for (int i = 1; i < 40; ++i) {
        const double s = -1.0 + i / 20.0;
        for (int j = 1; j < 20; ++j) {
            const double alpha = kPi * j / 20.0;
            const auto direct = rim_by_sphere_intersection(s, alpha);
            ASSERT_TRUE(direct.has_value());
            EXPECT_LT(distance(visor_point_3d(s, alpha), *direct), 1e-10) << s << ' ' << alpha;
        }
    }
}

TEST(Oracle, CausticByNeighbouringRays) {
    const EnvelopeResult caustic = caustic_curve(41);
    for (std::size_t i = 0; i < caustic.curve.size(); ++i) {
        const double s = caustic.curve.params()[i];
        if (std::abs(s) > 0.98) {
            continue;
        }
        const double h = 1e-6;
        const Line2 l0 = reflect_ray_in_circle(s - h);
        const Line2 l1 = reflect_ray_in_circle(s + h);
        const Point2 p0{s - h, std::sqrt(1.0 - (s - h) * (s - h))};
        const Point2 p1{s + h, std::sqrt(1.0 - (s + h) * (s + h))};
        const Point2 expected = intersect(p0, l0.direction(), p1, l1.direction());
        EXPECT_LT(distance(caustic.curve.points()[i], expected), 1e-5) << s;
    }
}

TEST(Oracle, CausticSpotValues) {
    const auto at = [](double s) {
        const Line2 l0 = reflect_ray_in_circle(s - 1e-6);
        const Line2 l1 = reflect_ray_in_circle(s + 1e-6);
        return intersect(rib_base(s - 1e-6), l0.direction(), rib_base(s + 1e-6), l1.direction());
    };
    expect_near(at(0.5), {0.125, 0.6495}, 1e-4);
    expect_near(at(0.7), {0.343, 0.7070}, 1e-4);
}

}  // namespace
}  // namespace visorlab
