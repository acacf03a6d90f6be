#include <cmath>
#include <numbers>
#include <string>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "visorlab/card_template.hpp"
#include "visorlab/core_curves.hpp"
#include "visorlab/envelopes.hpp"
#include "visorlab/fold3d.hpp"
#include "visorlab/polyline_csv.hpp"
#include "visorlab/svg.hpp"

namespace visorlab {
namespace {

using testing::Sampler;
constexpr double kPi = std::numbers::pi;
constexpr int kTrials = 2000;

TEST(Property, FlatCurveLiesOnTheNephroid) {
    Sampler rng(0x5eed0001);
    for (int i = 0; i < kTrials; ++i) {
        const double s = rng.uniform(-1.0, 1.0);
        const Point2 p = flat_visor_point(s);
        ASSERT_NEAR(implicit_residual(p), 0.0, 1e-12) << s;
        ASSERT_GE(p.y, 0.0);
        ASSERT_NEAR(distance(p, {s, 0.0}), 2.0 * rib_length(s) * rib_length(s), 1e-12) << s;
        const Point2 q = flat_visor_point(-s);
        ASSERT_EQ(q.x, -p.x);
        ASSERT_EQ(q.y, p.y);
    }
}

TEST(Property, ReflectionPreservesRibLength) {
    Sampler rng(0x5eed0002);
    for (int i = 0; i < kTrials; ++i) {
        const double s = rng.uniform(-1.0, 1.0);
        ASSERT_NEAR(distance(flat_visor_point(s), rib_base(s)), rib_length(s), 1e-12) << s;
    }
}

TEST(Property, RimSatisfiesEveryConstraint) {
    Sampler rng(0x5eed0003);
    for (int i = 0; i < kTrials; ++i) {
        const double s = rng.uniform(-0.999, 0.999);
        const double alpha = rng.uniform(0.0, kPi);
        const Point3 p = visor_point_3d(s, alpha);
        const double r = rib_length(s);
        ASSERT_NEAR(distance(p, embed(rib_base(s))), r, 1e-9) << s << ' ' << alpha;
        ASSERT_NEAR(distance(p, front_anchor(s, alpha)), r, 1e-9) << s << ' ' << alpha;
        ASSERT_NEAR(medial_plane(alpha).residual(p), 0.0, 1e-12);
        ASSERT_NEAR(rib_plane(s).residual(p), 0.0, 1e-9);
        ASSERT_NEAR(distance(p, embed(reflection_midpoint(s))), 1.0 - s * s, 1e-9);
        ASSERT_GE(p.z, 0.0);
        const Point3 m = visor_point_3d(-s, alpha);
        ASSERT_NEAR(m.x, -p.x, 1e-15);
        ASSERT_NEAR(m.y, p.y, 1e-15);
    }
}

TEST(Property, RimBowsOutAsTheCardCloses) {
    Sampler rng(0x5eed0004);
    for (int i = 0; i < kTrials; ++i) {
        const double s = rng.uniform(-0.99, 0.99);
        const double a0 = rng.uniform(0.0, kPi);
        const double a1 = rng.uniform(0.0, kPi);
        const double lo = std::min(a0, a1);
        const double hi = std::max(a0, a1);
        ASSERT_GE(distance(visor_point_3d(s, lo), {s, 0.0, 0.0}) + 1e-12,
                  distance(visor_point_3d(s, hi), {s, 0.0, 0.0}));
    }
}

TEST(Property, TangentsOfRandomCircles) {
    Sampler rng(0x5eed0005);
    for (int trial = 0; trial < 20; ++trial) {
        const Point2 centre{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
        const double radius = rng.uniform(0.1, 5.0);
        const LineFamily family{[=](double u) {
                                    const Point2 n{std::cos(u), std::sin(u)};
                                    return Line2(n.x, n.y, dot(n, centre) + radius);
                                },
                                0.0, 2.0 * kPi};
        const EnvelopeResult env = line_family_envelope(family, 61);
        for (Point2 p : env.curve.points()) {
            ASSERT_NEAR(distance(p, centre), radius, 1e-6 * (1.0 + radius));
        }
    }
}

TEST(Property, CsvRoundTripOfRandomCurves) {
    Sampler rng(0x5eed0006);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform(0.0, 40.0));
        std::vector<double> params(n);
        std::vector<Point3> points(n);
        double t = rng.uniform(-5.0, 5.0);
        for (std::size_t i = 0; i < n; ++i) {
            t += rng.uniform(1e-3, 1.0);
            params[i] = t;
            points[i] = {rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0)};
        }
        const Polyline3 curve(params, points);
        const Polyline3 back = parse_polyline3_csv(export_polyline_csv(curve));
        ASSERT_EQ(back.size(), n);
        for (std::size_t i = 0; i < n; ++i) {
            ASSERT_LT(distance(back.points()[i], points[i]), 1e-11);
            ASSERT_NEAR(back.params()[i], params[i], 1e-10 * (1.0 + std::abs(params[i])));
        }
    }
}

TEST(Property, TemplateCountsFollowTheRibCount) {
    for (int n = 3; n <= 60; ++n) {
        CardSpec spec;
        spec.rib_count = n;
        const SvgDocument doc = make_template(spec);
        ASSERT_EQ(doc.count(StrokeClass::Cut), static_cast<std::size_t>(n));
        ASSERT_EQ(doc.count(StrokeClass::Mountain), static_cast<std::size_t>(n + 1));
        ASSERT_EQ(doc.count(StrokeClass::Valley), static_cast<std::size_t>(2 * (n + 1)));
    }
}

}  // namespace
}  // namespace visorlab
