#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "visorlab/core_curves.hpp"
#include "visorlab/errors.hpp"

namespace visorlab {
namespace {

using testing::expect_near;

TEST(RibParam, RejectsValuesOutsideTheDisk) {
    EXPECT_THROW(RibParam(1.0000001), DomainError);
    EXPECT_THROW(RibParam(-2.0), DomainError);
    EXPECT_THROW(RibParam(std::nan("")), DomainError);
    EXPECT_NO_THROW(RibParam(1.0));
    EXPECT_NO_THROW(RibParam(-1.0));
}

TEST(RibParam, DomainErrorIsAnArgumentError) {
    EXPECT_THROW(flat_visor_point(3.0), ArgumentError);
}

TEST(Rib, LengthAndBase) {
    EXPECT_DOUBLE_EQ(rib_length(0.6), 0.8);
    EXPECT_DOUBLE_EQ(rib_length(1.0), 0.0);
    expect_near(rib_base(0.6), {0.6, 0.8}, 1e-15);
}

TEST(FlatCurve, NamedPoints) {
    expect_near(flat_visor_point(0.0), {0.0, 2.0}, 1e-12);
    expect_near(flat_visor_point(1.0), {1.0, 0.0}, 1e-12);
    expect_near(flat_visor_point(-1.0), {-1.0, 0.0}, 1e-12);
}

TEST(FlatCurve, SpotValue) {
    expect_near(flat_visor_point(0.6), {1.368, 1.024}, 1e-12);
    expect_near(reflection_midpoint(0.6), {0.984, 0.512}, 1e-12);
}

TEST(FlatCurve, TangentLineTouchesTheCircleAtTheRibTip) {
    const Line2 t = tangent_line(0.6);
    EXPECT_NEAR(t.residual(rib_base(0.6)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(t.residual({0.0, 0.0})), 1.0, 1e-15);
    EXPECT_NEAR(t.residual(reflection_midpoint(0.6)), 0.0, 1e-15);
}

TEST(FlatCurve, ResidualsVanishOnTheCurve) {
    for (double s : {-0.9, -0.3, 0.0, 0.25, 0.77}) {
        const Point2 p = flat_visor_point(s);
        EXPECT_NEAR(implicit_residual(p), 0.0, 1e-12) << s;
        EXPECT_NEAR(two_thirds_residual(p), 0.0, 1e-12) << s;
        EXPECT_NEAR(nephroid_standard_residual(p, 0.5), 0.0, 1e-12) << s;
    }
    EXPECT_GT(std::abs(implicit_residual({0.5, 0.5})), 0.1);
}

TEST(FlatCurve, ResidualDomains) {
    EXPECT_THROW(two_thirds_residual({0.0, -1.0}), DomainError);
    EXPECT_THROW(nephroid_standard_residual({0.0, 0.0}, 0.0), DomainError);
    EXPECT_THROW(nephroid_standard_residual({0.0, 0.0}, -1.0), DomainError);
}

TEST(FlatCurve, EpicycloidMatchesAtArccos) {
    for (double s : {-0.8, -0.1, 0.0, 0.45, 0.99}) {
        expect_near(epicycloid_point(std::acos(s)), flat_visor_point(s), 1e-12);
    }
    expect_near(epicycloid_point(std::numbers::pi * 1.5), {0.0, -2.0}, 1e-12);
}

TEST(Sampling, GridsAreSymmetricAndIncludeTheEnds) {
    for (Grid g : {Grid::UniformS, Grid::UniformAngle}) {
        const auto s = rib_params(11, g);
        ASSERT_EQ(s.size(), 11u);
        EXPECT_EQ(s.front(), -1.0);
        EXPECT_EQ(s.back(), 1.0);
        EXPECT_EQ(s[5], 0.0);
        for (std::size_t i = 0; i < s.size(); ++i) {
            EXPECT_EQ(s[i], -s[s.size() - 1 - i]);
        }
    }
    EXPECT_THROW(rib_params(1, Grid::UniformS), ArgumentError);
}

TEST(Sampling, GridNames) {
    EXPECT_EQ(parse_grid("uniform-s"), Grid::UniformS);
    EXPECT_EQ(parse_grid("uniform-angle"), Grid::UniformAngle);
    EXPECT_EQ(to_string(Grid::UniformS), "uniform-s");
    EXPECT_THROW(parse_grid("random"), ArgumentError);
}

TEST(Sampling, FlatCurveRunsFromCuspToCusp) {
    const Polyline2 curve = sample_flat_curve(21);
    ASSERT_EQ(curve.size(), 21u);
    expect_near(curve.points().front(), {-1.0, 0.0}, 1e-15);
    expect_near(curve.points().back(), {1.0, 0.0}, 1e-15);
    expect_near(curve.points()[10], {0.0, 2.0}, 1e-15);
}

TEST(Sampling, MirrorCompletesTheKidney) {
    const Polyline2 lower = mirror_over_axis(sample_flat_curve(9));
    for (Point2 p : lower.points()) {
        EXPECT_LE(p.y, 0.0);
        EXPECT_NEAR(implicit_residual(p), 0.0, 1e-12);
    }
}

}  // namespace
}  // namespace visorlab
