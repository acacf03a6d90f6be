#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "visorlab/card_template.hpp"
#include "visorlab/core_curves.hpp"
#include "visorlab/errors.hpp"
#include "visorlab/fold3d.hpp"
#include "visorlab/fold_obj.hpp"
#include "visorlab/format.hpp"
#include "visorlab/polyline_csv.hpp"
#include "visorlab/svg.hpp"

namespace visorlab {
namespace {

using testing::expect_near;
constexpr double kPi = std::numbers::pi;

std::size_t occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
        ++count;
    }
    return count;
}

TEST(Format, Fixed) {
    EXPECT_EQ(format_fixed(1.5, 3), "1.500");
    EXPECT_EQ(format_fixed(-0.0, 2), "0.00");
    EXPECT_EQ(format_fixed(-1e-9, 4), "0.0000");
    EXPECT_EQ(format_general(22.5, 10), "22.5");
}

TEST(Svg, RejectsElementsOutsideTheViewport) {
    SvgDocument doc(10.0, 10.0);
    EXPECT_NO_THROW(doc.add(SvgLine{{0.0, 0.0}, {10.0, 10.0}, StrokeClass::Cut, {}}));
    EXPECT_THROW(doc.add(SvgLine{{0.0, 0.0}, {10.5, 1.0}, StrokeClass::Cut, {}}), ArgumentError);
    EXPECT_THROW(doc.add(SvgCircle{{5.0, 5.0}, 6.0, StrokeClass::Guide, {}}), ArgumentError);
    EXPECT_THROW(SvgDocument(0.0, 1.0), ArgumentError);
}

TEST(Svg, SerializesClassesAndUnits) {
    SvgDocument doc(20.0, 10.0);
    doc.add(SvgLine{{1.0, 1.0}, {2.0, 2.0}, StrokeClass::Mountain, {}});
    doc.add(SvgLine{{1.0, 1.0}, {2.0, 2.0}, StrokeClass::Valley, {}});
    const std::string text = doc.str();
    EXPECT_NE(text.find("width=\"20.0000mm\""), std::string::npos) << text;
    EXPECT_NE(text.find("class=\"mountain\""), std::string::npos);
    EXPECT_NE(text.find("class=\"valley\""), std::string::npos);
    EXPECT_EQ(doc.count(StrokeClass::Mountain), 1u);
    EXPECT_EQ(text, doc.str());
}

TEST(Template, DefaultCounts) {
    const SvgDocument doc = make_template(CardSpec{});
    EXPECT_EQ(doc.count(StrokeClass::Cut), 24u);
    EXPECT_EQ(doc.count(StrokeClass::Mountain), 25u);
    EXPECT_EQ(doc.count(StrokeClass::Valley), 50u);
    const std::string text = doc.str();
    EXPECT_EQ(occurrences(text, "class=\"cut\""), 24u);
}

TEST(Template, CutsSpanTheCircle) {
    CardSpec spec;
    spec.rib_count = 3;
    const auto offsets = cut_offsets_mm(spec);
    ASSERT_EQ(offsets.size(), 3u);
    EXPECT_NEAR(offsets[0], -15.0, 1e-12);
    EXPECT_NEAR(offsets[1], 0.0, 1e-12);
    EXPECT_NEAR(offsets[2], 15.0, 1e-12);

    const SvgDocument doc = make_template(spec);
    const Point2 centre{spec.card_width_mm / 2, spec.card_height_mm / 2};
    for (const SvgElement& e : doc.elements()) {
        if (const auto* line = std::get_if<SvgLine>(&e); line && line->cls == StrokeClass::Cut) {
            EXPECT_NEAR(distance(line->from, centre), spec.circle_radius_mm, 1e-9);
            EXPECT_NEAR(distance(line->to, centre), spec.circle_radius_mm, 1e-9);
            EXPECT_NEAR(line->from.x, line->to.x, 1e-12);
        }
    }
}

TEST(Template, RejectsCardsThatDoNotFit) {
    CardSpec spec;
    spec.circle_radius_mm = 60.0;
    EXPECT_THROW(make_template(spec), ArgumentError);
    spec = CardSpec{};
    spec.rib_count = 0;
    EXPECT_THROW(make_template(spec), ArgumentError);
}

TEST(CurveSvg, FitsTheViewport) {
    FigureOptions options;
    options.unit_circle = true;
    options.x_axis = true;
    const SvgDocument doc = export_curve_svg({sample_flat_curve(51)}, {}, options);
    EXPECT_NEAR(doc.width_mm(), 160.0, 1e-12);
    EXPECT_GT(doc.height_mm(), 0.0);
    EXPECT_THROW(export_curve_svg({}), ArgumentError);
}

TEST(Csv, RoundTrip2D) {
    const Polyline2 curve = sample_flat_curve(17);
    const std::string text = export_polyline_csv(curve);
    EXPECT_EQ(text.substr(0, 7), "param,x");
    const Polyline2 back = parse_polyline2_csv(text);
    ASSERT_EQ(back.size(), curve.size());
    for (std::size_t i = 0; i < curve.size(); ++i) {
        EXPECT_NEAR(back.params()[i], curve.params()[i], 1e-11);
        expect_near(back.points()[i], curve.points()[i], 1e-12);
    }
}

TEST(Csv, RoundTrip3D) {
    const Polyline3 rim = sample_fold_curve(1.2, 9);
    const Polyline3 back = parse_polyline3_csv(export_polyline_csv(rim));
    ASSERT_EQ(back.size(), rim.size());
    for (std::size_t i = 0; i < rim.size(); ++i) {
        expect_near(back.points()[i], rim.points()[i], 1e-12);
    }
}

TEST(Csv, RejectsMalformedInput) {
    EXPECT_THROW(parse_polyline2_csv("param,x,y\n0,1\n1,2,3\n"), ArgumentError);
    EXPECT_THROW(parse_polyline2_csv("param,x,y\n0,a,1\n1,2,3\n"), ArgumentError);
    EXPECT_THROW(parse_polyline3_csv("param,x,y\n0,1,1\n1,2,3\n"), ArgumentError);
    EXPECT_THROW(export_polyline_csv(Polyline2{}), ArgumentError);
}

TEST(Obj, RibsReachTheSpheres) {
    const CardSpec spec;
    const double alpha = kPi / 2;
    const std::string text = export_fold_obj(alpha, spec, 7);
    EXPECT_EQ(text, export_fold_obj(alpha, spec, 7));
    const ObjMesh mesh = parse_obj(text);
    const double r_mm = spec.circle_radius_mm;
    const auto s = uniform_rib_positions(7);
    for (double si : s) {
        const Point3 tip = r_mm * visor_point_3d(si, alpha);
        const Point3 base = r_mm * embed(rib_base(si));
        bool found = false;
        for (Point3 v : mesh.vertices) {
            found = found || distance(v, tip) < 1e-9;
        }
        EXPECT_TRUE(found) << si;
        EXPECT_NEAR(distance(tip, base), r_mm * rib_length(si), 1e-9);
    }
    // Each rib adds two segments; rim has n + 1 segments; plus the card outline.
    EXPECT_GE(mesh.lines.size(), 2 * 7 + 8u);
    std::set<std::pair<std::size_t, std::size_t>> unique;
    for (auto [a, b] : mesh.lines) {
        EXPECT_LT(a, mesh.vertices.size());
        EXPECT_LT(b, mesh.vertices.size());
        EXPECT_NE(a, b);
        unique.insert({std::min(a, b), std::max(a, b)});
    }
    EXPECT_EQ(unique.size(), mesh.lines.size());
}

TEST(Obj, QuadsAndValidation) {
    ObjOptions options;
    options.rib_quads = true;
    const ObjMesh mesh = parse_obj(export_fold_obj(1.0, CardSpec{}, 4, options));
    EXPECT_FALSE(mesh.faces.empty());
    for (const auto& f : mesh.faces) {
        EXPECT_EQ(f.size(), 4u);
    }
    EXPECT_THROW(export_fold_obj(1.0, CardSpec{}, 1), ArgumentError);
    EXPECT_THROW(parse_obj("v 1 2\n"), ArgumentError);
    EXPECT_THROW(parse_obj("q 1 2 3\n"), ArgumentError);
}

}  // namespace
}  // namespace visorlab
