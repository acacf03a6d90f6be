#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "visorlab/envelopes.hpp"
#include "visorlab/geometry.hpp"

namespace visorlab {

/// Papercraft line roles; each maps to a CSS class of the same name.
enum class StrokeClass { Cut, Mountain, Valley, Guide };

std::string_view to_string(StrokeClass cls);

struct SvgLine {
    Point2 from;
    Point2 to;
    StrokeClass cls = StrokeClass::Cut;
    std::string colour;  // empty: class default
};

struct SvgCircle {
    Point2 centre;
    double radius = 0.0;
    StrokeClass cls = StrokeClass::Guide;
    std::string colour;
};

struct SvgPath {
    std::vector<Point2> points;
    bool closed = false;
    StrokeClass cls = StrokeClass::Cut;
    std::string colour;
};

using SvgElement = std::variant<SvgLine, SvgCircle, SvgPath>;

/// An SVG document in millimetres with the origin at the top-left corner.
class SvgDocument {
  public:
    SvgDocument(double width_mm, double height_mm);

    double width_mm() const { return width_mm_; }
    double height_mm() const { return height_mm_; }
    const std::vector<SvgElement>& elements() const { return elements_; }

    /// Appends an element; throws ArgumentError if any of its coordinates leave the viewport.
    void add(SvgElement element);

    /// Number of elements of the given class.
    std::size_t count(StrokeClass cls) const;

    /// Serialized SVG 1.1 text; deterministic for a given element list.
    std::string str() const;

  private:
    void require_inside(Point2 p) const;

    double width_mm_;
    double height_mm_;
    std::vector<SvgElement> elements_;
};

struct CurveStyle {
    std::string colour = "#000000";
    StrokeClass cls = StrokeClass::Cut;
};

struct FigureOptions {
    double width_mm = 160.0;
    double margin_mm = 8.0;
    bool unit_circle = false;
    bool x_axis = false;
    std::vector<Circle2> guide_circles;
    std::vector<std::pair<Point2, Point2>> guide_segments;
};

/// Plots polylines (in curve units) with one uniform-scale, y-up to y-down viewport map.
/// `styles` is matched to `curves` by index; missing entries use the default style.
/// Throws ArgumentError when `curves` is empty.
SvgDocument export_curve_svg(const std::vector<Polyline2>& curves, const std::vector<CurveStyle>& styles = {},
                             const FigureOptions& options = {});

/// Orthographic projection of a 3D curve onto the card back (drops z).
Polyline2 project_xy(const Polyline3& curve);

}  // namespace visorlab
