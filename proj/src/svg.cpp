#include "visorlab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "visorlab/format.hpp"

namespace visorlab {

namespace {

constexpr double kViewportSlack = 1e-9;

std::string colour_attr(const std::string& colour) {
    return colour.empty() ? std::string() : " stroke=\"" + colour + "\"";
}

std::string mm(double v) { return format_fixed(v, 4); }

struct Bounds {
    double x0 = std::numeric_limits<double>::infinity();
    double y0 = std::numeric_limits<double>::infinity();
    double x1 = -std::numeric_limits<double>::infinity();
    double y1 = -std::numeric_limits<double>::infinity();

    void add(Point2 p) {
        x0 = std::min(x0, p.x);
        y0 = std::min(y0, p.y);
        x1 = std::max(x1, p.x);
        y1 = std::max(y1, p.y);
    }
};

}  // namespace

std::string_view to_string(StrokeClass cls) {
    switch (cls) {
        case StrokeClass::Cut: return "cut";
        case StrokeClass::Mountain: return "mountain";
        case StrokeClass::Valley: return "valley";
        case StrokeClass::Guide: return "guide";
    }
    return "guide";
}

SvgDocument::SvgDocument(double width_mm, double height_mm) : width_mm_(width_mm), height_mm_(height_mm) {
    if (!(width_mm > 0.0 && height_mm > 0.0) || !std::isfinite(width_mm) || !std::isfinite(height_mm)) {
        throw ArgumentError("svg: document size must be positive");
    }
}

void SvgDocument::require_inside(Point2 p) const {
    const bool inside = p.x >= -kViewportSlack && p.x <= width_mm_ + kViewportSlack && p.y >= -kViewportSlack &&
                        p.y <= height_mm_ + kViewportSlack;
    if (!inside) {
        throw ArgumentError("svg: coordinate (" + mm(p.x) + ", " + mm(p.y) + ") outside the viewport");
    }
}

void SvgDocument::add(SvgElement element) {
    std::visit(
        [this](const auto& e) {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, SvgLine>) {
                require_inside(e.from);
                require_inside(e.to);
            } else if constexpr (std::is_same_v<T, SvgCircle>) {
                if (!(e.radius >= 0.0)) {
                    throw ArgumentError("svg: negative circle radius");
                }
                require_inside(e.centre - Point2{e.radius, e.radius});
                require_inside(e.centre + Point2{e.radius, e.radius});
            } else {
                if (e.points.size() < 2) {
                    throw ArgumentError("svg: a path needs at least two points");
                }
                for (Point2 p : e.points) {
                    require_inside(p);
                }
            }
        },
        element);
    elements_.push_back(std::move(element));
}

std::size_t SvgDocument::count(StrokeClass cls) const {
    return static_cast<std::size_t>(std::count_if(elements_.begin(), elements_.end(), [cls](const SvgElement& e) {
        return std::visit([cls](const auto& x) { return x.cls == cls; }, e);
    }));
}

std::string SvgDocument::str() const {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << mm(width_mm_) << "mm\" height=\""
        << mm(height_mm_) << "mm\" viewBox=\"0 0 " << mm(width_mm_) << ' ' << mm(height_mm_) << "\">\n"
        << "<style>\n"
        << "  .cut { fill: none; stroke: #000000; stroke-width: 0.2; }\n"
        << "  .mountain { fill: none; stroke: #c0392b; stroke-width: 0.2; stroke-dasharray: 4 1.5; }\n"
        << "  .valley { fill: none; stroke: #2158a8; stroke-width: 0.2; stroke-dasharray: 1 1; }\n"
        << "  .guide { fill: none; stroke: #808080; stroke-width: 0.2; stroke-opacity: 0.4; }\n"
        << "</style>\n";
    for (const SvgElement& element : elements_) {
        std::visit(
            [&out](const auto& e) {
                using T = std::decay_t<decltype(e)>;
                const std::string cls(to_string(e.cls));
                if constexpr (std::is_same_v<T, SvgLine>) {
                    out << "<line class=\"" << cls << '"' << colour_attr(e.colour) << " x1=\"" << mm(e.from.x)
                        << "\" y1=\"" << mm(e.from.y) << "\" x2=\"" << mm(e.to.x) << "\" y2=\"" << mm(e.to.y)
                        << "\"/>\n";
                } else if constexpr (std::is_same_v<T, SvgCircle>) {
                    out << "<circle class=\"" << cls << '"' << colour_attr(e.colour) << " cx=\"" << mm(e.centre.x)
                        << "\" cy=\"" << mm(e.centre.y) << "\" r=\"" << mm(e.radius) << "\"/>\n";
                } else {
                    out << "<path class=\"" << cls << '"' << colour_attr(e.colour) << " d=\"";
                    for (std::size_t i = 0; i < e.points.size(); ++i) {
                        out << (i == 0 ? "M " : " L ") << mm(e.points[i].x) << ' ' << mm(e.points[i].y);
                    }
                    if (e.closed) {
                        out << " Z";
                    }
                    out << "\"/>\n";
                }
            },
            element);
    }
    out << "</svg>\n";
    return out.str();
}

Polyline2 project_xy(const Polyline3& curve) {
    if (curve.empty()) {
        return {};
    }
    std::vector<Point2> points;
    points.reserve(curve.size());
    for (const Point3& p : curve.points()) {
        points.push_back({p.x, p.y});
    }
    return Polyline2(curve.params(), std::move(points));
}

SvgDocument export_curve_svg(const std::vector<Polyline2>& curves, const std::vector<CurveStyle>& styles,
                             const FigureOptions& options) {
    if (curves.empty()) {
        throw ArgumentError("export_curve_svg: no curves to plot");
    }
    if (!(options.width_mm > 2.0 * options.margin_mm) || options.margin_mm < 0.0) {
        throw ArgumentError("export_curve_svg: figure width must exceed twice the margin");
    }

    Bounds box;
    for (const Polyline2& c : curves) {
        for (Point2 p : c.points()) {
            box.add(p);
        }
    }
    if (options.unit_circle) {
        box.add({-1.0, -1.0});
        box.add({1.0, 1.0});
    }
    for (const Circle2& c : options.guide_circles) {
        box.add(c.centre - Point2{c.radius, c.radius});
        box.add(c.centre + Point2{c.radius, c.radius});
    }
    for (const auto& [a, b] : options.guide_segments) {
        box.add(a);
        box.add(b);
    }
    if (options.x_axis) {
        box.add({box.x0, 0.0});
    }
    if (!std::isfinite(box.x0)) {
        throw ArgumentError("export_curve_svg: all curves are empty");
    }

    const double span_x = box.x1 - box.x0;
    const double span_y = box.y1 - box.y0;
    const double inner = options.width_mm - 2.0 * options.margin_mm;
    // Fixed width; the height follows the aspect ratio. A curve with no x extent is scaled by its height.
    double scale = 1.0;
    if (span_x > 0.0) {
        scale = inner / span_x;
    } else if (span_y > 0.0) {
        scale = inner / span_y;
    }
    const double height = span_y * scale + 2.0 * options.margin_mm;
    const double x_off = options.margin_mm + 0.5 * (inner - span_x * scale);

    SvgDocument doc(options.width_mm, height);
    auto map = [&](Point2 p) {
        return Point2{x_off + (p.x - box.x0) * scale, options.margin_mm + (box.y1 - p.y) * scale};
    };

    if (options.unit_circle) {
        doc.add(SvgCircle{map({0.0, 0.0}), scale, StrokeClass::Guide, {}});
    }
    if (options.x_axis) {
        doc.add(SvgLine{map({box.x0, 0.0}), map({box.x1, 0.0}), StrokeClass::Guide, {}});
    }
    for (const Circle2& c : options.guide_circles) {
        doc.add(SvgCircle{map(c.centre), c.radius * scale, StrokeClass::Guide, {}});
    }
    for (const auto& [a, b] : options.guide_segments) {
        doc.add(SvgLine{map(a), map(b), StrokeClass::Guide, {}});
    }
    for (std::size_t i = 0; i < curves.size(); ++i) {
        if (curves[i].empty()) {
            continue;
        }
        const CurveStyle style = i < styles.size() ? styles[i] : CurveStyle{};
        SvgPath path{{}, false, style.cls, style.colour};
        path.points.reserve(curves[i].size());
        for (Point2 p : curves[i].points()) {
            path.points.push_back(map(p));
        }
        doc.add(std::move(path));
    }
    return doc;
}

}  // namespace visorlab
