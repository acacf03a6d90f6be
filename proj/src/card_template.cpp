#include "visorlab/card_template.hpp"

#include <algorithm>
#include <cmath>

namespace visorlab {

void CardSpec::validate() const {
    auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
    if (!positive(circle_radius_mm) || !positive(card_width_mm) || !positive(card_height_mm)) {
        throw ArgumentError("card: radius, width and height must be positive");
    }
    if (!(margin_mm >= 0.0) || !std::isfinite(margin_mm)) {
        throw ArgumentError("card: margin must be non-negative");
    }
    if (rib_count < 3) {
        throw ArgumentError("card: rib_count must be at least 3");
    }
    if (2.0 * circle_radius_mm + 2.0 * margin_mm > std::min(card_width_mm, card_height_mm)) {
        throw ArgumentError("card: circle diameter plus margins exceeds the card size");
    }
}

std::vector<double> uniform_rib_positions(std::size_t n) {
    std::vector<double> s(n);
    const double gaps = static_cast<double>(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        // (2i - (n+1)) / (n+1) is exactly antisymmetric in i <-> n+1-i.
        s[i - 1] = (2.0 * static_cast<double>(i) - gaps) / gaps;
    }
    return s;
}

std::vector<double> cut_offsets_mm(const CardSpec& spec) {
    std::vector<double> x = uniform_rib_positions(static_cast<std::size_t>(spec.rib_count));
    for (double& v : x) {
        v *= spec.circle_radius_mm;
    }
    return x;
}

SvgDocument make_template(const CardSpec& spec) {
    spec.validate();
    const double w = spec.card_width_mm;
    const double h = spec.card_height_mm;
    const double radius = spec.circle_radius_mm;
    const Point2 centre{0.5 * w, 0.5 * h};

    SvgDocument doc(w, h);
    doc.add(SvgPath{{{0.0, 0.0}, {w, 0.0}, {w, h}, {0.0, h}}, true, StrokeClass::Guide, {}});
    doc.add(SvgCircle{centre, radius, StrokeClass::Guide, {}});
    // The card fold outside the circle.
    if (centre.x - radius > 0.0) {
        doc.add(SvgLine{{0.0, centre.y}, {centre.x - radius, centre.y}, StrokeClass::Guide, {}});
        doc.add(SvgLine{{centre.x + radius, centre.y}, {w, centre.y}, StrokeClass::Guide, {}});
    }

    const std::vector<double> offsets = cut_offsets_mm(spec);
    // Cut endpoints on the upper half of C, flanked by the diameter endpoints.
    std::vector<Point2> rim{{-radius, 0.0}};
    for (double x : offsets) {
        rim.push_back({x, std::sqrt(std::max(0.0, radius * radius - x * x))});
    }
    rim.push_back({radius, 0.0});

    for (double x : offsets) {
        const double half = std::sqrt(std::max(0.0, radius * radius - x * x));
        doc.add(SvgLine{{centre.x + x, centre.y - half}, {centre.x + x, centre.y + half}, StrokeClass::Cut, {}});
    }
    for (std::size_t i = 0; i + 1 < rim.size(); ++i) {
        doc.add(SvgLine{{centre.x + rim[i].x, centre.y}, {centre.x + rim[i + 1].x, centre.y}, StrokeClass::Mountain, {}});
    }
    for (double side : {-1.0, 1.0}) {
        for (std::size_t i = 0; i + 1 < rim.size(); ++i) {
            doc.add(SvgLine{{centre.x + rim[i].x, centre.y + side * rim[i].y},
                            {centre.x + rim[i + 1].x, centre.y + side * rim[i + 1].y},
                            StrokeClass::Valley,
                            {}});
        }
    }
    return doc;
}

}  // namespace visorlab
