#pragma once

// Printable cut/crease template of the visor card.
//
// The sheet is laid out flat with the card's fold (the centerline) horizontal and the guide
// circle centred on the sheet. Cuts run perpendicular to the centerline from circle to
// circle. The diameter pieces between cuts are mountain creases; each rib joins the circle
// in a valley crease, drawn as the chord between neighbouring cut endpoints. The exact
// construction uses tangent creases instead; chords are what a physical template can use.

#include <vector>

#include "visorlab/svg.hpp"

namespace visorlab {

struct CardSpec {
    double circle_radius_mm = 30.0;
    int rib_count = 24;
    double card_width_mm = 150.0;
    double card_height_mm = 100.0;
    double margin_mm = 10.0;

    /// Throws ArgumentError when a field is out of range or the circle plus margins
    /// does not fit on the card.
    void validate() const;
};

/// Cut offsets along the centerline relative to the circle centre, in mm:
/// x_i = -R + i * 2R / (rib_count + 1), i = 1..rib_count.
std::vector<double> cut_offsets_mm(const CardSpec& spec);

/// Rib positions in unit-circle units: s_i = -1 + 2i / (n + 1), i = 1..n.
std::vector<double> uniform_rib_positions(std::size_t n);

SvgDocument make_template(const CardSpec& spec);

}  // namespace visorlab
