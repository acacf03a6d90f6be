#pragma once

// Wavefront OBJ export of the folded card, in millimetres with the circle centre at the
// origin. The card back is the rectangle |x| <= W/2, 0 <= y <= H/2 in the xy-plane; the
// front is the same rectangle rotated by the fold angle about the x-axis.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "visorlab/card_template.hpp"
#include "visorlab/fold3d.hpp"

namespace visorlab {

struct ObjOptions {
    /// Also emit each rib as a pair of thin quads ("f" records) for viewing.
    bool rib_quads = false;
    /// Vertices closer than this (mm) are merged.
    double merge_tolerance_mm = 1e-9;
};

/// Text mesh with "v x y z" records followed by "l i j" records (1-based), LF endings.
/// Ribs sit at the n positions uniform_rib_positions(n); each contributes the segments
/// base -> rim point and rim point -> front anchor, and the rim is the polyline through the
/// rim points closed off by the cusps (+-R, 0, 0). Throws ArgumentError for n < 2 or an
/// invalid spec.
std::string export_fold_obj(FoldAngle alpha, const CardSpec& spec, std::size_t n, const ObjOptions& options = {});

struct ObjMesh {
    std::vector<Point3> vertices;
    /// 0-based vertex index pairs.
    std::vector<std::array<std::size_t, 2>> lines;
    std::vector<std::vector<std::size_t>> faces;
};

/// Reads v/l/f records (comments and blank lines skipped); throws ArgumentError otherwise.
ObjMesh parse_obj(std::string_view text);

}  // namespace visorlab
