#pragma once

// CSV serialization of sampled curves: UTF-8, LF line endings, header "param,x,y" or
// "param,x,y,z". The param column uses 12 significant digits; coordinates are fixed-point
// with 12 decimals.

#include <string>
#include <string_view>

#include "visorlab/geometry.hpp"

namespace visorlab {

/// Throws ArgumentError for an empty polyline.
std::string export_polyline_csv(const Polyline2& curve);
std::string export_polyline_csv(const Polyline3& curve);

/// Parses the output of export_polyline_csv; throws ArgumentError on malformed input.
Polyline2 parse_polyline2_csv(std::string_view text);
Polyline3 parse_polyline3_csv(std::string_view text);

}  // namespace visorlab
