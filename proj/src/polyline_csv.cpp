#include "visorlab/polyline_csv.hpp"

#include <charconv>
#include <vector>

#include "visorlab/format.hpp"

namespace visorlab {

namespace {

constexpr int kDigits = 12;

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_number(std::string_view field, std::size_t line) {
    double value = 0.0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || end != field.data() + field.size()) {
        throw ArgumentError("csv line " + std::to_string(line) + ": not a number: '" + std::string(field) + "'");
    }
    return value;
}

// Returns the numeric rows below `header`, each with exactly `columns` fields.
std::vector<std::vector<double>> parse_table(std::string_view text, std::string_view header, std::size_t columns) {
    std::vector<std::string_view> lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    if (lines.empty() || lines.front() != header) {
        throw ArgumentError("csv: expected header '" + std::string(header) + "'");
    }
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split(lines[i], ',');
        if (fields.size() != columns) {
            throw ArgumentError("csv line " + std::to_string(i + 1) + ": expected " + std::to_string(columns) +
                                " fields");
        }
        std::vector<double> row;
        row.reserve(columns);
        for (std::string_view f : fields) {
            row.push_back(parse_number(f, i + 1));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string export_polyline_csv(const Polyline2& curve) {
    if (curve.empty()) {
        throw ArgumentError("export_polyline_csv: empty polyline");
    }
    std::string out = "param,x,y\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const Point2 p = curve.points()[i];
        out += format_general(curve.params()[i], kDigits) + ',' + format_fixed(p.x, kDigits) + ',' +
               format_fixed(p.y, kDigits) + '\n';
    }
    return out;
}

std::string export_polyline_csv(const Polyline3& curve) {
    if (curve.empty()) {
        throw ArgumentError("export_polyline_csv: empty polyline");
    }
    std::string out = "param,x,y,z\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const Point3 p = curve.points()[i];
        out += format_general(curve.params()[i], kDigits) + ',' + format_fixed(p.x, kDigits) + ',' +
               format_fixed(p.y, kDigits) + ',' + format_fixed(p.z, kDigits) + '\n';
    }
    return out;
}

Polyline2 parse_polyline2_csv(std::string_view text) {
    std::vector<double> params;
    std::vector<Point2> points;
    for (const auto& row : parse_table(text, "param,x,y", 3)) {
        params.push_back(row[0]);
        points.push_back({row[1], row[2]});
    }
    return Polyline2(std::move(params), std::move(points));
}

Polyline3 parse_polyline3_csv(std::string_view text) {
    std::vector<double> params;
    std::vector<Point3> points;
    for (const auto& row : parse_table(text, "param,x,y,z", 4)) {
        params.push_back(row[0]);
        points.push_back({row[1], row[2], row[3]});
    }
    return Polyline3(std::move(params), std::move(points));
}

}  // namespace visorlab
