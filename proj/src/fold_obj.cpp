#include "visorlab/fold_obj.hpp"

#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

#include "visorlab/format.hpp"

namespace visorlab {

namespace {

constexpr int kObjDecimals = 12;

// Vertex pool that merges points within a tolerance using a uniform hash grid.
class VertexPool {
  public:
    explicit VertexPool(double tolerance) : tol_(tolerance > 0.0 ? tolerance : 1e-12) {}

    std::size_t insert(Point3 p) {
        const Key k = key(p);
        for (long dx = -1; dx <= 1; ++dx) {
            for (long dy = -1; dy <= 1; ++dy) {
                for (long dz = -1; dz <= 1; ++dz) {
                    const auto it = grid_.find({std::get<0>(k) + dx, std::get<1>(k) + dy, std::get<2>(k) + dz});
                    if (it == grid_.end()) {
                        continue;
                    }
                    for (std::size_t idx : it->second) {
                        if (distance(points_[idx], p) <= tol_) {
                            return idx;
                        }
                    }
                }
            }
        }
        points_.push_back(p);
        grid_[k].push_back(points_.size() - 1);
        return points_.size() - 1;
    }

    const std::vector<Point3>& points() const { return points_; }

  private:
    using Key = std::tuple<long, long, long>;

    Key key(Point3 p) const {
        return {std::lround(std::floor(p.x / tol_)), std::lround(std::floor(p.y / tol_)),
                std::lround(std::floor(p.z / tol_))};
    }

    double tol_;
    std::vector<Point3> points_;
    std::map<Key, std::vector<std::size_t>> grid_;
};

// Edge list without repeats (in either orientation) or self-loops, in first-seen order.
class EdgeList {
  public:
    void add(std::size_t i, std::size_t j) {
        if (i == j) {
            return;
        }
        if (seen_.insert({std::min(i, j), std::max(i, j)}).second) {
            edges_.push_back({i, j});
        }
    }
    const std::vector<std::array<std::size_t, 2>>& edges() const { return edges_; }

  private:
    std::set<std::pair<std::size_t, std::size_t>> seen_;
    std::vector<std::array<std::size_t, 2>> edges_;
};

}  // namespace

std::string export_fold_obj(FoldAngle alpha, const CardSpec& spec, std::size_t n, const ObjOptions& options) {
    spec.validate();
    if (n < 2) {
        throw ArgumentError("export_fold_obj: need at least 2 ribs");
    }
    const double scale = spec.circle_radius_mm;
    const double half_w = 0.5 * spec.card_width_mm;
    const double half_h = 0.5 * spec.card_height_mm;
    const double ca = std::cos(alpha.radians());
    const double sa = std::sin(alpha.radians());
    auto mm = [scale](Point3 p) { return scale * p; };

    VertexPool pool(options.merge_tolerance_mm);
    EdgeList edges;
    auto loop = [&](const std::vector<Point3>& corners) {
        for (std::size_t i = 0; i < corners.size(); ++i) {
            edges.add(pool.insert(corners[i]), pool.insert(corners[(i + 1) % corners.size()]));
        }
    };

    loop({{-half_w, 0.0, 0.0}, {half_w, 0.0, 0.0}, {half_w, half_h, 0.0}, {-half_w, half_h, 0.0}});
    loop({{-half_w, 0.0, 0.0}, {half_w, 0.0, 0.0}, {half_w, half_h * ca, half_h * sa}, {-half_w, half_h * ca, half_h * sa}});

    const std::vector<double> ribs = uniform_rib_positions(n);
    std::vector<std::size_t> rim{pool.insert(mm(visor_point_3d(-1.0, alpha)))};
    struct Rib {
        Point3 base, tip, anchor;
    };
    std::vector<Rib> rib_points;
    for (double s : ribs) {
        const Rib rib{mm(embed(rib_base(s))), mm(visor_point_3d(s, alpha)), mm(front_anchor(s, alpha))};
        const std::size_t base = pool.insert(rib.base);
        const std::size_t tip = pool.insert(rib.tip);
        const std::size_t anchor = pool.insert(rib.anchor);
        edges.add(base, tip);
        edges.add(tip, anchor);
        rim.push_back(tip);
        rib_points.push_back(rib);
    }
    rim.push_back(pool.insert(mm(visor_point_3d(1.0, alpha))));
    for (std::size_t i = 0; i + 1 < rim.size(); ++i) {
        edges.add(rim[i], rim[i + 1]);
    }

    std::vector<std::vector<std::size_t>> faces;
    if (options.rib_quads) {
        const Point3 half_width{0.4 * scale / static_cast<double>(n + 1), 0.0, 0.0};
        for (const Rib& rib : rib_points) {
            for (const auto& [from, to] : {std::pair{rib.base, rib.tip}, std::pair{rib.tip, rib.anchor}}) {
                faces.push_back({pool.insert(from - half_width), pool.insert(from + half_width),
                                 pool.insert(to + half_width), pool.insert(to - half_width)});
            }
        }
    }

    std::ostringstream out;
    out << "# visor fold, alpha " << format_general(alpha.radians(), 17) << " rad, " << n << " ribs, units mm\n";
    for (const Point3& p : pool.points()) {
        out << "v " << format_fixed(p.x, kObjDecimals) << ' ' << format_fixed(p.y, kObjDecimals) << ' '
            << format_fixed(p.z, kObjDecimals) << '\n';
    }
    for (const auto& [i, j] : edges.edges()) {
        out << "l " << i + 1 << ' ' << j + 1 << '\n';
    }
    for (const auto& face : faces) {
        out << 'f';
        for (std::size_t idx : face) {
            out << ' ' << idx + 1;
        }
        out << '\n';
    }
    return out.str();
}

ObjMesh parse_obj(std::string_view text) {
    ObjMesh mesh;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    auto index = [&](long raw) {
        if (raw < 1) {
            throw ArgumentError("obj line " + std::to_string(line_no) + ": bad vertex index");
        }
        return static_cast<std::size_t>(raw - 1);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "v") {
            Point3 p;
            if (!(fields >> p.x >> p.y >> p.z)) {
                throw ArgumentError("obj line " + std::to_string(line_no) + ": malformed vertex");
            }
            mesh.vertices.push_back(p);
        } else if (tag == "l") {
            long i = 0;
            long j = 0;
            if (!(fields >> i >> j)) {
                throw ArgumentError("obj line " + std::to_string(line_no) + ": malformed line element");
            }
            mesh.lines.push_back({index(i), index(j)});
        } else if (tag == "f") {
            std::vector<std::size_t> face;
            long k = 0;
            while (fields >> k) {
                face.push_back(index(k));
            }
            mesh.faces.push_back(std::move(face));
        } else {
            throw ArgumentError("obj line " + std::to_string(line_no) + ": unsupported record '" + tag + "'");
        }
    }
    for (const auto& l : mesh.lines) {
        if (l[0] >= mesh.vertices.size() || l[1] >= mesh.vertices.size()) {
            throw ArgumentError("obj: line element references a missing vertex");
        }
    }
    return mesh;
}

}  // namespace visorlab
