#include "visorlab/geometry.hpp"

namespace visorlab {

Line2::Line2(double a, double b, double c) {
    const double len = std::hypot(a, b);
    if (!(len > 0.0) || !std::isfinite(len) || !std::isfinite(c)) {
        throw ArgumentError("line: normal (a, b) must be finite and non-zero");
    }
    a_ = a / len;
    b_ = b / len;
    c_ = c / len;
}

Line2 Line2::through(Point2 point, Point2 direction) {
    const Point2 n{-direction.y, direction.x};
    return Line2(n.x, n.y, dot(n, point));
}

Plane3::Plane3(Point3 normal, double d) {
    const double len = norm(normal);
    if (!(len > 0.0) || !std::isfinite(len) || !std::isfinite(d)) {
        throw ArgumentError("plane: normal must be finite and non-zero");
    }
    n_ = (1.0 / len) * normal;
    d_ = d / len;
}

}  // namespace visorlab
