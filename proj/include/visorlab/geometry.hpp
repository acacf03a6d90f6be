#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "visorlab/errors.hpp"

namespace visorlab {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point2 operator*(double k, Point2 p) { return {k * p.x, k * p.y}; }
    friend constexpr Point2 operator*(Point2 p, double k) { return {k * p.x, k * p.y}; }
    friend constexpr bool operator==(Point2, Point2) = default;
};

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend constexpr Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend constexpr Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend constexpr Point3 operator*(double k, Point3 p) { return {k * p.x, k * p.y, k * p.z}; }
    friend constexpr Point3 operator*(Point3 p, double k) { return {k * p.x, k * p.y, k * p.z}; }
    friend constexpr bool operator==(Point3, Point3) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
/// z-component of the 3D cross product.
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
constexpr Point3 cross(Point3 a, Point3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double norm(Point3 p) { return std::hypot(p.x, p.y, p.z); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline double distance(Point3 a, Point3 b) { return norm(a - b); }

/// Lift a point of the card back (the xy-plane) into 3D.
constexpr Point3 embed(Point2 p, double z = 0.0) { return {p.x, p.y, z}; }

/// Implicit line a*x + b*y = c, stored with a unit normal (a, b) so c is the signed
/// distance of the line from the origin.
class Line2 {
  public:
    Line2(double a, double b, double c);

    /// Line through `point` with direction `direction` (need not be unit length).
    static Line2 through(Point2 point, Point2 direction);

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    Point2 normal() const { return {a_, b_}; }
    Point2 direction() const { return {-b_, a_}; }

    /// Signed distance of p from the line.
    double residual(Point2 p) const { return a_ * p.x + b_ * p.y - c_; }

  private:
    double a_;
    double b_;
    double c_;
};

/// Plane n . p = d with |n| = 1.
class Plane3 {
  public:
    Plane3(Point3 normal, double d);

    Point3 normal() const { return n_; }
    double d() const { return d_; }
    double residual(Point3 p) const { return dot(n_, p) - d_; }

  private:
    Point3 n_;
    double d_;
};

/// Ordered curve samples together with the parameter values that generated them.
///
/// A non-empty polyline has at least two samples and strictly monotone parameters.
/// The default-constructed polyline is empty.
template <typename P>
class Polyline {
  public:
    using point_type = P;

    Polyline() = default;
    Polyline(std::vector<double> params, std::vector<P> points)
        : params_(std::move(params)), points_(std::move(points)) {
        if (params_.size() != points_.size()) {
            throw ArgumentError("polyline: params and points differ in length");
        }
        if (params_.size() < 2) {
            throw ArgumentError("polyline: need at least two samples");
        }
        const bool increasing = params_[1] > params_[0];
        for (std::size_t i = 1; i < params_.size(); ++i) {
            const bool ok = increasing ? params_[i] > params_[i - 1] : params_[i] < params_[i - 1];
            if (!ok) {
                throw ArgumentError("polyline: params must be strictly monotone");
            }
        }
    }

    const std::vector<double>& params() const { return params_; }
    const std::vector<P>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

  private:
    std::vector<double> params_;
    std::vector<P> points_;
};

using Polyline2 = Polyline<Point2>;
using Polyline3 = Polyline<Point3>;

}  // namespace visorlab
