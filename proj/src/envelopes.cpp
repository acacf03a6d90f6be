#include "visorlab/envelopes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace visorlab {

namespace {

std::vector<double> family_samples(double u_min, double u_max, std::size_t n) {
    if (n < 3) {
        throw ArgumentError("envelope needs n >= 3 samples");
    }
    if (!(u_max > u_min)) {
        throw ArgumentError("envelope family domain must have u_max > u_min");
    }
    const double mid = 0.5 * (u_min + u_max);
    const double half = 0.5 * (u_max - u_min);
    const double last = static_cast<double>(n - 1);
    std::vector<double> u(n);
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = mid + half * ((2.0 * static_cast<double>(i) - last) / last);
    }
    u.front() = u_min;
    u.back() = u_max;
    return u;
}

// Derivative of f at u: central difference in the interior, second-order one-sided
// differences where the central stencil would leave [u_min, u_max].
template <typename F>
auto family_derivative(F&& f, double u, double u_min, double u_max) {
    const double h = kEnvelopeStep;
    if (u - h >= u_min && u + h <= u_max) {
        return (f(u + h) - f(u - h)) * (0.5 / h);
    }
    if (u - h < u_min) {
        return (f(u) * -3.0 + f(u + h) * 4.0 - f(u + 2.0 * h)) * (0.5 / h);
    }
    return (f(u) * 3.0 - f(u - h) * 4.0 + f(u - 2.0 * h)) * (0.5 / h);
}

// Small fixed-size vector for differentiating the (a, b, c) and (cx, cy, rho) triples.
struct Triple {
    double v0, v1, v2;
    friend Triple operator+(Triple p, Triple q) { return {p.v0 + q.v0, p.v1 + q.v1, p.v2 + q.v2}; }
    friend Triple operator-(Triple p, Triple q) { return {p.v0 - q.v0, p.v1 - q.v1, p.v2 - q.v2}; }
    friend Triple operator*(Triple p, double k) { return {p.v0 * k, p.v1 * k, p.v2 * k}; }
};

EnvelopeResult assemble(std::vector<double> params, std::vector<Point2> points, std::vector<double> condition,
                        std::vector<double> dropped, const char* what) {
    if (points.size() < 2) {
        throw EnvelopeUndefinedError(std::string(what) + ": fewer than two regular samples, no envelope");
    }
    EnvelopeResult out;
    out.low_confidence.reserve(condition.size());
    for (double c : condition) {
        out.low_confidence.push_back(c > kLowConfidenceCondition);
    }
    out.curve = Polyline2(std::move(params), std::move(points));
    out.condition = std::move(condition);
    out.dropped = std::move(dropped);
    return out;
}

}  // namespace

double condition_number(Point2 r0, Point2 r1) {
    const double det = cross(r0, r1);
    if (!(std::abs(det) > 0.0)) {
        return std::numeric_limits<double>::infinity();
    }
    const double frob2 = dot(r0, r0) + dot(r1, r1);
    const double disc = std::max(0.0, frob2 * frob2 - 4.0 * det * det);
    const double sigma_max2 = 0.5 * (frob2 + std::sqrt(disc));
    // sigma_max * sigma_min = |det|
    return sigma_max2 / std::abs(det);
}

Line2 reflect_ray_in_circle(RibParam s) {
    if (std::abs(s.value()) >= 1.0) {
        throw DomainError("reflect_ray_in_circle: grazing incidence at |s| = 1");
    }
    const Point2 hit = rib_base(s);  // unit normal of the mirror at the hit point
    const Point2 incoming{0.0, 1.0};
    const Point2 reflected = incoming - (2.0 * dot(incoming, hit)) * hit;
    return Line2::through(hit, reflected);
}

EnvelopeResult line_family_envelope(const LineFamily& family, std::size_t n) {
    const std::vector<double> samples = family_samples(family.u_min, family.u_max, n);
    auto coeffs = [&](double u) {
        const Line2 l = family.evaluator(u);
        return Triple{l.a(), l.b(), l.c()};
    };

    std::vector<double> params;
    std::vector<Point2> points;
    std::vector<double> condition;
    std::vector<double> dropped;
    for (double u : samples) {
        const Triple l = coeffs(u);
        const Triple dl = family_derivative(coeffs, u, family.u_min, family.u_max);
        const Point2 r0{l.v0, l.v1};
        const Point2 r1{dl.v0, dl.v1};
        const double cond = condition_number(r0, r1);
        if (!(cond <= kSingularCondition)) {
            dropped.push_back(u);
            continue;
        }
        const double det = cross(r0, r1);
        params.push_back(u);
        points.push_back({(l.v2 * r1.y - dl.v2 * r0.y) / det, (r0.x * dl.v2 - r1.x * l.v2) / det});
        condition.push_back(cond);
    }
    return assemble(std::move(params), std::move(points), std::move(condition), std::move(dropped),
                    "line_family_envelope");
}

EnvelopeResult circle_family_envelope(const CircleFamily& family, std::size_t n) {
    const std::vector<double> samples = family_samples(family.u_min, family.u_max, n);
    auto coeffs = [&](double u) {
        const Circle2 c = family.evaluator(u);
        if (!(c.radius >= 0.0)) {
            throw ArgumentError("circle family: negative radius at u = " + std::to_string(u));
        }
        return Triple{c.centre.x, c.centre.y, c.radius};
    };

    std::vector<double> params;
    std::vector<Point2> points;
    std::vector<double> condition;
    std::vector<double> dropped;
    for (double u : samples) {
        const Triple c = coeffs(u);
        const Triple dc = family_derivative(coeffs, u, family.u_min, family.u_max);
        const Point2 centre{c.v0, c.v1};
        const Point2 velocity{dc.v0, dc.v1};
        const double rho = c.v2;
        const double speed2 = dot(velocity, velocity);
        if (!(speed2 > 0.0) || !(rho > 0.0)) {
            dropped.push_back(u);
            continue;
        }
        // dF/du = 0 is the line w . c' = -rho rho' with w = p - centre; intersect it with |w| = rho.
        const double along = -rho * dc.v2 / speed2;
        const double across2 = (rho * rho - along * along * speed2) / speed2;
        if (across2 < -1e-12 * rho * rho / speed2) {
            dropped.push_back(u);
            continue;
        }
        const double across = std::sqrt(std::max(0.0, across2));
        const Point2 perp{-velocity.y, velocity.x};
        const Point2 w_plus = along * velocity + across * perp;
        const Point2 w_minus = along * velocity - across * perp;
        const Point2 w = w_plus.y >= w_minus.y ? w_plus : w_minus;

        const double cond = condition_number((1.0 / rho) * w, (1.0 / std::sqrt(speed2)) * velocity);
        if (!(cond <= kSingularCondition)) {
            dropped.push_back(u);
            continue;
        }
        params.push_back(u);
        points.push_back(centre + w);
        condition.push_back(cond);
    }
    return assemble(std::move(params), std::move(points), std::move(condition), std::move(dropped),
                    "circle_family_envelope");
}

CircleFamily visor_circle_family(double s_min, double s_max) {
    return {[](double s) { return Circle2{rib_base(s), rib_length(s)}; }, s_min, s_max};
}

LineFamily reflected_ray_family(double s_min, double s_max) {
    return {[](double s) { return reflect_ray_in_circle(s); }, s_min, s_max};
}

EnvelopeResult caustic_curve(std::size_t n) {
    if (n < 3) {
        throw ArgumentError("caustic_curve needs n >= 3 samples");
    }
    return line_family_envelope(reflected_ray_family(), n);
}

Point2 caustic_cusp(const Polyline2& caustic) {
    if (caustic.empty()) {
        throw ArgumentError("caustic_cusp: empty caustic");
    }
    const auto& pts = caustic.points();
    const auto best = std::min_element(pts.begin(), pts.end(), [](Point2 p, Point2 q) {
        const double dp = std::abs(p.x);
        const double dq = std::abs(q.x);
        return dp < dq || (dp == dq && p.y > q.y);
    });
    return *best;
}

double half_nephroid_residual(Point2 p) {
    const double q = 4.0 * (p.x * p.x + p.y * p.y) - 1.0;
    return q * q * q - 27.0 * p.x * p.x;
}

}  // namespace visorlab
