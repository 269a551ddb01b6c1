#pragma once

#include <cmath>
#include <numbers>
#include <variant>

#include "geodesic.hpp"
#include "point.hpp"

namespace hyperlambert {

/// Chordal distance on the extended plane, values in [0, 1].
inline double chordal_distance(const ExtendedPoint& x, const ExtendedPoint& y) {
    if (x.is_infinite() && y.is_infinite()) return 0.0;
    if (x.is_infinite() || y.is_infinite()) {
        const Vec2 p = x.is_infinite() ? y.coords() : x.coords();
        return 1.0 / std::sqrt(1.0 + p.sq_norm());
    }
    const Vec2 a = x.coords();
    const Vec2 b = y.coords();
    return distance(a, b) / (std::sqrt(1.0 + a.sq_norm()) * std::sqrt(1.0 + b.sq_norm()));
}

/// Absolute ratio |a,b,c,d| = q(a,c) q(b,d) / (q(a,b) q(c,d)).
inline double absolute_ratio(const ExtendedPoint& a, const ExtendedPoint& b,
                             const ExtendedPoint& c, const ExtendedPoint& d) {
    if (a == b || a == c || a == d || b == c || b == d || c == d) throw DegenerateQuadruple();
    return chordal_distance(a, c) * chordal_distance(b, d) /
           (chordal_distance(a, b) * chordal_distance(c, d));
}

/// Euclidean form of the absolute ratio, finite points only.
inline double absolute_ratio_euclidean(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    if (a == b || a == c || a == d || b == c || b == d || c == d) throw DegenerateQuadruple();
    return distance(a, c) * distance(b, d) / (distance(a, b) * distance(c, d));
}

/// Hyperbolic distance in the upper half-plane. Uses
/// cosh rho = 1 + |x-y|^2 / (2 x2 y2) in the half-angle form
/// rho = 2 arsh(|x-y| / (2 sqrt(x2 y2))).
inline double rho_halfplane(const HalfPlanePoint& x, const HalfPlanePoint& y) {
    const double chord = distance(x.vec(), y.vec());
    return 2.0 * std::asinh(chord / (2.0 * std::sqrt(x.x2() * y.x2())));
}

/// Hyperbolic distance in the unit disk,
/// rho = 2 arsh(|x-y| / sqrt((1-|x|^2)(1-|y|^2))).
inline double rho_disk(const DiskPoint& x, const DiskPoint& y) {
    const double chord = distance(x.vec(), y.vec());
    return 2.0 * std::asinh(chord / std::sqrt(one_minus_sq_norm(x.vec()) *
                                              one_minus_sq_norm(y.vec())));
}

/// Distance as log |x*, x, y, y*| with x*, y* the ideal endpoints of the
/// geodesic through x and y, labelled so that the ratio is >= 1.
inline double rho_by_endpoints(const DiskPoint& x, const DiskPoint& y) {
    auto [e1, e2] = ideal_endpoints(carrier_through(x, y));
    // Euclidean distance from an endpoint grows monotonically along the arc.
    if (distance(x.vec(), e1) > distance(y.vec(), e1)) std::swap(e1, e2);
    return std::log(absolute_ratio(ExtendedPoint(e1), x, y, ExtendedPoint(e2)));
}

enum class QuadratureRule {
    Midpoint,        ///< composite midpoint, 2nd order
    GaussLegendre2,  ///< two Gauss nodes per panel, 4th order
};

namespace detail {

template <class Integrand>
double composite(Integrand&& f, double lo, double hi, int panels, QuadratureRule rule) {
    const double h = (hi - lo) / panels;
    double sum = 0.0;
    if (rule == QuadratureRule::Midpoint) {
        for (int i = 0; i < panels; ++i) sum += f(lo + (i + 0.5) * h);
        return sum * h;
    }
    const double off = 0.5 / std::numbers::sqrt3;
    for (int i = 0; i < panels; ++i) {
        sum += f(lo + (i + 0.5 - off) * h);
        sum += f(lo + (i + 0.5 + off) * h);
    }
    return 0.5 * sum * h;
}

inline double disk_weight(Vec2 z) noexcept { return 2.0 / one_minus_sq_norm(z); }

}  // namespace detail

/// Weighted length of the geodesic arc from x to y under the disk weight
/// 2/(1-|z|^2), by composite quadrature on `panels` equal-angle panels
/// (equal-parameter panels on a diameter).
inline double rho_by_integration(const DiskPoint& x, const DiskPoint& y, int panels,
                                 QuadratureRule rule = QuadratureRule::GaussLegendre2) {
    if (panels < 16) throw DomainError("rho_by_integration: need at least 16 panels");
    const GeodesicCarrier carrier = carrier_through(x, y);
    const Vec2 u = x.vec();
    const Vec2 v = y.vec();

    if (std::holds_alternative<Diameter>(carrier)) {
        const Vec2 step = v - u;
        const double len = step.norm();
        auto f = [&](double s) { return detail::disk_weight(u + step * s) * len; };
        return detail::composite(f, 0.0, 1.0, panels, rule);
    }

    const auto& c = std::get<OrthoCircle>(carrier);
    const Vec2 du = u - c.center;
    const Vec2 dv = v - c.center;
    const double start = std::atan2(du.y, du.x);
    // Arc inside the disk subtends less than pi, so the short way round is it.
    const double sweep = std::atan2(cross(du, dv), dot(du, dv));
    const double radius = c.radius;
    auto f = [&](double angle) {
        const Vec2 z = c.center + Vec2{std::cos(angle), std::sin(angle)} * radius;
        return detail::disk_weight(z) * radius;
    };
    return std::abs(detail::composite(f, start, start + sweep, panels, rule));
}

}  // namespace hyperlambert
