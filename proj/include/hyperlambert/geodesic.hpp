#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <variant>

#include "point.hpp"

namespace hyperlambert {

/// Circle S^1(a, r_a) orthogonal to the unit circle: |a|^2 = 1 + r_a^2.
struct OrthoCircle {
    Vec2 center;
    double radius;

    /// |a|^2 - 1 - r_a^2; zero for an exactly orthogonal circle.
    double orthogonality_residual() const noexcept {
        return center.sq_norm() - 1.0 - radius * radius;
    }
};

/// Diameter of the disk through the origin along a unit direction.
struct Diameter {
    Vec2 direction;
};

/// Euclidean carrier of a hyperbolic line in the disk.
using GeodesicCarrier = std::variant<OrthoCircle, Diameter>;

/// Relative threshold on |x1 y2 - x2 y1| below which 0, x, y count as collinear.
inline constexpr double kCollinearTolerance = 1e-12;

namespace detail {

inline Diameter diameter_through(Vec2 x, Vec2 y) {
    const Vec2 far = x.sq_norm() >= y.sq_norm() ? x : y;
    Vec2 dir = far / far.norm();
    if (dot(dir, y - x) < 0.0) dir = dir * -1.0;
    return Diameter{dir};
}

}  // namespace detail

/// Center a and radius r_a of the circle through x and y orthogonal to the
/// unit circle. Requires 0, x, y noncollinear.
///
///   a   = i (y(1+|x|^2) - x(1+|y|^2)) / (2(x2 y1 - x1 y2))
///   r_a = |x - y| |x|y|^2 - y| / (2|y| |x1 y2 - x2 y1|)
inline OrthoCircle ortho_circle_through(Vec2 x, Vec2 y) {
    const double det = cross(x, y);  // x1 y2 - x2 y1
    const Vec2 num = y * (1.0 + x.sq_norm()) - x * (1.0 + y.sq_norm());
    const Vec2 center = num.rotated90() / (-2.0 * det);
    const double radius =
        distance(x, y) * (x * y.sq_norm() - y).norm() / (2.0 * y.norm() * std::abs(det));
    return OrthoCircle{center, radius};
}

/// Radius implied by orthogonality, sqrt(|a|^2 - 1).
inline double orthogonal_radius(Vec2 center) noexcept {
    const double n = center.norm();
    return std::sqrt((n - 1.0) * (n + 1.0));
}

inline GeodesicCarrier carrier_through(const DiskPoint& x, const DiskPoint& y) {
    if (x == y) throw CoincidentPoints();
    const Vec2 u = x.vec();
    const Vec2 v = y.vec();
    const double scale = std::max(u.norm(), v.norm());
    if (std::abs(cross(u, v)) <= kCollinearTolerance * scale)
        return detail::diameter_through(u, v);
    return ortho_circle_through(u, v);
}

/// The two points where the carrier meets the unit circle, in the order
/// induced by the carrier: for a circle the first endpoint is clockwise of
/// the foot a/|a|^2 as seen from the origin, for a diameter it is -direction.
inline std::pair<Vec2, Vec2> ideal_endpoints(const GeodesicCarrier& carrier) {
    if (const auto* d = std::get_if<Diameter>(&carrier))
        return {d->direction * -1.0, d->direction};

    const auto& c = std::get<OrthoCircle>(carrier);
    const double na = c.center.norm();
    const Vec2 unit = c.center / na;
    // Radical axis of the two circles is the line <z, a> = 1.
    const Vec2 foot = unit / na;
    const double half_chord = std::sqrt((1.0 - 1.0 / na) * (1.0 + 1.0 / na));
    const Vec2 across = unit.rotated90() * half_chord;
    return {foot - across, foot + across};
}

}  // namespace hyperlambert
