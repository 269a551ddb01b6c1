#pragma once

#include <cmath>

#include "errors.hpp"

namespace hyperlambert {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(Vec2 o) const noexcept { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const noexcept { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double a) const noexcept { return {x * a, y * a}; }
    constexpr Vec2 operator/(double a) const noexcept { return {x / a, y / a}; }
    constexpr bool operator==(const Vec2&) const noexcept = default;

    constexpr double sq_norm() const noexcept { return x * x + y * y; }
    double norm() const noexcept { return std::hypot(x, y); }

    /// Multiplication by i in the complex picture.
    constexpr Vec2 rotated90() const noexcept { return {-y, x}; }
};

constexpr double dot(Vec2 a, Vec2 b) noexcept { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) noexcept { return a.x * b.y - a.y * b.x; }
inline double distance(Vec2 a, Vec2 b) noexcept { return (a - b).norm(); }

/// 1 - |v|^2 evaluated as (1 - |v|)(1 + |v|).
inline double one_minus_sq_norm(Vec2 v) noexcept {
    const double n = v.norm();
    return (1.0 - n) * (1.0 + n);
}

/// Point of the extended plane R^2 ∪ {∞}.
class ExtendedPoint {
public:
    ExtendedPoint(double x1, double x2) : p_{x1, x2}, infinite_(false) {
        if (!std::isfinite(x1) || !std::isfinite(x2))
            throw DomainError("extended point: finite coordinates required");
    }
    ExtendedPoint(Vec2 p) : ExtendedPoint(p.x, p.y) {}

    static ExtendedPoint infinity() noexcept { return ExtendedPoint(); }

    bool is_infinite() const noexcept { return infinite_; }
    /// Coordinates; meaningless for the point at infinity.
    Vec2 coords() const noexcept { return p_; }

    bool operator==(const ExtendedPoint& o) const noexcept {
        return infinite_ == o.infinite_ && (infinite_ || p_ == o.p_);
    }

private:
    ExtendedPoint() noexcept : infinite_(true) {}

    Vec2 p_{};
    bool infinite_;
};

/// Point of the open unit disk.
class DiskPoint {
public:
    DiskPoint(double x1, double x2) : p_{x1, x2} {
        if (!std::isfinite(x1) || !std::isfinite(x2) || !(p_.norm() < 1.0))
            throw DomainError("disk point must lie strictly inside the unit circle");
    }
    explicit DiskPoint(Vec2 p) : DiskPoint(p.x, p.y) {}

    double x1() const noexcept { return p_.x; }
    double x2() const noexcept { return p_.y; }
    Vec2 vec() const noexcept { return p_; }
    operator ExtendedPoint() const { return ExtendedPoint(p_); }

    bool operator==(const DiskPoint&) const noexcept = default;

private:
    Vec2 p_;
};

/// Point of the upper half-plane x2 > 0.
class HalfPlanePoint {
public:
    HalfPlanePoint(double x1, double x2) : p_{x1, x2} {
        if (!std::isfinite(x1) || !std::isfinite(x2) || !(x2 > 0.0))
            throw DomainError("half-plane point needs x2 > 0");
    }

    double x1() const noexcept { return p_.x; }
    double x2() const noexcept { return p_.y; }
    Vec2 vec() const noexcept { return p_; }

    bool operator==(const HalfPlanePoint&) const noexcept = default;

private:
    Vec2 p_;
};

}  // namespace hyperlambert
