#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "point.hpp"
#include "random.hpp"

namespace hyperlambert {

/// Area-uniform point of the disk of radius `max_norm`, from draws 2i, 2i+1.
inline DiskPoint random_disk_point(const CounterRng& rng, std::uint64_t i, double max_norm) {
    const double rad = max_norm * std::sqrt(rng.uniform(2 * i));
    const double ang = 2.0 * std::numbers::pi * rng.uniform(2 * i + 1);
    return DiskPoint(rad * std::cos(ang), rad * std::sin(ang));
}

/// Point evenly spaced on [lo, hi]: i = 0 gives lo, i = n-1 gives hi exactly.
inline double grid_point(double lo, double hi, int i, int n) {
    if (n == 1) return lo;
    return (lo * (n - 1 - i) + hi * i) / (n - 1);
}

}  // namespace hyperlambert
