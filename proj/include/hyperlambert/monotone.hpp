#pragma once

#include <cmath>
#include <span>
#include <utility>

#include "errors.hpp"

namespace hyperlambert {

enum class Direction { Increasing, Decreasing };

inline constexpr double kMonotoneSlack = 1e-13;

/// Sampled (r, value) sequence respects the direction between every pair of
/// consecutive samples, up to `slack`. Sample abscissae must be strictly
/// increasing.
inline bool check_monotone(std::span<const std::pair<double, double>> samples, Direction dir,
                           double slack = kMonotoneSlack) {
    if (samples.size() < 2) throw InsufficientSamples("check_monotone: need at least 2 samples");
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (!(samples[i].first > samples[i - 1].first))
            throw DomainError("check_monotone: abscissae must be strictly increasing");
    }
    const double sign = dir == Direction::Increasing ? 1.0 : -1.0;
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const double step = sign * (samples[i].second - samples[i - 1].second);
        if (!(step > -slack)) return false;
    }
    return true;
}

}  // namespace hyperlambert
