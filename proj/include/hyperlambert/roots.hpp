#pragma once

#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace hyperlambert {

struct Bracket {
    double lo;
    double hi;
};

/// Root of an increasing function on a positive bracket, bisecting in the
/// geometric mean until hi/lo - 1 <= rel_width. Requires f(lo) < target <= f(hi).
template <class F>
double bisect_increasing_log(F&& f, double target, Bracket b, double rel_width = 1e-14) {
    if (!(b.lo > 0.0 && b.hi > b.lo)) throw DomainError("bisect: invalid bracket");
    double lo = b.lo;
    double hi = b.hi;
    for (int it = 0; it < 400 && hi / lo - 1.0 > rel_width; ++it) {
        const double mid = std::sqrt(lo) * std::sqrt(hi);
        if (mid <= lo || mid >= hi) break;
        if (f(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

/// Expand [start, start] by doubling/halving until f(lo) < target <= f(hi).
template <class F>
Bracket bracket_increasing_log(F&& f, double target, double start = 1.0,
                               double lo_limit = 1e-300, double hi_limit = 1e300) {
    double lo = start;
    double hi = start;
    while (!(f(lo) < target)) {
        lo *= 0.5;
        if (lo < lo_limit) throw DomainError("bracket: target below the range of f");
    }
    while (f(hi) < target) {
        hi *= 2.0;
        if (hi > hi_limit) throw DomainError("bracket: target above the range of f");
    }
    return {lo, hi};
}

struct Extremum {
    double x;
    double value;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi].
template <class F>
Extremum golden_section_max(F&& f, double lo, double hi, double tol = 1e-12) {
    const double inv_phi = std::numbers::phi - 1.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol * (1.0 + std::abs(a) + std::abs(b))) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    const double x = 0.5 * (a + b);
    return {x, f(x)};
}

}  // namespace hyperlambert
