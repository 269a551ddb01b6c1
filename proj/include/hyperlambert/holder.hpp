#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "errors.hpp"
#include "random.hpp"
#include "roots.hpp"

namespace hyperlambert {

/// Below this |p| the Hölder mean is the geometric mean.
inline constexpr double kGeometricThreshold = 1e-8;

/// Hölder (power) mean H_p(r, s) = ((r^p + s^p)/2)^(1/p), H_0 = sqrt(rs).
///
/// Evaluated in log space around the dominant argument, so it neither
/// overflows for large |p| nor loses digits as p -> 0.
inline double holder_mean(double p, double r, double s) {
    if (!(r > 0.0) || !(s > 0.0)) throw DomainError("holder_mean: arguments must be positive");
    if (!std::isfinite(p)) throw DomainError("holder_mean: order must be finite");
    if (r == s) return r;
    if (std::abs(p) < kGeometricThreshold) return std::sqrt(r) * std::sqrt(s);
    const double big = p > 0.0 ? std::max(r, s) : std::min(r, s);
    const double other = p > 0.0 ? std::min(r, s) : std::max(r, s);
    // (other/big)^p <= 1
    const double lr = std::log(other / big);
    const double half_excess = 0.5 * std::expm1(p * lr);  // ((1+ratio)/2) - 1
    return big * std::exp(std::log1p(half_excess) / p);
}

namespace detail {

/// (r sqrt(1+r^2) - arsh r) / r^3 = 2 sum_k binom(-1/2, k) r^(2k) / (2k+3), |r| < 1.
inline double arsh_defect_series(double r) {
    const double r2 = r * r;
    double coeff = 1.0;  // binom(-1/2, k)
    double power = 1.0;
    double sum = 0.0;
    for (int k = 0; k < 60; ++k) {
        const double term = coeff * power / (2.0 * k + 3.0);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        coeff *= -(2.0 * k + 1.0) / (2.0 * k + 2.0);
        power *= r2;
    }
    return 2.0 * sum;
}

inline constexpr double kSeriesCutoffF1 = 1e-4;
inline constexpr double kSeriesCutoffF2 = 0.5;
inline constexpr double kLargeArgument = 1e8;

inline double arsh_large(double r) {
    return r > kLargeArgument ? std::log(2.0 * r) : std::asinh(r);
}

}  // namespace detail

/// arsh(r)/r; strictly decreasing from 1 to 0 on (0, inf).
inline double f1_arsh(double r) {
    if (!(r > 0.0)) throw DomainError("f1_arsh: r must be positive");
    if (r < detail::kSeriesCutoffF1) {
        const double r2 = r * r;
        return 1.0 - r2 / 6.0 + 3.0 * r2 * r2 / 40.0;
    }
    return detail::arsh_large(r) / r;
}

/// f2(r) - 1, with f2(r) = (r(1+r^2) - sqrt(1+r^2) arsh r) / r^3.
inline double f2_arsh_minus_one(double r) {
    if (!(r > 0.0)) throw DomainError("f2_arsh: r must be positive");
    if (r < detail::kSeriesCutoffF2)
        return std::sqrt(1.0 + r * r) * detail::arsh_defect_series(r) - 1.0;
    // 1/r^2 - sqrt(1+r^2)/r * arsh(r)/r^2
    const double inv = 1.0 / r;
    return inv * inv - std::hypot(1.0, inv) * detail::arsh_large(r) * inv * inv;
}

/// f2 from the monotonicity lemma; strictly increasing from 2/3 to 1.
inline double f2_arsh(double r) {
    if (!(r > 0.0)) throw DomainError("f2_arsh: r must be positive");
    if (r < detail::kSeriesCutoffF2) return std::sqrt(1.0 + r * r) * detail::arsh_defect_series(r);
    return 1.0 + f2_arsh_minus_one(r);
}

/// h_p(r) = 1 + p sqrt(1+r^2) arsh(r)/r - arsh(r)/(r sqrt(1+r^2)); h_p(0+) = p.
inline double h_p(double p, double r) {
    if (!(r > 0.0)) throw DomainError("h_p: r must be positive");
    const double f1 = f1_arsh(r);
    const double w = r > detail::kLargeArgument ? r : std::hypot(1.0, r);
    return 1.0 + p * w * f1 - f1 / w;
}

/// f(r) = 2 - 1/(1+r^2) - 2/f2(r); strictly increasing from (0, inf) onto
/// (-2, 0). The critical point of h_p is where f(r) = p.
inline double critical_f(double r) {
    const double f2m1 = f2_arsh_minus_one(r);
    return 2.0 * f2m1 / (1.0 + f2m1) - 1.0 / (1.0 + r * r);
}

struct CriticalPoint {
    double p;
    double r0;        ///< unique root of f(r) = p
    double value;     ///< C(p) = h_p(r0) = sup h_p
    double residual;  ///< p - f(r0)
};

/// Maximiser and maximum of h_p for p in (-2, 0), via bisection on the
/// strictly increasing f.
inline CriticalPoint critical_point(double p) {
    if (!(p > -2.0 && p < 0.0)) throw DomainError("critical_curve_C: p must lie in (-2, 0)");
    const Bracket b = bracket_increasing_log(critical_f, p);
    const double r0 = bisect_increasing_log(critical_f, p, b);
    return {p, r0, h_p(p, r0), p - critical_f(r0)};
}

/// C(p) = sup_{r>0} h_p(r), p in (-2, 0).
inline double critical_curve_C(double p) { return critical_point(p).value; }

/// C extended continuously to the closed interval: C(-2) = -2, C(0) = 1.
inline double critical_curve_closed(double p) {
    if (p == -2.0) return -2.0;
    if (p == 0.0) return 1.0;
    return critical_curve_C(p);
}

/// g_{p,q}(r) = arsh^(q-1)(r) / (r^(p-1) sqrt(1+r^2)).
inline double g_pq(double p, double q, double r) {
    if (!(r > 0.0)) throw DomainError("g_pq: r must be positive");
    const double log_g = (q - 1.0) * std::log(detail::arsh_large(r)) - (p - 1.0) * std::log(r) -
                         0.5 * std::log1p(r * r);
    return std::exp(log_g);
}

/// d/dr log g_{p,q}(r) = (q - h_p(r)) / (sqrt(1+r^2) arsh r).
inline double g_pq_log_derivative(double p, double q, double r) {
    return (q - h_p(p, r)) / (std::hypot(1.0, r) * detail::arsh_large(r));
}

enum class ConvexityClass { StrictlyConvex, StrictlyConcave, Neither, Boundary };

inline const char* to_string(ConvexityClass c) noexcept {
    switch (c) {
        case ConvexityClass::StrictlyConvex: return "convex";
        case ConvexityClass::StrictlyConcave: return "concave";
        case ConvexityClass::Neither: return "neither";
        case ConvexityClass::Boundary: return "boundary";
    }
    return "?";
}

inline constexpr double kBoundaryTolerance = 1e-9;

/// H_{p,q}-convexity class of arsh on (0, inf):
///   convex  on D1 = {p < -2, q >= p} and D2 = {-2 <= p <= 0, q >= C(p)},
///   concave on D3 = {p >= 0, q <= p}.
inline ConvexityClass classify_arsh_convexity(double p, double q,
                                              double tol = kBoundaryTolerance) {
    using enum ConvexityClass;
    if (p < -2.0) return q >= p ? StrictlyConvex : Neither;
    if (p > 0.0) return q <= p ? StrictlyConcave : Neither;
    if (p == 0.0) {
        if (q >= 1.0) return StrictlyConvex;
        if (q <= 0.0) return StrictlyConcave;
        return Neither;
    }
    if (p == -2.0) return q >= -2.0 ? StrictlyConvex : Neither;
    if (!(p > -2.0 && p < 0.0)) return Neither;  // NaN
    const double c = critical_curve_C(p);
    if (std::abs(q - c) < tol) return Boundary;
    return q >= c ? StrictlyConvex : Neither;
}

struct SignSummary {
    std::int64_t negative = 0;  ///< arsh(H_p) < H_q(arsh): convex side
    std::int64_t zero = 0;
    std::int64_t positive = 0;  ///< concave side
    double min_delta = std::numeric_limits<double>::infinity();
    double max_delta = -std::numeric_limits<double>::infinity();
};

inline constexpr double kDeltaZero = 1e-13;

/// Delta = arsh(H_p(x, y)) - H_q(arsh x, arsh y).
inline double convexity_delta(double p, double q, double x, double y) {
    return std::asinh(holder_mean(p, x, y)) - holder_mean(q, std::asinh(x), std::asinh(y));
}

/// Signs of Delta over `n_pairs` pairs drawn log-uniformly from
/// (1e-3, range_hi), using the counter stream `rng`.
inline SignSummary empirical_convexity_test(double p, double q, int n_pairs, double range_hi,
                                            CounterRng rng) {
    if (n_pairs < 100) throw DomainError("empirical_convexity_test: need at least 100 pairs");
    if (!(range_hi > 1.0)) throw DomainError("empirical_convexity_test: range_hi must exceed 1");
    const double log_lo = std::log(1e-3);
    const double log_span = std::log(range_hi) - log_lo;
    SignSummary out;
    for (int i = 0; i < n_pairs; ++i) {
        const double x = std::exp(log_lo + log_span * rng.uniform(2 * std::uint64_t(i)));
        const double y = std::exp(log_lo + log_span * rng.uniform(2 * std::uint64_t(i) + 1));
        const double d = convexity_delta(p, q, x, y);
        if (d < -kDeltaZero)
            ++out.negative;
        else if (d > kDeltaZero)
            ++out.positive;
        else
            ++out.zero;
        out.min_delta = std::min(out.min_delta, d);
        out.max_delta = std::max(out.max_delta, d);
    }
    return out;
}

/// Sample evidence refutes the class: a convex class with a concave-side
/// witness, or the reverse. A one-sided sample never refutes Neither.
inline bool refutes(const SignSummary& s, ConvexityClass c) noexcept {
    switch (c) {
        case ConvexityClass::StrictlyConvex: return s.positive > 0;
        case ConvexityClass::StrictlyConcave: return s.negative > 0;
        default: return false;
    }
}

/// Both signs were observed, i.e. the sample itself shows Neither.
inline bool witnesses_neither(const SignSummary& s) noexcept {
    return s.positive > 0 && s.negative > 0;
}

}  // namespace hyperlambert
