#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "metric.hpp"
#include "monotone.hpp"
#include "point.hpp"

namespace hyperlambert {

inline constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

/// Parameters of a Lambert quadrilateral with v_a = 0 and v_c = t e^{i theta}.
///
/// s = th rho(v_a, v_c) = 2t/(1+t^2), r = cos theta, r' = sin theta,
/// m = s / sqrt(1-s^2). Every quantity downstream is derived from the stored
/// s, so identities in s hold to rounding.
class QuadParams {
public:
    static QuadParams from_angle(double t, double theta) {
        if (!(t > 0.0 && t < 1.0)) throw DomainError("QuadParams: t must lie in (0, 1)");
        if (!(theta > 0.0 && theta < std::numbers::pi / 2))
            throw DomainError("QuadParams: theta must lie in (0, pi/2)");
        return QuadParams(t, theta, 2.0 * t / (1.0 + t * t), std::cos(theta), std::sin(theta));
    }

    /// From s and r = cos theta, inverting t = (1 - sqrt(1-s^2))/s.
    static QuadParams from_sr(double s, double r) {
        if (!(s > 0.0 && s < 1.0)) throw DomainError("QuadParams: s must lie in (0, 1)");
        if (!(r > 0.0 && r < 1.0)) throw DomainError("QuadParams: r must lie in (0, 1)");
        const double t = s / (1.0 + std::sqrt((1.0 - s) * (1.0 + s)));
        return QuadParams(t, std::acos(r), s, r, std::sqrt((1.0 - r) * (1.0 + r)));
    }

    double t() const noexcept { return t_; }
    double theta() const noexcept { return theta_; }
    double s() const noexcept { return s_; }
    double r() const noexcept { return r_; }
    double r_prime() const noexcept { return r_prime_; }
    double m() const noexcept { return m_; }
    /// 1 - s^2, as (1-s)(1+s).
    double one_minus_s2() const noexcept { return one_minus_s2_; }

private:
    QuadParams(double t, double theta, double s, double r, double r_prime)
        : t_(t), theta_(theta), s_(s), r_(r), r_prime_(r_prime),
          one_minus_s2_((1.0 - s) * (1.0 + s)), m_(s / std::sqrt(one_minus_s2_)) {}

    double t_, theta_, s_, r_, r_prime_, one_minus_s2_, m_;
};

/// Vertices v_a..v_d (interior angles pi/2, pi/2, phi, pi/2), side lengths
/// d1 = rho(v_a,v_b), d2 = rho(v_a,v_d), d3 = rho(v_c,v_b), d4 = rho(v_c,v_d).
struct LambertQuad {
    DiskPoint va, vb, vc, vd;
    double d1, d2, d3, d4;
    double phi;
    QuadParams params;
};

namespace detail {

/// Foot of the perpendicular from t e^{i theta} to the axis at angle 0,
/// with `c` the cosine of the angle to that axis. The circle S^1(b, r_b)
/// through v_c and its mirror image is orthogonal to the unit circle, so
/// b - r_b = 1/(b + r_b).
inline double axis_foot(double t, double c) {
    const double b = (1.0 + t * t) / (2.0 * t * c);
    const double rb = std::sqrt((1.0 + t * t) * (1.0 + t * t) - 4.0 * t * t * c * c) / (2.0 * t * c);
    return 1.0 / (b + rb);
}

}  // namespace detail

/// Closed-form construction:
///   d1 = arth(s r), d2 = arth(s r'), d3 = arsh(m r'), d4 = arsh(m r),
///   cos phi = sh d1 sh d2.
inline LambertQuad build_quad(const QuadParams& p) {
    const double t = p.t();
    const DiskPoint va(0.0, 0.0);
    const DiskPoint vb(detail::axis_foot(t, p.r()), 0.0);
    const DiskPoint vd(0.0, detail::axis_foot(t, p.r_prime()));
    const DiskPoint vc(t * std::cos(p.theta()), t * std::sin(p.theta()));

    const double sr = p.s() * p.r();
    const double sr1 = p.s() * p.r_prime();
    const double d1 = std::atanh(sr);
    const double d2 = std::atanh(sr1);
    const double d3 = std::asinh(p.m() * p.r_prime());
    const double d4 = std::asinh(p.m() * p.r());
    // sh(arth x) = x / sqrt(1 - x^2)
    const double cos_phi = sr / std::sqrt((1.0 - sr) * (1.0 + sr)) * sr1 /
                           std::sqrt((1.0 - sr1) * (1.0 + sr1));
    const double phi = std::min(std::acos(std::clamp(cos_phi, 0.0, 1.0)),
                                std::nextafter(std::numbers::pi / 2, 0.0));
    return LambertQuad{va, vb, vc, vd, d1, d2, d3, d4, phi, p};
}

/// g_s(r) = (1 - sqrt(1 - s^2 r^2)) / (s r) = th(d1/2), evaluated as
/// s r / (1 + sqrt(1 - s^2 r^2)).
inline double g_s(double s, double r) {
    const double sr = s * r;
    return sr / (1.0 + std::sqrt((1.0 - sr) * (1.0 + sr)));
}

/// f_s(r) with d3 = 2 arsh f_s(r):
///   f_s(r)^2 = (g(r)^2 + g(1)^2 - 2 r g(r) g(1)) / ((1 - g(r)^2)(1 - g(1)^2)).
inline double f_s(double s, double r) {
    const double g = g_s(s, r);
    const double g1 = g_s(s, 1.0);
    const double num = g * g + g1 * g1 - 2.0 * r * g * g1;
    const double den = (1.0 - g) * (1.0 + g) * (1.0 - g1) * (1.0 + g1);
    return std::sqrt(std::max(num, 0.0) / den);
}

/// d3, d4 by two routes independent of the closed forms.
struct DirectSides {
    double d3_fs;      ///< 2 arsh f_s(r)
    double d4_fs;      ///< 2 arsh f_s(r')
    double d3_metric;  ///< rho_disk(v_c, v_b)
    double d4_metric;  ///< rho_disk(v_c, v_d)
    /// f_s(r) sqrt(1 + f_s(r)^2) - m r'/2, and the same with r, r' swapped.
    double d3_identity_residual;
    double d4_identity_residual;
};

/// f_s(r) is the half-distance term of |v_c - v_b| by the law of cosines at
/// v_a (angle theta, |v_b| = g_s(r), |v_c| = g_s(1) = t); d4 uses r'.
inline DirectSides side_lengths_direct(const LambertQuad& q) {
    const auto& p = q.params;
    const double fr = f_s(p.s(), p.r());
    const double fr1 = f_s(p.s(), p.r_prime());
    DirectSides out{};
    out.d3_fs = 2.0 * std::asinh(fr);
    out.d4_fs = 2.0 * std::asinh(fr1);
    out.d3_metric = rho_disk(q.vc, q.vb);
    out.d4_metric = rho_disk(q.vc, q.vd);
    out.d3_identity_residual = fr * std::sqrt(1.0 + fr * fr) - 0.5 * p.m() * p.r_prime();
    out.d4_identity_residual = fr1 * std::sqrt(1.0 + fr1 * fr1) - 0.5 * p.m() * p.r();
    return out;
}

/// Sharp upper bound on d3 d4: (arsh(m/sqrt 2))^2.
inline double product_bound(double s) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError("product_bound: s must lie in (0, 1)");
    const double m = s / std::sqrt((1.0 - s) * (1.0 + s));
    const double a = std::asinh(m * kInvSqrt2);
    return a * a;
}

/// Same bound written as (log sqrt((1 + s sqrt(2-s^2)) / (1-s^2)))^2.
inline double product_bound_log_form(double s) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError("product_bound: s must lie in (0, 1)");
    const double a = 0.5 * std::log((1.0 + s * std::sqrt(2.0 - s * s)) / ((1.0 - s) * (1.0 + s)));
    return a * a;
}

struct SumBounds {
    double lower;  ///< arth s, not attained
    double upper;  ///< 2 arsh(m/sqrt 2), attained on the bisector
};

inline SumBounds sum_bounds(double s) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError("sum_bounds: s must lie in (0, 1)");
    const double m = s / std::sqrt((1.0 - s) * (1.0 + s));
    return {std::atanh(s), 2.0 * std::asinh(m * kInvSqrt2)};
}

/// log sqrt((1+s)/(1-s)) and 2 log sqrt((1 + s sqrt(2-s^2)) / (1-s^2)).
inline SumBounds sum_bounds_log_form(double s) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError("sum_bounds: s must lie in (0, 1)");
    return {0.5 * std::log((1.0 + s) / (1.0 - s)),
            std::log((1.0 + s * std::sqrt(2.0 - s * s)) / ((1.0 - s) * (1.0 + s)))};
}

struct SweepRow {
    double r;
    double d1, d2, d3, d4;
    double product, sum;
    double product_bound, sum_lower, sum_upper;
};

struct VerificationReport {
    double s = 0.0;
    std::vector<SweepRow> rows;
    std::size_t argmax_product = 0;  ///< index into rows
    /// max over the sweep of d3 d4 - bound, d3 + d4 - upper and lower - (d3 + d4);
    /// nonpositive when the bounds hold.
    double max_violation = 0.0;
    double bisector_product_gap = 0.0;  ///< |d3 d4 - bound| at r = sqrt2/2
    double bisector_sum_gap = 0.0;      ///< |d3 + d4 - upper| at r = sqrt2/2
};

inline constexpr double kBoundSlack = 1e-13;

/// Sweep r over n interior points i/(n+1) of (0, 1) at fixed s and check the
/// product and sum bounds, the strict side comparisons
///   d2 < d3 < d2/sqrt(1-s^2),  d1 < d4 < d1/sqrt(1-s^2),
/// monotonicity of d3 d4 and d3 + d4 on either side of sqrt2/2, the ratio
/// arsh(m r)/arth(s r) decreasing inside (1, 1/sqrt(1-s^2)), and the
/// equality cases at r = sqrt2/2. Throws VerificationFailure on the first
/// violated check.
inline VerificationReport verify_theorems(double s, int n_samples) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError("verify_theorems: s must lie in (0, 1)");
    if (n_samples < 10) throw DomainError("verify_theorems: need at least 10 samples");

    VerificationReport rep;
    rep.s = s;
    const double pb = product_bound(s);
    const SumBounds sb = sum_bounds(s);
    const double stretch = 1.0 / std::sqrt((1.0 - s) * (1.0 + s));
    rep.max_violation = -std::numeric_limits<double>::infinity();

    std::vector<std::pair<double, double>> prod_left, prod_right, sum_left, sum_right, ratio;
    for (int i = 1; i <= n_samples; ++i) {
        const double r = static_cast<double>(i) / (n_samples + 1);
        const LambertQuad q = build_quad(QuadParams::from_sr(s, r));
        const SweepRow row{r, q.d1, q.d2, q.d3, q.d4, q.d3 * q.d4, q.d3 + q.d4, pb, sb.lower, sb.upper};

        if (row.product > pb + kBoundSlack)
            throw VerificationFailure("product bound", r, row.product - pb);
        if (!(row.sum > sb.lower)) throw VerificationFailure("sum lower bound", r, sb.lower - row.sum);
        if (row.sum > sb.upper + kBoundSlack)
            throw VerificationFailure("sum upper bound", r, row.sum - sb.upper);
        if (!(q.d2 < q.d3 && q.d3 < stretch * q.d2))
            throw VerificationFailure("d2 < d3 < d2/sqrt(1-s^2)", r, q.d3 - q.d2);
        if (!(q.d1 < q.d4 && q.d4 < stretch * q.d1))
            throw VerificationFailure("d1 < d4 < d1/sqrt(1-s^2)", r, q.d4 - q.d1);

        const double lemma_ratio = q.d4 / q.d1;  // arsh(m r) / arth(s r)
        if (!(lemma_ratio > 1.0 && lemma_ratio < stretch))
            throw VerificationFailure("ratio range (1, 1/sqrt(1-s^2))", r, lemma_ratio);
        ratio.emplace_back(r, lemma_ratio);

        if (r <= kInvSqrt2) {
            prod_left.emplace_back(r, row.product);
            sum_left.emplace_back(r, row.sum);
        }
        if (r >= kInvSqrt2) {
            prod_right.emplace_back(r, row.product);
            sum_right.emplace_back(r, row.sum);
        }

        rep.max_violation = std::max({rep.max_violation, row.product - pb, row.sum - sb.upper,
                                      sb.lower - row.sum});
        if (rep.rows.empty() || row.product > rep.rows[rep.argmax_product].product)
            rep.argmax_product = rep.rows.size();
        rep.rows.push_back(row);
    }

    auto monotone = [](const auto& pts, Direction dir) {
        return pts.size() < 2 || check_monotone(pts, dir);
    };
    if (!monotone(prod_left, Direction::Increasing))
        throw VerificationFailure("d3 d4 increasing on (0, sqrt2/2]", prod_left.back().first, 0.0);
    if (!monotone(prod_right, Direction::Decreasing))
        throw VerificationFailure("d3 d4 decreasing on [sqrt2/2, 1)", prod_right.front().first, 0.0);
    if (!monotone(sum_left, Direction::Increasing))
        throw VerificationFailure("d3 + d4 increasing on (0, sqrt2/2]", sum_left.back().first, 0.0);
    if (!monotone(sum_right, Direction::Decreasing))
        throw VerificationFailure("d3 + d4 decreasing on [sqrt2/2, 1)", sum_right.front().first, 0.0);
    if (!check_monotone(ratio, Direction::Decreasing))
        throw VerificationFailure("arsh(m r)/arth(s r) decreasing", ratio.front().first, 0.0);

    const double step = 1.0 / (n_samples + 1);
    const double r_star = rep.rows[rep.argmax_product].r;
    if (std::abs(r_star - kInvSqrt2) > step * (1.0 + 1e-9))
        throw VerificationFailure("argmax of d3 d4 away from sqrt2/2", r_star, r_star - kInvSqrt2);

    const LambertQuad mid = build_quad(QuadParams::from_sr(s, kInvSqrt2));
    rep.bisector_product_gap = std::abs(mid.d3 * mid.d4 - pb);
    rep.bisector_sum_gap = std::abs(mid.d3 + mid.d4 - sb.upper);
    if (rep.bisector_product_gap > kBoundSlack)
        throw VerificationFailure("product equality at sqrt2/2", kInvSqrt2, rep.bisector_product_gap);
    if (rep.bisector_sum_gap > kBoundSlack)
        throw VerificationFailure("sum equality at sqrt2/2", kInvSqrt2, rep.bisector_sum_gap);
    return rep;
}

}  // namespace hyperlambert
