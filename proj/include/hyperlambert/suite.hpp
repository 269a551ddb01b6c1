#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "csv.hpp"
#include "geodesic.hpp"
#include "holder.hpp"
#include "lambert.hpp"
#include "metric.hpp"
#include "monotone.hpp"
#include "roots.hpp"
#include "sampling.hpp"

namespace hyperlambert {

struct PropertyResult {
    std::string name;
    bool passed;
    std::string detail;
};

namespace suite {

/// Running maximum of |residual|, for reporting.
struct MaxAbs {
    double value = 0.0;
    void operator()(double v) { value = std::max(value, std::abs(v)); }
};

inline std::string worst(double v) { return "max_residual=" + format_number(v); }

inline PropertyResult metric_symmetry(const CounterRng& rng, int n) {
    bool ok = true;
    for (int i = 0; i < n; ++i) {
        const DiskPoint x = random_disk_point(rng, 2 * i, 0.95);
        const DiskPoint y = random_disk_point(rng, 2 * i + 1, 0.95);
        ok &= rho_disk(x, y) == rho_disk(y, x);
        ok &= chordal_distance(x, y) == chordal_distance(y, x);
        const HalfPlanePoint a(x.x1(), 1.0 + x.x2()), b(y.x1(), 1.0 + y.x2());
        ok &= rho_halfplane(a, b) == rho_halfplane(b, a);
        // The endpoint route re-derives the carrier, so allow rounding there.
        if (x != y) ok &= std::abs(rho_by_endpoints(x, y) - rho_by_endpoints(y, x)) <= 1e-13;
    }
    return {"metric_symmetry", ok, "pairs=" + std::to_string(n)};
}

inline PropertyResult metric_positivity(const CounterRng& rng, int n) {
    bool ok = true;
    for (int i = 0; i < n; ++i) {
        const DiskPoint x = random_disk_point(rng, 2 * i, 0.95);
        const DiskPoint y = random_disk_point(rng, 2 * i + 1, 0.95);
        ok &= rho_disk(x, x) == 0.0 && chordal_distance(x, x) == 0.0;
        if (x != y) ok &= rho_disk(x, y) > 0.0 && chordal_distance(x, y) > 0.0;
        const HalfPlanePoint a(x.x1(), 1.0 + x.x2());
        ok &= rho_halfplane(a, a) == 0.0;
    }
    return {"metric_positivity", ok, "pairs=" + std::to_string(n)};
}

inline PropertyResult chordal_bound(const CounterRng& rng, int n) {
    bool ok = chordal_distance(ExtendedPoint(0.0, 0.0), ExtendedPoint::infinity()) == 1.0;
    for (int i = 0; i < n; ++i) {
        const double scale = std::exp(rng.uniform(4 * i, -5.0, 5.0));
        const ExtendedPoint x(scale * rng.uniform(4 * i + 1, -1.0, 1.0), scale * rng.uniform(4 * i + 2, -1.0, 1.0));
        const ExtendedPoint y(rng.uniform(4 * i + 3, -3.0, 3.0), 0.5);
        ok &= chordal_distance(x, y) <= 1.0 && chordal_distance(x, ExtendedPoint::infinity()) <= 1.0;
    }
    return {"chordal_bound", ok, "pairs=" + std::to_string(n)};
}

inline PropertyResult absolute_ratio_forms(const CounterRng& rng, int n) {
    MaxAbs rel;
    for (int i = 0; i < n; ++i) {
        Vec2 pts[4];
        for (int k = 0; k < 4; ++k)
            pts[k] = {rng.uniform(8 * i + 2 * k, -2.0, 2.0), rng.uniform(8 * i + 2 * k + 1, -2.0, 2.0)};
        const double chordal = absolute_ratio(pts[0], pts[1], pts[2], pts[3]);
        const double euclid = absolute_ratio_euclidean(pts[0], pts[1], pts[2], pts[3]);
        rel((chordal - euclid) / euclid);
    }
    return {"absolute_ratio_forms", rel.value <= 1e-12, worst(rel.value)};
}

inline PropertyResult oracle_triangle(const CounterRng& rng, int n) {
    MaxAbs endpoints, integral;
    for (int i = 0; i < n; ++i) {
        const DiskPoint x = random_disk_point(rng, 2 * i, 0.95);
        const DiskPoint y = random_disk_point(rng, 2 * i + 1, 0.95);
        const double ref = rho_disk(x, y);
        endpoints(rho_by_endpoints(x, y) - ref);
        integral(rho_by_integration(x, y, 4096) - ref);
    }
    return {"oracle_triangle", endpoints.value <= 1e-10 && integral.value <= 1e-6,
            "endpoints_" + worst(endpoints.value) + " integration_" + worst(integral.value)};
}

inline PropertyResult orthogonality(const CounterRng& rng, int n) {
    MaxAbs ortho, member, radius;
    int circles = 0;
    for (int i = 0; i < n; ++i) {
        const DiskPoint x = random_disk_point(rng, 2 * i, 0.95);
        const DiskPoint y = random_disk_point(rng, 2 * i + 1, 0.95);
        const auto carrier = carrier_through(x, y);
        const auto* c = std::get_if<OrthoCircle>(&carrier);
        if (!c) continue;
        ++circles;
        ortho(c->orthogonality_residual() / std::max(1.0, c->center.sq_norm()));
        member(distance(x.vec(), c->center) - c->radius);
        member(distance(y.vec(), c->center) - c->radius);
        radius((c->radius - orthogonal_radius(c->center)) / std::max(1.0, c->radius));
    }
    return {"orthogonality", ortho.value <= 1e-10 && member.value <= 1e-10 && radius.value <= 1e-9,
            "circles=" + std::to_string(circles) + " orthogonality_" + worst(ortho.value) +
                " membership_" + worst(member.value) + " radius_" + worst(radius.value)};
}

inline QuadParams random_params(const CounterRng& rng, std::uint64_t i) {
    const double t = rng.uniform(2 * i, 0.05, 0.95);
    const double theta = rng.uniform(2 * i + 1, 0.05, 0.95) * std::numbers::pi / 2;
    return QuadParams::from_angle(t, theta);
}

inline PropertyResult lambert_identities(const CounterRng& rng, int n) {
    MaxAbs th, sh, combined, beardon;
    for (int i = 0; i < n; ++i) {
        const QuadParams p = random_params(rng, i);
        const LambertQuad q = build_quad(p);
        const double s2 = p.s() * p.s();
        const double th2 = std::pow(std::tanh(q.d1), 2) + std::pow(std::tanh(q.d2), 2);
        const double sh2 = std::pow(std::sinh(q.d3), 2) + std::pow(std::sinh(q.d4), 2);
        th(th2 - s2);
        sh(sh2 - s2 / p.one_minus_s2());
        combined(1.0 / th2 - 1.0 / sh2 - 1.0);
        beardon(std::sinh(q.d1) * std::sinh(q.d2) - std::cos(q.phi));
    }
    return {"lambert_identities",
            th.value < 1e-12 && sh.value < 1e-12 && combined.value < 1e-10 && beardon.value < 1e-12,
            "th_" + worst(th.value) + " sh_" + worst(sh.value) + " combined_" + worst(combined.value) +
                " cos_phi_" + worst(beardon.value)};
}

inline PropertyResult lambert_direct_sides(const CounterRng& rng, int n) {
    MaxAbs sides, identity;
    for (int i = 0; i < n; ++i) {
        const LambertQuad q = build_quad(random_params(rng, i));
        const DirectSides d = side_lengths_direct(q);
        for (double v : {d.d3_fs, d.d3_metric}) sides(v - q.d3);
        for (double v : {d.d4_fs, d.d4_metric}) sides(v - q.d4);
        sides(d.d3_fs - d.d3_metric);
        sides(d.d4_fs - d.d4_metric);
        identity(d.d3_identity_residual);
        identity(d.d4_identity_residual);
    }
    return {"lambert_direct_sides", sides.value < 1e-10 && identity.value < 1e-12,
            "sides_" + worst(sides.value) + " fs_identity_" + worst(identity.value)};
}

inline PropertyResult theorem_sweeps() {
    double violation = -1.0;
    try {
        for (double s : {0.1, 0.3, 0.5, 0.7, 0.9, 0.95}) {
            const auto rep = verify_theorems(s, 1001);
            violation = std::max(violation, rep.max_violation);
        }
    } catch (const VerificationFailure& e) {
        return {"theorem_sweeps", false, e.what()};
    }
    return {"theorem_sweeps", true, "max_violation=" + format_number(violation)};
}

inline PropertyResult bound_forms() {
    MaxAbs gap;
    for (int i = 1; i <= 99; ++i) {
        const double s = i / 100.0;
        gap(product_bound(s) - product_bound_log_form(s));
        const SumBounds a = sum_bounds(s), b = sum_bounds_log_form(s);
        gap(a.lower - b.lower);
        gap(a.upper - b.upper);
    }
    return {"bound_forms", gap.value <= 1e-12, worst(gap.value)};
}

inline PropertyResult holder_sandwich(const CounterRng& rng, int n) {
    bool ok = true;
    for (int i = 0; i < n; ++i) {
        const double r = std::exp(rng.uniform(3 * i, -6.0, 6.0));
        const double s = std::exp(rng.uniform(3 * i + 1, -6.0, 6.0));
        const double p = rng.uniform(3 * i + 2, -8.0, 8.0);
        const double h = holder_mean(p, r, s);
        const double lo = std::min(r, s), hi = std::max(r, s);
        ok &= h >= lo * (1 - 1e-15) && h <= hi * (1 + 1e-15);
        ok &= holder_mean(p + 0.5, r, s) >= h * (1 - 1e-15);
    }
    return {"holder_sandwich", ok, "samples=" + std::to_string(n)};
}

/// C(p) by golden-section maximisation of h_p over log r in (-ln 1e6, ln 1e6).
inline double critical_curve_by_maximisation(double p) {
    auto h = [p](double log_r) { return h_p(p, std::exp(log_r)); };
    return golden_section_max(h, std::log(1e-6), std::log(1e6)).value;
}

inline PropertyResult critical_curve(const CounterRng& rng, int n) {
    bool bracketed = true;
    MaxAbs residual, dual;
    for (int i = 0; i < n; ++i) {
        const double p = rng.uniform(i, -1.99, -0.01);
        const CriticalPoint cp = critical_point(p);
        bracketed &= p < cp.value && cp.value < 1.0;
        residual(cp.residual);
        dual(cp.value - critical_curve_by_maximisation(p));
    }
    return {"critical_curve", bracketed && residual.value < 1e-12 && dual.value < 1e-9,
            "root_" + worst(residual.value) + " dual_method_" + worst(dual.value)};
}

inline PropertyResult lemma_monotonicity() {
    std::vector<std::pair<double, double>> f1, f2, f, h0;
    for (int i = 0; i < 1000; ++i) {
        const double r = std::exp(std::log(1e-6) + i * (std::log(1e6) - std::log(1e-6)) / 999);
        f1.emplace_back(r, f1_arsh(r));
        f2.emplace_back(r, f2_arsh(r));
        f.emplace_back(r, critical_f(r));
        h0.emplace_back(r, h_p(0.0, r));
    }
    bool ok = check_monotone(f1, Direction::Decreasing) && check_monotone(f2, Direction::Increasing) &&
              check_monotone(f, Direction::Increasing) && check_monotone(h0, Direction::Increasing);
    for (const auto& [r, v] : f) ok &= v > -2.0 && v < 0.0;
    for (const auto& [r, v] : f1) ok &= v > 0.0 && v <= 1.0;
    for (const auto& [r, v] : f2) ok &= v >= 2.0 / 3.0 && v < 1.0;
    return {"lemma_monotonicity", ok, "grid=1000"};
}

inline PropertyResult classifier_agreement(const CounterRng& rng, int n) {
    int refuted = 0;
    int neither = 0, witnessed = 0;
    for (int i = 0; i < n; ++i) {
        const double p = rng.uniform(2 * i, -4.0, 4.0);
        const double q = rng.uniform(2 * i + 1, -4.0, 4.0);
        const ConvexityClass c = classify_arsh_convexity(p, q);
        const SignSummary s = empirical_convexity_test(p, q, 2000, 1e3, rng.split(i + 1));
        if (refutes(s, c)) ++refuted;
        if (c == ConvexityClass::Neither) {
            ++neither;
            witnessed += witnesses_neither(s) ? 1 : 0;
        }
    }
    return {"classifier_agreement", refuted == 0,
            "refuted=" + std::to_string(refuted) + " neither_witnessed=" + std::to_string(witnessed) +
                "/" + std::to_string(neither)};
}

}  // namespace suite

/// Full invariant suite; `n` is the sample count of each randomised property.
inline std::vector<PropertyResult> run_invariant_suite(std::uint64_t seed, int n) {
    const CounterRng root(seed);
    std::vector<PropertyResult> out;
    out.push_back(suite::metric_symmetry(root.split(1), n));
    out.push_back(suite::metric_positivity(root.split(2), n));
    out.push_back(suite::chordal_bound(root.split(3), n));
    out.push_back(suite::absolute_ratio_forms(root.split(4), n));
    out.push_back(suite::oracle_triangle(root.split(5), n));
    out.push_back(suite::orthogonality(root.split(6), n));
    out.push_back(suite::lambert_identities(root.split(7), n));
    out.push_back(suite::lambert_direct_sides(root.split(8), n));
    out.push_back(suite::theorem_sweeps());
    out.push_back(suite::bound_forms());
    out.push_back(suite::holder_sandwich(root.split(9), n));
    out.push_back(suite::critical_curve(root.split(10), std::min(n, 200)));
    out.push_back(suite::lemma_monotonicity());
    out.push_back(suite::classifier_agreement(root.split(11), std::min(n, 200)));
    return out;
}

}  // namespace hyperlambert
