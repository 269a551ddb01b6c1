#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <variant>

#include "csv.hpp"
#include "holder.hpp"
#include "lambert.hpp"
#include "sampling.hpp"
#include "suite.hpp"

namespace hyperlambert::cli {

struct Quad { double t; double theta; };
struct Sweep { double s; int n; };
struct Bounds { double s_lo; double s_hi; int n; };
struct Region { double p_lo; double p_hi; double q_lo; double q_hi; int n; };
struct CritCurve { int n; };
struct Verify { std::uint64_t seed; int n; };

using Command = std::variant<Quad, Sweep, Bounds, Region, CritCurve, Verify>;

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

inline constexpr double kQuadTolIdentity = 1e-12;
inline constexpr double kQuadTolCombined = 1e-10;

namespace detail {

inline void require(bool cond, const char* msg) {
    if (!cond) throw DomainError(msg);
}

inline bool open_unit(double v) { return v > 0.0 && v < 1.0; }

inline void validate(const Quad& c) {
    require(open_unit(c.t), "quad: --t must lie in (0, 1)");
    require(c.theta > 0.0 && c.theta < std::numbers::pi / 2, "quad: --theta must lie in (0, pi/2) radians");
}
inline void validate(const Sweep& c) {
    require(open_unit(c.s), "sweep: --s must lie in (0, 1)");
    require(c.n >= 10, "sweep: --n must be at least 10");
}
inline void validate(const Bounds& c) {
    require(open_unit(c.s_lo) && open_unit(c.s_hi), "bounds: s range must lie in (0, 1)");
    require(c.s_lo <= c.s_hi, "bounds: --s-lo must not exceed --s-hi");
    require(c.n >= 2, "bounds: --n must be at least 2");
}
inline void validate(const Region& c) {
    require(std::isfinite(c.p_lo) && std::isfinite(c.p_hi) && std::isfinite(c.q_lo) && std::isfinite(c.q_hi),
            "region: bounds must be finite");
    require(c.p_lo <= c.p_hi && c.q_lo <= c.q_hi, "region: lower bound exceeds upper bound");
    require(c.n >= 2, "region: --n must be at least 2");
}
inline void validate(const CritCurve& c) { require(c.n >= 2, "critcurve: --n must be at least 2"); }
inline void validate(const Verify& c) { require(c.n >= 2, "verify: --n must be at least 2"); }

inline int execute(const Quad& c, std::ostream& out) {
    const QuadParams p = QuadParams::from_angle(c.t, c.theta);
    const LambertQuad q = build_quad(p);
    const double s = p.s();
    const double th2 = std::pow(std::tanh(q.d1), 2) + std::pow(std::tanh(q.d2), 2);
    const double sh2 = std::pow(std::sinh(q.d3), 2) + std::pow(std::sinh(q.d4), 2);
    const double res_th = th2 - s * s;
    const double res_sh = sh2 - s * s / p.one_minus_s2();
    const double res_combined = 1.0 / th2 - 1.0 / sh2 - 1.0;
    const SumBounds sb = sum_bounds(s);

    CsvWriter w(out);
    w.header({"r", "d1", "d2", "d3", "d4", "product", "sum", "product_bound", "sum_lower", "sum_upper",
              "residual_th", "residual_sh", "residual_combined"});
    w.row(p.r(), q.d1, q.d2, q.d3, q.d4, q.d3 * q.d4, q.d3 + q.d4, product_bound(s), sb.lower, sb.upper,
          res_th, res_sh, res_combined);
    const bool ok = std::abs(res_th) < kQuadTolIdentity && std::abs(res_sh) < kQuadTolIdentity &&
                    std::abs(res_combined) < kQuadTolCombined;
    return ok ? kOk : kVerificationFailed;
}

inline int execute(const Sweep& c, std::ostream& out) {
    write_report(out, verify_theorems(c.s, c.n));
    return kOk;
}

inline int execute(const Bounds& c, std::ostream& out) {
    CsvWriter w(out);
    w.header({"s", "product_bound", "sum_lower", "sum_upper"});
    for (int i = 0; i < c.n; ++i) {
        const double s = grid_point(c.s_lo, c.s_hi, i, c.n);
        const SumBounds sb = sum_bounds(s);
        w.row(s, product_bound(s), sb.lower, sb.upper);
    }
    return kOk;
}

inline int execute(const Region& c, std::ostream& out) {
    CsvWriter w(out);
    w.header({"p", "q", "class", "c_of_p"});
    for (int i = 0; i < c.n; ++i) {
        const double p = grid_point(c.p_lo, c.p_hi, i, c.n);
        for (int j = 0; j < c.n; ++j) {
            const double q = grid_point(c.q_lo, c.q_hi, j, c.n);
            write_region_row(w, p, q, classify_arsh_convexity(p, q));
        }
    }
    return kOk;
}

inline int execute(const CritCurve& c, std::ostream& out) {
    CsvWriter w(out);
    w.header({"p", "c_of_p"});
    for (int i = 0; i < c.n; ++i) {
        const double p = grid_point(-2.0, 0.0, i, c.n);
        w.row(p, critical_curve_closed(p));
    }
    return kOk;
}

inline int execute(const Verify& c, std::ostream& out) {
    const auto results = run_invariant_suite(c.seed, c.n);
    int passed = 0;
    for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << ' ' << r.detail << '\n';
        passed += r.passed ? 1 : 0;
    }
    out << "summary " << passed << '/' << results.size() << " passed\n";
    return passed == static_cast<int>(results.size()) ? kOk : kVerificationFailed;
}

}  // namespace detail

/// Validate and execute a command. CSV goes to `out`, one-line diagnostics
/// to `err`. Returns 0 on success, 1 on a failed check, 2 on bad arguments.
inline int run(const Command& cmd, std::ostream& out, std::ostream& err) {
    try {
        std::visit([](const auto& c) { detail::validate(c); }, cmd);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    try {
        return std::visit([&](const auto& c) { return detail::execute(c, out); }, cmd);
    } catch (const VerificationFailure& e) {
        err << "verification failed: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace hyperlambert::cli
