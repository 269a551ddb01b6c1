// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
// argv[1] is the path to the hyperlambert CLI binary.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "hyperlambert/hyperlambert.hpp"
#include "hyperlambert/suite.hpp"

using namespace hyperlambert;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "  " << detail << '\n';
    if (!ok) ++failures;
}

std::string num(double v) { return format_number(v); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

QuadParams grid_params(int i, int j) {
    const double t = grid_point(0.05, 0.95, i, 100);
    const double theta = grid_point(0.05 * std::numbers::pi / 2, 0.95 * std::numbers::pi / 2, j, 100);
    return QuadParams::from_angle(t, theta);
}

void identity_suite() {
    const auto t0 = std::chrono::steady_clock::now();
    double th = 0, sh = 0, comb = 0;
    for (int i = 0; i < 100; ++i)
        for (int j = 0; j < 100; ++j) {
            const QuadParams p = grid_params(i, j);
            const LambertQuad q = build_quad(p);
            const double s = p.s();
            const double th2 = std::pow(std::tanh(q.d1), 2) + std::pow(std::tanh(q.d2), 2);
            const double sh2 = std::pow(std::sinh(q.d3), 2) + std::pow(std::sinh(q.d4), 2);
            th = std::max(th, std::abs(th2 - s * s));
            sh = std::max(sh, std::abs(sh2 - s * s / p.one_minus_s2()));
            comb = std::max(comb, std::abs(1.0 / th2 - 1.0 / sh2 - 1.0));
        }
    const double secs = seconds_since(t0);
    report("identity_suite", th < 1e-12 && sh < 1e-12 && comb < 1e-10 && secs < 5.0,
           "th=" + num(th) + " sh=" + num(sh) + " combined=" + num(comb) + " seconds=" + num(secs));
}

void oracle_triangle() {
    const auto t0 = std::chrono::steady_clock::now();
    const CounterRng rng(42);
    double ends = 0, integ = 0;
    for (int i = 0; i < 1000; ++i) {
        const DiskPoint x = random_disk_point(rng, 2 * i, 0.95);
        const DiskPoint y = random_disk_point(rng, 2 * i + 1, 0.95);
        const double d = rho_disk(x, y);
        const double e = rho_by_endpoints(x, y);
        const double q = rho_by_integration(x, y, 4096);
        ends = std::max(ends, std::abs(d - e));
        integ = std::max({integ, std::abs(d - q), std::abs(e - q)});
    }
    const double secs = seconds_since(t0);
    report("oracle_triangle", ends <= 1e-10 && integ <= 1e-6 && secs < 30.0,
           "endpoints=" + num(ends) + " integration=" + num(integ) + " seconds=" + num(secs));
}

void closed_vs_direct() {
    double side = 0, ident = 0;
    for (int i = 0; i < 100; ++i)
        for (int j = 0; j < 100; ++j) {
            const LambertQuad q = build_quad(grid_params(i, j));
            const DirectSides d = side_lengths_direct(q);
            side = std::max({side, std::abs(q.d3 - d.d3_metric), std::abs(q.d4 - d.d4_metric),
                             std::abs(q.d3 - d.d3_fs), std::abs(q.d4 - d.d4_fs)});
            ident = std::max({ident, std::abs(d.d3_identity_residual), std::abs(d.d4_identity_residual)});
        }
    report("closed_form_vs_direct_sides", side <= 1e-10 && ident <= 1e-12,
           "sides=" + num(side) + " fs_identity=" + num(ident));
}

constexpr std::array<double, 6> kSweepS{0.1, 0.3, 0.5, 0.7, 0.9, 0.95};

void theorem_sweeps() {
    bool ok = true;
    std::string detail;
    for (double s : kSweepS) {
        try {
            const VerificationReport rep = verify_theorems(s, 1001);
            const double step = 1.0 / 1002;
            const double r_max = rep.rows[rep.argmax_product].r;
            const LambertQuad b = build_quad(QuadParams::from_sr(s, kInvSqrt2));
            const double pgap = std::abs(b.d3 * b.d4 - product_bound(s));
            const double sgap = std::abs(b.d3 + b.d4 - sum_bounds(s).upper);
            const bool here = std::abs(r_max - kInvSqrt2) <= step && rep.max_violation <= 1e-13 &&
                              pgap <= 1e-13 && sgap <= 1e-13;
            ok &= here;
            detail += " s=" + num(s) + (here ? ":ok" : ":bad") + "(argmax_r=" + num(r_max) +
                      " bisector=" + num(std::max(pgap, sgap)) + ")";
        } catch (const VerificationFailure& e) {
            ok = false;
            detail += " s=" + num(s) + ":" + e.what() + "@r=" + num(e.r());
        }
    }
    report("bound_sweeps", ok, detail.substr(1));
}

void side_comparisons() {
    int violations = 0, points = 0;
    for (double s : kSweepS) {
        const double stretch = 1.0 / std::sqrt((1.0 - s) * (1.0 + s));
        for (int i = 1; i <= 1001; ++i) {
            const LambertQuad q = build_quad(QuadParams::from_sr(s, i / 1002.0));
            ++points;
            if (!(q.d2 < q.d3 && q.d3 < stretch * q.d2 && q.d1 < q.d4 && q.d4 < stretch * q.d1))
                ++violations;
        }
    }
    report("side_comparisons", violations == 0,
           "points=" + std::to_string(points) + " violations=" + std::to_string(violations));
}

void orthogonality() {
    const CounterRng rng(42);
    double ortho = 0, radius = 0, max_center = 0, relative = 0;
    int circles = 0, over = 0;
    for (int i = 0; circles < 1000; ++i) {
        const DiskPoint x = random_disk_point(rng, 2 * i, 0.95);
        const DiskPoint y = random_disk_point(rng, 2 * i + 1, 0.95);
        const auto carrier = carrier_through(x, y);
        const auto* c = std::get_if<OrthoCircle>(&carrier);
        if (!c) continue;
        ++circles;
        const double res = std::abs(c->orthogonality_residual());
        ortho = std::max(ortho, res);
        relative = std::max(relative, res / c->center.sq_norm());
        if (res > 1e-10) ++over;
        radius = std::max(radius, std::abs(c->radius - orthogonal_radius(c->center)));
        max_center = std::max(max_center, c->center.norm());
    }
    report("orthogonality", ortho <= 1e-10 && radius <= 1e-9,
           "circles=" + std::to_string(circles) + " residual=" + num(ortho) + " over_1e-10=" +
               std::to_string(over) + " relative_residual=" + num(relative) + " radius_forms=" + num(radius) +
               " max_center_norm=" + num(max_center));
}

void critical_curve_anchors() {
    const double lo = std::abs(critical_curve_C(-2.0 + 1e-6) + 2.0);
    const double hi = std::abs(critical_curve_C(-1e-6) - 1.0);
    double dual = 0;
    for (int i = 1; i <= 50; ++i) {
        const double p = -2.0 + 2.0 * i / 51;
        dual = std::max(dual, std::abs(critical_curve_C(p) - suite::critical_curve_by_maximisation(p)));
    }
    report("critical_curve", lo < 1e-3 && hi < 1e-3 && dual <= 1e-9,
           "near_-2=" + num(lo) + " near_0=" + num(hi) + " dual_method=" + num(dual));
}

void classifier() {
    const CounterRng rng(42);
    int contradictions = 0, neither = 0, neither_witnessed = 0, neither_wide = 0;
    std::string first;
    for (int i = 0; i < 21; ++i)
        for (int j = 0; j < 21; ++j) {
            const double p = grid_point(-4, 4, i, 21);
            const double q = grid_point(-4, 4, j, 21);
            const ConvexityClass c = classify_arsh_convexity(p, q);
            const CounterRng stream = rng.split(21 * i + j);
            const SignSummary sum = empirical_convexity_test(p, q, 10000, 1e3, stream);
            if (refutes(sum, c)) {
                if (contradictions++ == 0) first = " first=(" + num(p) + "," + num(q) + ")";
            }
            if (c == ConvexityClass::Neither) {
                ++neither;
                if (witnesses_neither(sum))
                    ++neither_witnessed;
                else if (witnesses_neither(empirical_convexity_test(p, q, 10000, 1e8, stream)))
                    ++neither_wide;
            }
        }

    struct Anchor {
        double p, q;
        ConvexityClass expected;
    };
    const std::array<Anchor, 4> anchors{{{1, 1, ConvexityClass::StrictlyConcave},
                                         {-3, -3, ConvexityClass::StrictlyConvex},
                                         {0, 0.5, ConvexityClass::Neither},
                                         {0, 0, ConvexityClass::StrictlyConcave}}};
    int anchor_bad = 0;
    for (std::size_t k = 0; k < anchors.size(); ++k) {
        const auto& a = anchors[k];
        const ConvexityClass c = classify_arsh_convexity(a.p, a.q);
        const SignSummary sum = empirical_convexity_test(a.p, a.q, 10000, 1e3, rng.split(1000 + k));
        const bool evidence =
            a.expected == ConvexityClass::Neither ? witnesses_neither(sum) : !refutes(sum, c);
        if (c != a.expected || !evidence) ++anchor_bad;
    }
    report("convexity_classifier", contradictions == 0 && anchor_bad == 0,
           "grid=441 contradictions=" + std::to_string(contradictions) + first +
               " anchors_failed=" + std::to_string(anchor_bad) + " neither=" + std::to_string(neither) +
               " witnessed_at_1e3=" + std::to_string(neither_witnessed) +
               " witnessed_at_1e8=" + std::to_string(neither_wide));
}

std::string capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    status = pclose(pipe);
    return out;
}

void cli_determinism(const char* binary) {
    if (!binary) {
        report("cli_determinism", false, "no CLI path given");
        return;
    }
    const std::string cmd = std::string("\"") + binary + "\" verify --seed 42 --n 1000";
    int s1 = 0, s2 = 0;
    const std::string a = capture(cmd, s1);
    const std::string b = capture(cmd, s2);
    report("cli_determinism", s1 == 0 && s2 == 0 && !a.empty() && a == b,
           "exit=" + std::to_string(s1) + "," + std::to_string(s2) + " bytes=" + std::to_string(a.size()) +
               " identical=" + (a == b ? "yes" : "no"));
}

}  // namespace

int main(int argc, char** argv) {
    identity_suite();
    oracle_triangle();
    closed_vs_direct();
    theorem_sweeps();
    side_comparisons();
    orthogonality();
    critical_curve_anchors();
    classifier();
    cli_determinism(argc > 1 ? argv[1] : nullptr);
    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << '\n';
    return failures == 0 ? 0 : 1;
}
