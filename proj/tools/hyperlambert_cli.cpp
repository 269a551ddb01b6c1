// Command-line front end: Lambert quadrilateral tables, bound sweeps,
// the arsh convexity region map and the invariant suite, as CSV on stdout.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hyperlambert/commands.hpp"

namespace cli = hyperlambert::cli;

int main(int argc, char** argv) {
    CLI::App app{"Hyperbolic Lambert quadrilaterals and Hölder convexity of arsh"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "Also write the output to this file");

    cli::Quad quad{0.6, std::numbers::pi / 4};
    auto* quad_cmd = app.add_subcommand("quad", "One quadrilateral: side lengths, bounds, identity residuals");
    quad_cmd->add_option("--t", quad.t, "|v_c|, in (0, 1)")->required();
    quad_cmd->add_option("--theta", quad.theta, "arg v_c in radians, in (0, pi/2)")->required();

    cli::Sweep sweep{0.5, 1001};
    auto* sweep_cmd = app.add_subcommand("sweep", "Verification sweep over r at fixed s");
    sweep_cmd->add_option("--s", sweep.s, "th rho(v_a, v_c), in (0, 1)")->required();
    sweep_cmd->add_option("--n", sweep.n, "number of interior r samples")->capture_default_str();

    cli::Bounds bounds{0.05, 0.95, 19};
    auto* bounds_cmd = app.add_subcommand("bounds", "Product and sum bounds over an s grid");
    bounds_cmd->add_option("--s-lo", bounds.s_lo)->capture_default_str();
    bounds_cmd->add_option("--s-hi", bounds.s_hi)->capture_default_str();
    bounds_cmd->add_option("--n", bounds.n)->capture_default_str();

    cli::Region region{-4, 4, -4, 4, 21};
    auto* region_cmd = app.add_subcommand("region", "H_{p,q}-convexity class of arsh over a (p, q) grid");
    region_cmd->add_option("--p-lo", region.p_lo)->capture_default_str();
    region_cmd->add_option("--p-hi", region.p_hi)->capture_default_str();
    region_cmd->add_option("--q-lo", region.q_lo)->capture_default_str();
    region_cmd->add_option("--q-hi", region.q_hi)->capture_default_str();
    region_cmd->add_option("--n", region.n, "grid points per axis")->capture_default_str();

    cli::CritCurve crit{21};
    auto* crit_cmd = app.add_subcommand("critcurve", "Critical curve C(p) on [-2, 0]");
    crit_cmd->add_option("--n", crit.n)->capture_default_str();

    cli::Verify verify{42, 1000};
    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
    verify_cmd->add_option("--seed", verify.seed)->capture_default_str();
    verify_cmd->add_option("--n", verify.n, "samples per randomised property")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kUsage;
    }

    cli::Command cmd = quad;
    if (*quad_cmd) cmd = quad;
    else if (*sweep_cmd) cmd = sweep;
    else if (*bounds_cmd) cmd = bounds;
    else if (*region_cmd) cmd = region;
    else if (*crit_cmd) cmd = crit;
    else if (*verify_cmd) cmd = verify;

    std::ostringstream buffer;
    const int code = cli::run(cmd, buffer, std::cerr);
    const std::string text = buffer.str();
    std::cout << text << std::flush;
    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << '\n';
            return cli::kUsage;
        }
        file << text;
    }
    return code;
}
