#include <cmath>
#include <set>
#include <sstream>
#include <vector>

#include <catch_amalgamated.hpp>

#include "hyperlambert/csv.hpp"
#include "hyperlambert/monotone.hpp"
#include "hyperlambert/random.hpp"
#include "hyperlambert/roots.hpp"
#include "hyperlambert/sampling.hpp"

using namespace hyperlambert;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("check_monotone") {
    const std::vector<std::pair<double, double>> up{{0.1, 1}, {0.2, 2}, {0.3, 3}};
    CHECK(check_monotone(up, Direction::Increasing));
    CHECK_FALSE(check_monotone(up, Direction::Decreasing));

    const std::vector<std::pair<double, double>> flat_noise{{0.1, 1.0}, {0.2, 1.0 - 5e-14}, {0.3, 1.0}};
    CHECK(check_monotone(flat_noise, Direction::Increasing));
    const std::vector<std::pair<double, double>> dip{{0.1, 1.0}, {0.2, 1.0 - 1e-12}, {0.3, 1.0}};
    CHECK_FALSE(check_monotone(dip, Direction::Increasing));

    const std::vector<std::pair<double, double>> one{{0.1, 1}};
    CHECK_THROWS_AS(check_monotone(one, Direction::Increasing), InsufficientSamples);
    const std::vector<std::pair<double, double>> unordered{{0.2, 1}, {0.1, 2}};
    CHECK_THROWS_AS(check_monotone(unordered, Direction::Increasing), DomainError);
}

TEST_CASE("log bisection and golden section") {
    auto cube = [](double x) { return x * x * x; };
    const Bracket b = bracket_increasing_log(cube, 27.0);
    CHECK(cube(b.lo) < 27.0);
    CHECK(cube(b.hi) >= 27.0);
    CHECK_THAT(bisect_increasing_log(cube, 27.0, b), WithinRel(3.0, 1e-13));
    CHECK_THAT(bisect_increasing_log(cube, 1e-30, bracket_increasing_log(cube, 1e-30)), WithinRel(1e-10, 1e-13));
    CHECK_THROWS_AS(bisect_increasing_log(cube, 1.0, {0.0, 1.0}), DomainError);
    CHECK_THROWS_AS(bracket_increasing_log([](double) { return 0.0; }, 1.0), DomainError);

    const Extremum e = golden_section_max([](double x) { return -(x - 1.3) * (x - 1.3) + 2.0; }, -5, 5);
    CHECK_THAT(e.x, WithinAbs(1.3, 1e-6));  // x is only located to ~sqrt(eps)
    CHECK_THAT(e.value, WithinAbs(2.0, 1e-15));
}

TEST_CASE("counter RNG") {
    const CounterRng a(42), b(42), c(43);
    CHECK(a.bits(0) == b.bits(0));
    CHECK(a.bits(17) == b.bits(17));
    CHECK(a.bits(0) != c.bits(0));
    CHECK(a.split(1).bits(0) != a.split(2).bits(0));
    CHECK(a.split(1).bits(5) == b.split(1).bits(5));

    double sum = 0.0;
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 100000; ++i) {
        const double u = a.uniform(i);
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
        seen.insert(a.bits(i));
    }
    CHECK_THAT(sum / 100000, WithinAbs(0.5, 0.005));
    CHECK(seen.size() == 100000);
}

TEST_CASE("sampling helpers") {
    CHECK(grid_point(-4, 4, 5, 21) == -2.0);
    CHECK(grid_point(-4, 4, 10, 21) == 0.0);
    CHECK(grid_point(-4, 4, 0, 21) == -4.0);
    CHECK(grid_point(-4, 4, 20, 21) == 4.0);
    const CounterRng rng(1);
    for (int i = 0; i < 1000; ++i) CHECK(random_disk_point(rng, i, 0.95).vec().norm() <= 0.95);
}

TEST_CASE("csv formatting") {
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(-2.0) == "-2");
    CHECK(format_number(1.0940992859312160) == "1.09409928593122");
    CHECK(format_number(1e-20) == "1e-20");

    std::ostringstream out;
    CsvWriter w(out);
    w.header({"a", "b", "c"});
    w.row(1.5, "x", 3);
    CHECK(out.str() == "a,b,c\n1.5,x,3\n");
}
