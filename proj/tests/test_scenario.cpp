// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 maopt contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "maopt/errors.hpp"
#include "maopt/rng.hpp"
#include "maopt/scenario.hpp"
#include "maopt/scenario_io.hpp"
#include "test_support.hpp"

using namespace maopt;
using doctest::Approx;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("feasible regions: interleaved equal boxes")
{
    FeasibleRegions r = build_feasible_regions(4.5, 4, 0.5);
    const double f_expect[4] = {0.0, 1.25, 2.5, 3.75};
    const double g_expect[4] = {0.75, 2.0, 3.25, 4.5};
    for (int i = 0; i < 4; ++i) {
        CHECK(r.lower(i) == Approx(f_expect[i]).epsilon(1e-15));
        CHECK(r.upper(i) == Approx(g_expect[i]).epsilon(1e-15));
    }
    CHECK(r.box_width() == Approx(0.75).epsilon(1e-15));
    CHECK(r.span() == Approx(4.5).epsilon(1e-15));
}

TEST_CASE("feasible regions: single antenna spans the segment")
{
    FeasibleRegions r = build_feasible_regions(1.0, 1, 0.5);
    CHECK(r.size() == 1);
    CHECK(r.lower(0) == 0.0);
    CHECK(r.upper(0) == 1.0);
}

TEST_CASE("feasible regions: infeasible geometry rejected")
{
    CHECK_THROWS_AS(build_feasible_regions(1.0, 3, 0.5), GeometryError);
    // Boundary case: span exactly (N-1)*d_min leaves zero-width boxes.
    CHECK_THROWS_AS(build_feasible_regions(1.0, 3, 0.5), GeometryError);
    CHECK_THROWS_AS(build_feasible_regions(1.5, 4, 0.5), GeometryError);
}

TEST_CASE("feasible regions: box width constant across antennas")
{
    for (auto [span, n] : {std::pair{4.5, 4}, {10.5, 8}, {3.0, 5}, {100.0, 3}}) {
        FeasibleRegions r = build_feasible_regions(span, n, 0.5);
        double wmin = 1e300, wmax = -1e300;
        for (int i = 0; i < n; ++i) {
            const double w = r.upper(i) - r.lower(i);
            wmin = std::min(wmin, w);
            wmax = std::max(wmax, w);
        }
        CHECK(wmax - wmin <= 1e-12 * span);
    }
}

TEST_CASE("feasible regions: every in-box sample keeps the spacing floor")
{
    SplitMix64 rng(7);
    for (auto [span, n] : {std::pair{4.5, 4}, {10.5, 8}, {2.5, 4}}) {
        FeasibleRegions r = build_feasible_regions(span, n, 0.5);
        for (int rep = 0; rep < 200; ++rep) {
            Eigen::VectorXd x(n);
            for (int i = 0; i < n; ++i)
                x(i) = r.lower(i) + rng.uniform() * (r.upper(i) - r.lower(i));
            for (int i = 0; i + 1 < n; ++i)
                CHECK(x(i + 1) - x(i) >= 0.5 - 1e-12);
        }
    }
}

TEST_CASE("validation: reference config is accepted with unit SINR targets")
{
    ValidationResult v = validate_scenario(testsup::three_user_config());
    REQUIRE(v.ok());
    const ValidatedScenario &s = *v.scenario;
    CHECK(s.m() == 3);
    CHECK(s.n() == 4);
    for (int i = 0; i < 3; ++i)
        CHECK(s.epsilons.eps(i) == Approx(1.0).epsilon(1e-15));
    CHECK(s.regions.lower(0) == 0.0);
    CHECK(s.omega_diag()(2) == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("validation: duplicate sines are rejected")
{
    ScenarioConfig cfg = testsup::three_user_config();
    cfg.num_users = 2;
    cfg.aoas = {pi / 6, pi / 6};
    cfg.rate_targets = {1.0, 1.0};
    ValidationResult v = validate_scenario(cfg);
    REQUIRE_FALSE(v.ok());
    bool mentioned = false;
    for (const auto &msg : v.issues)
        mentioned = mentioned || msg.find("duplicate sin") != std::string::npos;
    CHECK(mentioned);

    // Collisions inside the tolerance count too.
    cfg.aoas = {0.3, std::asin(std::sin(0.3) + 1e-13)};
    CHECK_FALSE(validate_scenario(cfg).ok());
    // Just outside the tolerance they do not.
    cfg.aoas = {0.3, std::asin(std::sin(0.3) + 1e-9)};
    CHECK(validate_scenario(cfg).ok());
}

TEST_CASE("validation: fewer antennas than users is rejected")
{
    ScenarioConfig cfg = testsup::three_user_config();
    cfg.num_antennas = 2;
    ValidationResult v = validate_scenario(cfg);
    REQUIRE_FALSE(v.ok());
    bool mentioned = false;
    for (const auto &msg : v.issues)
        mentioned = mentioned || msg.find("N < M") != std::string::npos;
    CHECK(mentioned);
}

TEST_CASE("validation: aggregates every violation instead of stopping early")
{
    ScenarioConfig cfg = testsup::three_user_config();
    cfg.num_antennas = 2;      // N < M
    cfg.noise_power = -1.0;    // bad sigma^2
    cfg.rate_targets = {1.0, 0.0, 1.0};  // bad rate
    ValidationResult v = validate_scenario(cfg);
    REQUIRE_FALSE(v.ok());
    CHECK(v.issues.size() >= 3);
}

TEST_CASE("validation: angle domain is (-pi/2, pi/2]")
{
    ScenarioConfig cfg = testsup::single_user_config();
    cfg.aoas = {pi / 2};
    CHECK(validate_scenario(cfg).ok());
    cfg.aoas = {-pi / 2};
    CHECK_FALSE(validate_scenario(cfg).ok());
    cfg.aoas = {2.0};
    CHECK_FALSE(validate_scenario(cfg).ok());
}

TEST_CASE("validation: throwing variant raises ValidationError")
{
    ScenarioConfig cfg = testsup::three_user_config();
    cfg.span = -1.0;
    CHECK_THROWS_AS(validate_scenario_or_throw(cfg), ValidationError);
    CHECK_NOTHROW(validate_scenario_or_throw(testsup::three_user_config()));
}

TEST_CASE("initial positions: uniform endpoints reproduce the pinned layout")
{
    FeasibleRegions r = build_feasible_regions(4.5, 4, 0.5);
    AntennaPositions x = initial_positions(r, InitStrategy::endpoints_uniform);
    const double expect[4] = {0.0, 1.5, 3.0, 4.5};
    for (int i = 0; i < 4; ++i)
        CHECK(x(i) == Approx(expect[i]).epsilon(1e-15));
}

TEST_CASE("initial positions: box midpoints")
{
    FeasibleRegions r = build_feasible_regions(4.5, 4, 0.5);
    AntennaPositions x = initial_positions(r, InitStrategy::midpoint);
    const double expect[4] = {0.375, 1.625, 2.875, 4.125};
    for (int i = 0; i < 4; ++i)
        CHECK(x(i) == Approx(expect[i]).epsilon(1e-15));

    FeasibleRegions one = build_feasible_regions(1.0, 1, 0.5);
    CHECK(initial_positions(one, InitStrategy::midpoint)(0) == Approx(0.5).epsilon(1e-15));
}

TEST_CASE("initial positions: every strategy lands inside the boxes")
{
    for (auto [span, n] : {std::pair{4.5, 4}, {2.5, 4}, {100.0, 3}, {3.0, 5}}) {
        FeasibleRegions r = build_feasible_regions(span, n, 0.5);
        for (auto strat :
             {InitStrategy::midpoint, InitStrategy::endpoints_uniform, InitStrategy::seeded_random}) {
            AntennaPositions x = initial_positions(r, strat, 11);
            for (int i = 0; i < n; ++i) {
                CHECK(x(i) >= r.lower(i) - 1e-15);
                CHECK(x(i) <= r.upper(i) + 1e-15);
            }
        }
    }
}

TEST_CASE("initial positions: seeded draws are reproducible and seed-sensitive")
{
    FeasibleRegions r = build_feasible_regions(4.5, 4, 0.5);
    AntennaPositions a = initial_positions(r, InitStrategy::seeded_random, 3);
    AntennaPositions b = initial_positions(r, InitStrategy::seeded_random, 3);
    AntennaPositions c = initial_positions(r, InitStrategy::seeded_random, 4);
    CHECK((a - b).norm() == 0.0);
    CHECK((a - c).norm() > 0.0);
}

TEST_CASE("angle parsing: pi fractions and plain radians")
{
    CHECK(parse_angle("pi/16") == Approx(pi / 16).epsilon(1e-15));
    CHECK(parse_angle("pi") == Approx(pi).epsilon(1e-15));
    CHECK(parse_angle("-pi/2") == Approx(-pi / 2).epsilon(1e-15));
    CHECK(parse_angle("2pi/3") == Approx(2 * pi / 3).epsilon(1e-15));
    CHECK(parse_angle("0.5*pi") == Approx(pi / 2).epsilon(1e-15));
    CHECK(parse_angle("1.5707963267948966") == Approx(pi / 2).epsilon(1e-15));
    CHECK(parse_angle(" 0.25 ") == Approx(0.25).epsilon(1e-15));
    CHECK_THROWS_AS(parse_angle("piz"), ParseError);
    CHECK_THROWS_AS(parse_angle("pi/0"), ParseError);
    CHECK_THROWS_AS(parse_angle(""), ParseError);
}

TEST_CASE("scenario files: the shipped example round-trips")
{
    ScenarioConfig cfg = load_scenario(std::string(MAOPT_SCENARIO_DIR) + "/three_users.json");
    CHECK(cfg.num_users == 3);
    CHECK(cfg.num_antennas == 4);
    CHECK(cfg.aoas[0] == Approx(pi / 16).epsilon(1e-15));
    CHECK(cfg.aoas[2] == Approx(pi / 2).epsilon(1e-15));
    CHECK(cfg.rate_targets == std::vector<double>{1.0, 1.0, 1.0});
    CHECK(cfg.span == 4.5);
    CHECK(validate_scenario(cfg).ok());
}

TEST_CASE("scenario files: parse failures carry diagnostics")
{
    CHECK_THROWS_AS(parse_scenario_json("{ not json", "inline"), ParseError);
    CHECK_THROWS_AS(parse_scenario_json("[1,2]", "inline"), ParseError);
    CHECK_THROWS_AS(parse_scenario_json(R"({"num_users": 3})", "inline"), ParseError);
    CHECK_THROWS_AS(load_scenario("/nonexistent/path.json"), ParseError);
}

TEST_CASE("scenario files: scalar rate target broadcasts to all users")
{
    const char *text = R"({"num_users": 3, "num_antennas": 4,
        "aoas": ["pi/16", "pi/10", "pi/2"], "noise_power": 1.0,
        "rate_targets": 2.0, "span": 4.5, "min_spacing": 0.5})";
    ScenarioConfig cfg = parse_scenario_json(text, "inline");
    CHECK(cfg.rate_targets == std::vector<double>{2.0, 2.0, 2.0});
    CHECK(cfg.wavelength == 1.0);  // default
}

TEST_CASE("sweep specs: shipped example loads with defaults")
{
    SweepSpec spec = load_sweep_spec(std::string(MAOPT_SCENARIO_DIR) + "/sweep_antennas.json");
    CHECK(spec.parameter == SweepSpec::Parameter::num_antennas);
    CHECK(spec.values == std::vector<double>{4, 5, 6, 7, 8});
    CHECK(spec.seeds.size() == 8);
    CHECK(spec.rpa_draws == 10000);
    CHECK(spec.scenario_path.find("three_users.json") != std::string::npos);
    CHECK_NOTHROW(load_scenario(spec.scenario_path));
}

TEST_CASE("sweep specs: invalid grids are rejected")
{
    const auto dir = std::filesystem::temp_directory_path() / "maopt_test_specs";
    std::filesystem::create_directories(dir);
    auto write = [&](const char *name, const char *text) {
        std::ofstream out(dir / name);
        out << text;
        return (dir / name).string();
    };
    CHECK_THROWS_AS(load_sweep_spec(write("bad_order.json",
                                          R"({"parameter":"span","values":[2,1],"scenario":"s.json"})")),
                    ParseError);
    CHECK_THROWS_AS(load_sweep_spec(write("bad_param.json",
                                          R"({"parameter":"bogus","values":[1,2],"scenario":"s.json"})")),
                    ParseError);
    CHECK_THROWS_AS(load_sweep_spec(write("empty.json",
                                          R"({"parameter":"span","values":[],"scenario":"s.json"})")),
                    ParseError);
}
