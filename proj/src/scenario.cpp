// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 maopt contributors

#include "maopt/scenario.hpp"

#include <cmath>
#include <numbers>

#include "maopt/errors.hpp"
#include "maopt/optimizer.hpp"
#include "maopt/rng.hpp"

namespace maopt {

FeasibleRegions build_feasible_regions(double span, int num_antennas, double min_spacing)
{
    if (num_antennas < 1)
        throw GeometryError("need at least one antenna");
    if (min_spacing < 0.0)
        throw GeometryError("negative minimum spacing");
    const double occupied = (num_antennas - 1) * min_spacing;
    if (!(span > occupied))
        throw GeometryError("span " + std::to_string(span) + " leaves no movement room for " +
                            std::to_string(num_antennas) + " antennas at spacing " +
                            std::to_string(min_spacing));

    const int n = num_antennas;
    const double width = (span - occupied) / n;
    FeasibleRegions r;
    r.lower.resize(n);
    r.upper.resize(n);
    for (int i = 0; i < n; ++i) {
        r.lower(i) = width * i + min_spacing * i;
        r.upper(i) = width * (i + 1) + min_spacing * i;
    }
    return r;
}

ValidationResult validate_scenario(const ScenarioConfig &cfg)
{
    ValidationResult out;
    auto &issues = out.issues;

    if (cfg.num_users < 1)
        issues.push_back("num_users must be >= 1");
    if (cfg.num_antennas < 1)
        issues.push_back("num_antennas must be >= 1");
    if (cfg.num_users >= 1 && cfg.num_antennas >= 1 && cfg.num_antennas < cfg.num_users)
        issues.push_back("N < M: need at least as many antennas as users");
    if (!(cfg.wavelength > 0.0))
        issues.push_back("wavelength must be positive");
    if (!(cfg.noise_power > 0.0))
        issues.push_back("noise_power must be positive");
    if (!(cfg.min_spacing > 0.0))
        issues.push_back("min_spacing must be positive");
    if (!(cfg.span > 0.0))
        issues.push_back("span must be positive");

    if (static_cast<int>(cfg.aoas.size()) != cfg.num_users) {
        issues.push_back("aoas must list exactly num_users angles");
    } else {
        constexpr double half_pi = std::numbers::pi / 2.0;
        for (int i = 0; i < cfg.num_users; ++i) {
            const double th = cfg.aoas[static_cast<size_t>(i)];
            if (!std::isfinite(th) || th <= -half_pi || th > half_pi)
                issues.push_back("aoa " + std::to_string(i + 1) +
                                 " outside (-pi/2, pi/2]: " + std::to_string(th));
        }
        for (int i = 0; i < cfg.num_users; ++i)
            for (int j = i + 1; j < cfg.num_users; ++j) {
                const double si = std::sin(cfg.aoas[static_cast<size_t>(i)]);
                const double sj = std::sin(cfg.aoas[static_cast<size_t>(j)]);
                if (std::abs(si - sj) <= kDuplicateSineTol)
                    issues.push_back("duplicate sin theta for users " + std::to_string(i + 1) +
                                     " and " + std::to_string(j + 1) +
                                     ": channel is rank-deficient for every x");
            }
    }

    if (static_cast<int>(cfg.rate_targets.size()) != cfg.num_users) {
        issues.push_back("rate_targets must list exactly num_users rates");
    } else {
        for (int i = 0; i < cfg.num_users; ++i)
            if (!(cfg.rate_targets[static_cast<size_t>(i)] > 0.0))
                issues.push_back("rate target " + std::to_string(i + 1) + " must be positive");
    }

    if (cfg.num_antennas >= 1 && cfg.min_spacing > 0.0 &&
        !(cfg.span > (cfg.num_antennas - 1) * cfg.min_spacing))
        issues.push_back("span <= (N-1)*min_spacing: feasible boxes have no width");

    if (!issues.empty())
        return out;

    ValidatedScenario scen;
    scen.cfg = cfg;
    scen.epsilons.eps.resize(cfg.num_users);
    for (int i = 0; i < cfg.num_users; ++i)
        scen.epsilons.eps(i) = std::exp2(cfg.rate_targets[static_cast<size_t>(i)]) - 1.0;
    scen.regions = build_feasible_regions(cfg.span, cfg.num_antennas, cfg.min_spacing);
    out.scenario = std::move(scen);
    return out;
}

ValidatedScenario validate_scenario_or_throw(const ScenarioConfig &cfg)
{
    ValidationResult r = validate_scenario(cfg);
    if (!r.ok())
        throw ValidationError(std::move(r.issues));
    return *std::move(r.scenario);
}

AntennaPositions initial_positions(const FeasibleRegions &regions, InitStrategy strategy,
                                   std::uint64_t seed)
{
    const int n = regions.size();
    AntennaPositions x(n);
    switch (strategy) {
    case InitStrategy::midpoint:
        x = 0.5 * (regions.lower + regions.upper);
        break;
    case InitStrategy::endpoints_uniform: {
        const double span = regions.span();
        for (int i = 0; i < n; ++i)
            x(i) = (n == 1) ? 0.0 : span * i / (n - 1);
        x = project(x, regions);
        break;
    }
    case InitStrategy::seeded_random: {
        SplitMix64 stream(derive_seed(seed, 0x696e6974ULL));
        for (int i = 0; i < n; ++i)
            x(i) = regions.lower(i) + stream.uniform() * (regions.upper(i) - regions.lower(i));
        break;
    }
    }
    return x;
}

} // namespace maopt
