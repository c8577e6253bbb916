// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 maopt contributors

#include "maopt/baselines.hpp"

#include <cmath>
#include <string>

#include "maopt/errors.hpp"
#include "maopt/objective.hpp"
#include "maopt/rng.hpp"

namespace maopt {

namespace {
constexpr int kMaxAttemptsPerDraw = 1000;
}

AntennaPositions fpa_positions(const ValidatedScenario &scen)
{
    AntennaPositions x(scen.n());
    for (int i = 0; i < scen.n(); ++i)
        x(i) = i * scen.cfg.min_spacing;
    return x;
}

AntennaPositions rpa_draw_positions(const FeasibleRegions &regions, std::uint64_t seed,
                                    std::uint64_t index, std::uint64_t attempt)
{
    SplitMix64 stream(derive_seed(seed, index, attempt));
    AntennaPositions x(regions.size());
    for (int i = 0; i < regions.size(); ++i)
        x(i) = regions.lower(i) + stream.uniform() * (regions.upper(i) - regions.lower(i));
    return x;
}

RpaEstimate rpa_average_power(const ValidatedScenario &scen, int num_draws, std::uint64_t seed)
{
    if (num_draws < 1)
        throw Error("rpa_average_power needs at least one draw");

    RpaEstimate est;
    est.num_draws = num_draws;
    double sum = 0.0, sum_sq = 0.0;
    for (int j = 0; j < num_draws; ++j) {
        bool done = false;
        for (int attempt = 0; attempt < kMaxAttemptsPerDraw; ++attempt) {
            AntennaPositions x = rpa_draw_positions(scen.regions, seed,
                                                    static_cast<std::uint64_t>(j),
                                                    static_cast<std::uint64_t>(attempt));
            double f;
            try {
                f = total_power_objective(x, scen);
            } catch (const SingularGainError &) {
                ++est.num_rejections;
                continue;
            }
            sum += f;
            sum_sq += f * f;
            done = true;
            break;
        }
        if (!done)
            throw SingularGainError("every redraw for draw " + std::to_string(j) +
                                    " was near-singular (attempt cap " +
                                    std::to_string(kMaxAttemptsPerDraw) + ")");
    }

    est.mean_power = sum / num_draws;
    if (num_draws > 1) {
        const double var = (sum_sq - sum * sum / num_draws) / (num_draws - 1);
        est.std_error = std::sqrt(std::max(0.0, var) / num_draws);
    }
    return est;
}

} // namespace maopt
