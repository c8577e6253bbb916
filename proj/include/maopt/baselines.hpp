// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 maopt contributors

#pragma once

#include <cstdint>

#include "maopt/scenario.hpp"

namespace maopt {

// Monte-Carlo estimate of the average minimum total power under uniformly
// random in-box placements.
struct RpaEstimate {
    double mean_power = 0.0;
    double std_error = 0.0;
    int num_draws = 0;
    int num_rejections = 0;  // near-singular draws that were redrawn
};

// Fixed half-wavelength-style packing: x_i = (i - 1) * d_min.
AntennaPositions fpa_positions(const ValidatedScenario &scen);

// The in-box placement for draw `index` of the stream `seed`, attempt
// `attempt`. Exposed so single-draw results are reproducible in tests.
AntennaPositions rpa_draw_positions(const FeasibleRegions &regions, std::uint64_t seed,
                                    std::uint64_t index, std::uint64_t attempt = 0);

// Draw each x_i uniformly in its box, evaluate the total-power objective per
// draw, and return the sample mean and standard error. Deterministic given
// seed; draws use counter-based substreams so the result is independent of
// evaluation order. Near-singular draws are rejected and redrawn (counted in
// num_rejections), capped at 1000 attempts per draw.
RpaEstimate rpa_average_power(const ValidatedScenario &scen, int num_draws, std::uint64_t seed);

} // namespace maopt
