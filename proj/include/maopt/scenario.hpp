// SPDX-License-Identifier: Apache-2.0
//
// maopt: movable-antenna array position optimization for multiuser uplink
// Copyright (C) 2026 maopt contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace maopt {

// Antenna coordinates along the array axis, in the same length unit as the
// wavelength. Feasible vectors are strictly increasing with pairwise spacing
// of at least the scenario's minimum.
using AntennaPositions = Eigen::VectorXd;

// Per-user minimum transmit powers, linear units.
using PowerAllocation = Eigen::VectorXd;

// Problem instance. All lengths share the wavelength's unit; angles are
// radians in (-pi/2, pi/2].
struct ScenarioConfig {
    int num_users = 0;                 // M
    int num_antennas = 0;              // N, requires N >= M
    double wavelength = 1.0;           // lambda > 0
    std::vector<double> aoas;          // theta_i, one per user
    double noise_power = 1.0;          // sigma^2 > 0
    std::vector<double> rate_targets;  // r_i > 0, bits/s/Hz
    double span = 0.0;                 // L, array segment length
    double min_spacing = 0.5;          // d_min, inter-antenna floor
};

// Rate targets transformed to SINR targets: eps_i = 2^{r_i} - 1.
struct RateEpsilons {
    Eigen::VectorXd eps;
};

// Per-antenna movement boxes [lower_i, upper_i]. Boxes interleave strictly
// and share a common width (span - (N-1) d_min) / N, so any in-box placement
// keeps neighbours at least d_min apart.
struct FeasibleRegions {
    Eigen::VectorXd lower;  // F_i, F_1 = 0
    Eigen::VectorXd upper;  // G_i, G_N = span
    int size() const { return static_cast<int>(lower.size()); }
    double span() const { return upper(upper.size() - 1); }
    double box_width() const { return upper(0) - lower(0); }
};

// A config that passed validate_scenario, carrying the derived quantities
// every downstream operation needs.
struct ValidatedScenario {
    ScenarioConfig cfg;
    RateEpsilons epsilons;
    FeasibleRegions regions;

    int m() const { return cfg.num_users; }
    int n() const { return cfg.num_antennas; }
    // Diagonal of Omega = diag(eps_i sigma^2).
    Eigen::VectorXd omega_diag() const
    {
        return epsilons.eps * cfg.noise_power;
    }
};

// Outcome of validation. `scenario` is set iff `issues` is empty.
struct ValidationResult {
    std::optional<ValidatedScenario> scenario;
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};

enum class InitStrategy { midpoint, endpoints_uniform, seeded_random };

// Partition [0, span] into N equal-width boxes separated by d_min gaps.
// Throws GeometryError when span <= (N-1) * d_min.
FeasibleRegions build_feasible_regions(double span, int num_antennas, double min_spacing);

// Check every ScenarioConfig invariant; never throws. On success the result
// carries the config augmented with epsilons and regions; on failure every
// violated invariant is listed.
ValidationResult validate_scenario(const ScenarioConfig &cfg);

// Same, but throwing ValidationError on failure. Convenience for call sites
// that treat invalid input as fatal.
ValidatedScenario validate_scenario_or_throw(const ScenarioConfig &cfg);

// Starting placements. endpoints_uniform spreads antennas evenly over
// [0, span] (the N=1 case collapses to the origin) and clamps into the boxes;
// midpoint uses box centers; seeded_random draws uniformly inside each box.
AntennaPositions initial_positions(const FeasibleRegions &regions, InitStrategy strategy,
                                   std::uint64_t seed = 0);

// Tolerance under which two user sines count as identical (rank collapse for
// every x).
inline constexpr double kDuplicateSineTol = 1e-12;

} // namespace maopt
