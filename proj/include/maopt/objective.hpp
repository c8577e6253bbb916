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

#include <Eigen/Dense>

#include "maopt/channel.hpp"
#include "maopt/scenario.hpp"

namespace maopt {

// d f / d x_n for the total-power objective.
using Gradient = Eigen::VectorXd;

enum class FdMode { forward, central };
enum class DegeneratePolicy { trace_fallback, abort };

// Relative eigenvalue-gap floor under which the per-eigenvalue derivative
// formula is ill-conditioned and the trace identity takes over.
inline constexpr double kDegenerateGapRelTol = 1e-8;

// Side channel for gradient evaluations.
struct GradientInfo {
    bool degenerate_fallback = false;  // trace identity used due to a tied spectrum
    double max_imag_residue = 0.0;     // largest |Im| discarded, scaled by term size
};

// Total minimum uplink transmit power at positions x:
// f(x) = sum_i 1 / lambda_i{Z}. Equals the column-norm sum
// sum_i ||[H (H^H H)^{-1}]_{:,i}||^2 eps_i sigma^2 and tr{Z^{-1}}.
// Throws SingularGainError when min eig <= 1e-12 * max eig.
double total_power_objective(const AntennaPositions &x, const ValidatedScenario &scen);

// Gradient via the eigenvalue-derivative identity:
// g_n = sum_i (-1 / lambda_i^2) [V^{-1}]_{i,:} (dZ/dx_n) [V]_{:,i}.
// Each summand is provably real; |Im| is asserted <= 1e-9 (scaled) before the
// real part is taken. When consecutive eigenvalues tie within
// kDegenerateGapRelTol * max eig, the per-eigenvalue formula degenerates:
// trace_fallback reroutes through gradient_trace_form (flagged in `info`),
// abort throws DegenerateSpectrumError.
Gradient gradient_closed_form(const AntennaPositions &x, const ValidatedScenario &scen,
                              GradientInfo *info = nullptr,
                              DegeneratePolicy policy = DegeneratePolicy::trace_fallback);

// Definition-based gradient: forward differences g_n = [f(x + eps e_n) - f(x)] / eps,
// or the central variant [f(x + eps e_n) - f(x - eps e_n)] / (2 eps).
// Doubles as the complexity-benchmark competitor.
Gradient gradient_finite_difference(const AntennaPositions &x, const ValidatedScenario &scen,
                                    double epsilon, FdMode mode = FdMode::central);

// Independent oracle: g_n = -tr{Z^{-2} (dZ/dx_n)} via direct inversion.
// Well-defined even with repeated eigenvalues.
Gradient gradient_trace_form(const AntennaPositions &x, const ValidatedScenario &scen);

// Gradient from an already-computed eigensystem. Exposed so rescaling
// invariance (V -> V diag(c), V^{-1} -> diag(c)^{-1} V^{-1}) is testable.
Gradient gradient_from_eigensystem(const GainEigensystem &eig, const AntennaPositions &x,
                                   const ValidatedScenario &scen, GradientInfo *info = nullptr);

} // namespace maopt
