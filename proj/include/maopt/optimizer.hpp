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
#include <vector>

#include <Eigen/Dense>

#include "maopt/objective.hpp"
#include "maopt/scenario.hpp"

namespace maopt {

struct OptimizerOptions {
    double delta0 = 1.0;    // initial step size, reset every outer iteration
    double rho = 0.5;       // geometric shrink factor, 0 < rho < 1
    double tau = 1e-7;      // absolute |f(x_{t+1}) - f(x_t)| convergence threshold
    int max_outer = 1000;   // outer-iteration cap
    int max_inner = 50;     // line-search trial cap per outer iteration
    // Sufficient-decrease coefficient, applied to the realized projected step:
    // accept when f(x+) <= f(x) - (armijo / delta) * ||x - x+||^2. For an
    // interior step ||x - x+|| = delta ||g||, so this is the classical
    // sufficient-decrease test f(x+) <= f(x) - armijo * delta * ||g||^2; on the
    // boundary only actual movement counts, which keeps clamped coordinates
    // from making the test unsatisfiable.
    double armijo = 0.5;
    InitStrategy init_strategy = InitStrategy::endpoints_uniform;
    std::uint64_t init_seed = 0;  // used when init_strategy == seeded_random
    DegeneratePolicy degenerate_policy = DegeneratePolicy::trace_fallback;
};

enum class TerminationStatus { converged, outer_cap, error };

struct TraceRecord {
    int iter;             // 0 is the starting point
    double f;             // objective at x
    double step;          // accepted delta producing this iterate (0 for iter 0)
    double grad_norm;     // ||grad f|| at x
    int inner_trials;     // line-search trials spent on this step
    double flops;         // closed-form cost model for this iteration
    AntennaPositions x;
};

struct OptimizationTrace {
    std::vector<TraceRecord> records;
    TerminationStatus status = TerminationStatus::error;
    // Set when an outer iteration exhausted max_inner trials; the run then
    // terminates at the current iterate with converged status.
    bool line_search_exhausted = false;
    int degenerate_events = 0;  // gradient evaluations that used the trace fallback
};

struct OptimizationResult {
    AntennaPositions x;      // final positions
    double f = 0.0;          // final objective
    PowerAllocation powers;  // per-user minimum powers at the final positions
    OptimizationTrace trace;
};

struct BacktrackResult {
    AntennaPositions x;  // accepted iterate (x_t itself when !accepted)
    double f;            // objective at x
    double delta;        // last step size tried
    int trials;          // trials consumed
    bool accepted;
};

// Euclidean projection onto the feasible boxes: per-coordinate clamp.
// Output is always feasible (boxes interleave with d_min gaps).
AntennaPositions project(const AntennaPositions &x, const FeasibleRegions &regions);

// One backtracking line search: try x+ = project(x_t - delta g) along
// delta in {delta0, rho delta0, rho^2 delta0, ...}, accepting the first
// sufficient decrease (see OptimizerOptions::armijo). Trial points whose
// objective is undefined (singular gain) count as failed trials.
BacktrackResult backtracking_step(const AntennaPositions &x_t, const Gradient &g, double f_t,
                                  const OptimizerOptions &opts, const ValidatedScenario &scen);

// Full projected-gradient descent: closed-form gradient, line search,
// projection, until |f(x_{t+1}) - f(x_t)| <= tau or a cap is hit. The trace
// is monotone non-increasing in f with every iterate feasible, and two runs
// with identical inputs produce bit-identical traces.
OptimizationResult optimize(const ValidatedScenario &scen, const OptimizerOptions &opts);

enum class GradientMethod { closed_form, definition_based };

// Per-run flop model of the two gradient routes:
// closed_form      -> t_outer * (M^3 + M^2 N + t_inner N)
// definition_based -> t_outer * (M^3 + M^3 N + t_inner N)
double flop_count_estimate(int m, int n, int t_outer, int t_inner, GradientMethod method);

} // namespace maopt
