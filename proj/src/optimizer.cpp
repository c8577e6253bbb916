// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 maopt contributors

#include "maopt/optimizer.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "maopt/channel.hpp"
#include "maopt/errors.hpp"

namespace maopt {

AntennaPositions project(const AntennaPositions &x, const FeasibleRegions &regions)
{
    return x.cwiseMax(regions.lower).cwiseMin(regions.upper);
}

BacktrackResult backtracking_step(const AntennaPositions &x_t, const Gradient &g, double f_t,
                                  const OptimizerOptions &opts, const ValidatedScenario &scen)
{
    double delta = opts.delta0;
    for (int trial = 1; trial <= opts.max_inner; ++trial, delta *= opts.rho) {
        AntennaPositions candidate = project(x_t - delta * g, scen.regions);
        const double moved2 = (x_t - candidate).squaredNorm();
        double f_candidate;
        try {
            f_candidate = total_power_objective(candidate, scen);
        } catch (const SingularGainError &) {
            continue;  // undefined objective at the trial point counts as a failed trial
        }
        if (f_candidate <= f_t - opts.armijo / delta * moved2)
            return {std::move(candidate), f_candidate, delta, trial, true};
    }
    return {x_t, f_t, delta / opts.rho, opts.max_inner, false};
}

OptimizationResult optimize(const ValidatedScenario &scen, const OptimizerOptions &opts)
{
    if (!(opts.rho > 0.0 && opts.rho < 1.0))
        throw ValidationError({"rho must lie in (0, 1)"});
    if (opts.max_outer < 1 || opts.max_inner < 1)
        throw ValidationError({"iteration caps must be >= 1"});
    if (!(opts.delta0 > 0.0) || !(opts.tau > 0.0))
        throw ValidationError({"delta0 and tau must be positive"});

    const double m = scen.m(), n = scen.n();
    const double eval_cost = m * m * m + m * m * n;  // eigendecomposition + closed-form gradient

    OptimizationTrace trace;
    AntennaPositions x = initial_positions(scen.regions, opts.init_strategy, opts.init_seed);
    double f = total_power_objective(x, scen);
    trace.records.push_back({0, f, 0.0, std::numeric_limits<double>::quiet_NaN(), 0, eval_cost, x});

    for (int t = 1; t <= opts.max_outer; ++t) {
        Gradient g;
        try {
            GradientInfo ginfo;
            g = gradient_closed_form(x, scen, &ginfo, opts.degenerate_policy);
            if (ginfo.degenerate_fallback)
                ++trace.degenerate_events;
        } catch (const SingularGainError &e) {
            throw SingularGainError(std::string(e.what()) + " (outer iteration " +
                                        std::to_string(t) + ")",
                                    t);
        }
        trace.records.back().grad_norm = g.norm();

        BacktrackResult step = backtracking_step(x, g, f, opts, scen);
        if (!step.accepted) {
            trace.status = TerminationStatus::converged;
            trace.line_search_exhausted = true;
            break;
        }

        const double df = std::abs(step.f - f);
        x = std::move(step.x);
        f = step.f;
        trace.records.push_back({t, f, step.delta, std::numeric_limits<double>::quiet_NaN(),
                                 step.trials, eval_cost + step.trials * n, x});
        if (df <= opts.tau) {
            trace.status = TerminationStatus::converged;
            break;
        }
        if (t == opts.max_outer)
            trace.status = TerminationStatus::outer_cap;
    }

    if (std::isnan(trace.records.back().grad_norm))
        trace.records.back().grad_norm = gradient_closed_form(x, scen, nullptr,
                                                              opts.degenerate_policy)
                                             .norm();

    OptimizationResult out;
    out.x = x;
    out.f = f;
    out.powers = min_powers(x, scen);
    out.trace = std::move(trace);
    return out;
}

double flop_count_estimate(int m, int n, int t_outer, int t_inner, GradientMethod method)
{
    if (m < 1 || n < 1 || t_outer < 1 || t_inner < 1)
        throw ValidationError({"flop estimate inputs must be >= 1"});
    const double m3 = static_cast<double>(m) * m * m;
    const double grad = (method == GradientMethod::closed_form)
                            ? static_cast<double>(m) * m * n
                            : m3 * n;
    return t_outer * (m3 + grad + static_cast<double>(t_inner) * n);
}

} // namespace maopt
