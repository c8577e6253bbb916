// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 maopt contributors
//
// Acceptance gate: every numbered criterion below prints exactly one
// PASS/FAIL line; the process exits with the number of failures. Criteria
// 1-4 share one 100-point cloud; 11 regenerates the CSV artifacts of 1-8 and
// byte-compares them.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "maopt/channel.hpp"
#include "maopt/harness.hpp"
#include "maopt/objective.hpp"
#include "maopt/optimizer.hpp"

using namespace maopt;

namespace {

constexpr double pi = std::numbers::pi;

ScenarioConfig base_config()
{
    ScenarioConfig cfg;
    cfg.num_users = 3;
    cfg.num_antennas = 4;
    cfg.wavelength = 1.0;
    cfg.aoas = {pi / 16, pi / 10, pi / 2};
    cfg.noise_power = 1.0;
    cfg.rate_targets = {1.0, 1.0, 1.0};
    cfg.span = 4.5;
    cfg.min_spacing = 0.5;
    return cfg;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Gate {
    int failures = 0;
    std::vector<std::pair<std::string, std::string>> artifacts;  // name -> first-run bytes

    void report(int num, const char *name, bool pass, const std::string &detail)
    {
        std::printf("criterion %2d %-28s %s  %s\n", num, name, pass ? "PASS" : "FAIL",
                    detail.c_str());
        if (!pass)
            ++failures;
    }

    void keep(const std::string &name, const std::string &bytes)
    {
        artifacts.emplace_back(name, bytes);
    }
};

std::string fmt(const char *format, ...)
{
    va_list args;
    va_start(args, format);
    char buf[256];
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

// Generators shared by the first pass and the criterion-11 re-run. Inputs are
// fixed, so outputs must be byte-identical across calls.

GradcheckReport gen_gradcheck()
{
    return run_gradcheck(validate_scenario_or_throw(base_config()), 100, 42);
}

SinrValidationReport gen_sinr()
{
    return run_validate_sinr(validate_scenario_or_throw(base_config()), 1000000, 42);
}

ConvergenceRun gen_convergence()
{
    return run_convergence(base_config(), {2.5, 3.5, 4.5}, OptimizerOptions{});
}

SweepSpec full_spec(SweepSpec::Parameter p, std::vector<double> values)
{
    SweepSpec spec;
    spec.parameter = p;
    spec.values = std::move(values);
    spec.seeds = {1, 2, 3, 4, 5, 6, 7, 8};
    spec.rpa_draws = 10000;
    return spec;
}

SweepRun gen_sweep_n(double span)
{
    ScenarioConfig cfg = base_config();
    cfg.span = span;
    return run_sweep(cfg, full_spec(SweepSpec::Parameter::num_antennas, {4, 5, 6, 7, 8}),
                     OptimizerOptions{});
}

SweepRun gen_sweep_r()
{
    return run_sweep(base_config(),
                     full_spec(SweepSpec::Parameter::rate_target, {0.5, 1.0, 1.5, 2.0}),
                     OptimizerOptions{});
}

SweepRun gen_sweep_span()
{
    return run_sweep(base_config(),
                     full_spec(SweepSpec::Parameter::span, {2.5, 4.5, 6.5, 8.5, 10.5}),
                     OptimizerOptions{});
}

} // namespace

int main()
{
    Gate gate;

    // Criteria 1-4: one 100-point cloud, four judgments.
    auto t0 = std::chrono::steady_clock::now();
    GradcheckReport gc = gen_gradcheck();
    const double gc_secs = seconds_since(t0);
    gate.keep("gradcheck.csv", gc.csv);

    gate.report(1, "gradient-cross-check",
                gc.max_closed_vs_fd_rel <= 1e-5 && gc.max_closed_vs_trace_rel <= 1e-9 &&
                    gc_secs < 5.0,
                fmt("fd %.2e (<=1e-5), trace %.2e (<=1e-9), %.2f s (<5)",
                    gc.max_closed_vs_fd_rel, gc.max_closed_vs_trace_rel, gc_secs));
    gate.report(2, "objective-identity", gc.max_objective_identity_rel <= 1e-9,
                fmt("four-face spread %.2e (<=1e-9)", gc.max_objective_identity_rel));
    gate.report(3, "zero-forcing-identity",
                gc.max_zf_residual <= 1e-9 && gc.max_general_vs_zf_rel <= 1e-9,
                fmt("residual %.2e, formula split %.2e (<=1e-9)", gc.max_zf_residual,
                    gc.max_general_vs_zf_rel));
    gate.report(4, "rate-tightness", gc.max_tightness_rel <= 1e-9,
                fmt("worst target error %.2e (<=1e-9)", gc.max_tightness_rel));

    // Criterion 5: Monte-Carlo ratio agreement.
    t0 = std::chrono::steady_clock::now();
    SinrValidationReport mc = gen_sinr();
    const double mc_secs = seconds_since(t0);
    gate.keep("sinr_validation.csv", mc.csv);
    double mc_worst = 0.0;
    for (size_t i = 0; i < mc.empirical.size(); ++i)
        mc_worst = std::max(mc_worst,
                            std::abs(mc.empirical[i] - mc.targets[i]) / mc.targets[i]);
    gate.report(5, "monte-carlo-ratios", mc.pass && mc.band == 0.02 && mc_secs < 30.0,
                fmt("worst %.4f (<=0.02), %.2f s (<30)", mc_worst, mc_secs));

    // Criterion 6: descent and convergence from the pinned start.
    t0 = std::chrono::steady_clock::now();
    ConvergenceRun conv = gen_convergence();
    const double conv_secs = seconds_since(t0);
    {
        OptimizerOptions defaults;
        bool ok = conv_secs < 10.0;
        int worst_iters = 0;
        for (size_t s = 0; s < conv.traces.size(); ++s) {
            const auto &trace = conv.traces[s];
            const auto &rec = trace.records;
            gate.keep("convergence_span_" + format_g17(conv.spans[s]) + ".csv",
                      conv.trace_csvs[s]);
            ok = ok && trace.status == TerminationStatus::converged &&
                 !trace.line_search_exhausted;
            const int iters = static_cast<int>(rec.size()) - 1;
            worst_iters = std::max(worst_iters, iters);
            ok = ok && iters <= 100;
            for (size_t t = 0; t + 1 < rec.size(); ++t) {
                ok = ok && rec[t + 1].f <= rec[t].f + 1e-12;
                const double moved2 = (rec[t + 1].x - rec[t].x).squaredNorm();
                ok = ok && rec[t + 1].f <=
                               rec[t].f - defaults.armijo / rec[t + 1].step * moved2 + 1e-12;
            }
            ok = ok && std::abs(rec[rec.size() - 1].f - rec[rec.size() - 2].f) <= defaults.tau;
        }
        gate.report(6, "descent-and-convergence", ok,
                    fmt("worst iters %d (<=100), %.2f s (<10)", worst_iters, conv_secs));
    }

    // Criterion 7: baseline dominance and trend directions.
    t0 = std::chrono::steady_clock::now();
    SweepRun n45 = gen_sweep_n(4.5);
    SweepRun n55 = gen_sweep_n(5.5);
    SweepRun rsw = gen_sweep_r();
    const double sweep_secs = seconds_since(t0);
    gate.keep("sweep_num_antennas_L4.5.csv", n45.csv);
    gate.keep("sweep_num_antennas_L5.5.csv", n55.csv);
    gate.keep("sweep_rate_target.csv", rsw.csv);
    {
        bool dominance = true, n_trend = true, r_trend = true;
        for (const SweepRun *run : {&n45, &n55, &rsw})
            for (const auto &rec : run->records)
                dominance = dominance && rec.status.find("error") == std::string::npos &&
                            rec.proposed <= rec.fpa && rec.proposed <= rec.rpa_mean;
        for (const SweepRun *run : {&n45, &n55})
            for (size_t j = 0; j + 1 < run->records.size(); ++j)
                n_trend = n_trend && run->records[j + 1].proposed < run->records[j].proposed;
        for (size_t j = 0; j + 1 < rsw.records.size(); ++j)
            r_trend = r_trend && rsw.records[j + 1].proposed > rsw.records[j].proposed;
        gate.report(7, "benchmark-dominance",
                    dominance && n_trend && r_trend && sweep_secs < 300.0,
                    fmt("dominance %s, N-trend %s, r-trend %s, %.1f s (<300)",
                        dominance ? "ok" : "violated", n_trend ? "ok" : "violated",
                        r_trend ? "ok" : "violated", sweep_secs));
    }

    // Criterion 8: span plateau.
    SweepRun span_sweep = gen_sweep_span();
    gate.keep("sweep_span.csv", span_sweep.csv);
    {
        const auto &recs = span_sweep.records;
        const double a = recs[recs.size() - 2].proposed;
        const double b = recs[recs.size() - 1].proposed;
        const double tail = std::abs(b - a) / a;
        const bool grid_ok = recs[recs.size() - 2].value >= 8.0 && recs.back().value >= 8.0;
        gate.report(8, "span-plateau", grid_ok && tail < 0.01,
                    fmt("last two values %g, %g; tail %.3e (<0.01)",
                        recs[recs.size() - 2].value, recs.back().value, tail));
    }

    // Criterion 9: flop-model reference points and ratio growth.
    {
        ComplexityRun cx = run_complexity(1, 10, 30, 10, 10);
        const bool exact = cx.rows[2].closed_form == 5970.0 &&
                           cx.rows[2].definition_based == 11370.0;
        bool increasing = true;
        for (size_t j = 1; j + 1 < cx.rows.size(); ++j)  // pairs (2,3) .. (9,10)
            increasing = increasing && cx.rows[j + 1].ratio > cx.rows[j].ratio;
        gate.report(9, "complexity-model", exact && increasing,
                    fmt("M=3 row %g/%g (want 5970/11370), ratio growth %s",
                        cx.rows[2].closed_form, cx.rows[2].definition_based,
                        increasing ? "strict" : "violated"));
    }

    // Criterion 10: trivial cases.
    {
        ScenarioConfig one_cfg = base_config();
        one_cfg.num_users = 1;
        one_cfg.aoas = {pi / 10};
        one_cfg.rate_targets = {1.0};
        ValidatedScenario one = validate_scenario_or_throw(one_cfg);
        AntennaPositions x1 = initial_positions(one.regions, InitStrategy::endpoints_uniform);
        const double f1 = total_power_objective(x1, one);
        const double want = one.epsilons.eps(0) * one.cfg.noise_power / one.n();
        const bool single_ok = gradient_closed_form(x1, one).norm() == 0.0 &&
                               std::abs(f1 - want) <= 1e-12;

        ValidatedScenario scen = validate_scenario_or_throw(base_config());
        AntennaPositions y(4);
        y << -1.0, 1.5, 5.0, 4.0;
        AntennaPositions p1 = project(y, scen.regions);
        const bool idempotent = (project(p1, scen.regions) - p1).norm() == 0.0;

        AntennaPositions x0 = initial_positions(scen.regions, InitStrategy::endpoints_uniform);
        const double f0 = total_power_objective(x0, scen);
        bool translation_ok = true;
        for (double t : {0.3, -2.0}) {
            AntennaPositions shifted = x0.array() + t;
            translation_ok = translation_ok &&
                             std::abs(total_power_objective(shifted, scen) - f0) <=
                                 1e-10 * std::max(1.0, std::abs(f0)) &&
                             std::abs(gradient_closed_form(shifted, scen).sum()) <= 1e-8;
        }
        gate.report(10, "trivial-cases", single_ok && idempotent && translation_ok,
                    fmt("single-user %s, projection %s, translation %s",
                        single_ok ? "ok" : "bad", idempotent ? "ok" : "bad",
                        translation_ok ? "ok" : "bad"));
    }

    // Criterion 11: regenerate the criteria 1-8 artifacts, compare bytes.
    {
        std::vector<std::pair<std::string, std::string>> second;
        GradcheckReport gc2 = gen_gradcheck();
        second.emplace_back("gradcheck.csv", gc2.csv);
        SinrValidationReport mc2 = gen_sinr();
        second.emplace_back("sinr_validation.csv", mc2.csv);
        ConvergenceRun conv2 = gen_convergence();
        for (size_t s = 0; s < conv2.spans.size(); ++s)
            second.emplace_back("convergence_span_" + format_g17(conv2.spans[s]) + ".csv",
                                conv2.trace_csvs[s]);
        second.emplace_back("sweep_num_antennas_L4.5.csv", gen_sweep_n(4.5).csv);
        second.emplace_back("sweep_num_antennas_L5.5.csv", gen_sweep_n(5.5).csv);
        second.emplace_back("sweep_rate_target.csv", gen_sweep_r().csv);
        second.emplace_back("sweep_span.csv", gen_sweep_span().csv);

        bool identical = second.size() == gate.artifacts.size();
        std::string first_diff = "none";
        for (size_t i = 0; identical && i < second.size(); ++i) {
            identical = second[i].first == gate.artifacts[i].first &&
                        second[i].second == gate.artifacts[i].second;
            if (!identical)
                first_diff = second[i].first;
        }
        gate.report(11, "determinism", identical,
                    fmt("%zu artifacts regenerated, first difference: %s", second.size(),
                        first_diff.c_str()));
    }

    std::printf("acceptance: %d/11 passed\n", 11 - gate.failures);
    return gate.failures;
}
