// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 maopt contributors

#include "maopt/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "maopt/channel.hpp"
#include "maopt/errors.hpp"
#include "maopt/objective.hpp"
#include "maopt/rng.hpp"
#include "maopt/svg_plot.hpp"

namespace maopt {

using nlohmann::json;

std::string format_g17(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_text_file(const std::string &path, const std::string &content)
{
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty())
        std::filesystem::create_directories(parent);
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path);
    out << content;
}

void write_run_meta(const std::string &out_dir, const std::string &command_line)
{
    const std::time_t now = std::time(nullptr);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    json meta = {{"tool", "maopt"}, {"timestamp_utc", stamp}, {"command", command_line}};
    write_text_file((std::filesystem::path(out_dir) / "run_meta.json").string(),
                    meta.dump(2) + "\n");
}

namespace {

std::string trace_to_csv(const OptimizationTrace &trace)
{
    std::string csv = "iter,objective,step,grad_norm\n";
    for (const auto &r : trace.records)
        csv += std::to_string(r.iter) + "," + format_g17(r.f) + "," + format_g17(r.step) + "," +
               format_g17(r.grad_norm) + "\n";
    return csv;
}

const char *status_name(TerminationStatus s)
{
    switch (s) {
    case TerminationStatus::converged:
        return "converged";
    case TerminationStatus::outer_cap:
        return "outer_cap";
    case TerminationStatus::error:
        return "error";
    }
    return "?";
}

// Uniform in-box sample for the gradcheck point cloud.
AntennaPositions random_feasible(const FeasibleRegions &regions, SplitMix64 &stream)
{
    AntennaPositions x(regions.size());
    for (int i = 0; i < regions.size(); ++i)
        x(i) = regions.lower(i) + stream.uniform() * (regions.upper(i) - regions.lower(i));
    return x;
}

double rel_diff(double a, double b)
{
    const double denom = std::max(std::abs(a), std::abs(b));
    if (denom < 1e-8)
        return 0.0;  // both negligible
    return std::abs(a - b) / denom;
}

double max_entry_rel(const Eigen::VectorXd &a, const Eigen::VectorXd &b)
{
    double worst = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        worst = std::max(worst, rel_diff(a(i), b(i)));
    return worst;
}

} // namespace

OptimizeRun run_optimize(const ValidatedScenario &scen, const OptimizerOptions &opts)
{
    OptimizeRun out;
    out.result = optimize(scen, opts);
    out.trace_csv = trace_to_csv(out.result.trace);

    std::ostringstream ss;
    const auto &r = out.result;
    ss << "status: " << status_name(r.trace.status)
       << (r.trace.line_search_exhausted ? " (line search exhausted)" : "") << "\n";
    ss << "iterations: " << r.trace.records.size() - 1 << "\n";
    ss << "objective: " << format_g17(r.f) << "\n";
    ss << "positions:";
    for (Eigen::Index i = 0; i < r.x.size(); ++i)
        ss << " " << format_g17(r.x(i));
    ss << "\n";
    ss << "per-user powers:";
    for (Eigen::Index i = 0; i < r.powers.size(); ++i)
        ss << " " << format_g17(r.powers(i));
    ss << "\n";
    double flops = 0.0;
    for (const auto &rec : r.trace.records)
        flops += rec.flops;
    ss << "flop estimate: " << format_g17(flops) << "\n";
    out.summary_text = ss.str();
    return out;
}

ConvergenceRun run_convergence(const ScenarioConfig &base, const std::vector<double> &spans,
                               const OptimizerOptions &opts)
{
    ConvergenceRun out;
    out.spans = spans;
    std::vector<PlotSeries> series;
    double prev_final = std::numeric_limits<double>::infinity();
    for (double span : spans) {
        ScenarioConfig cfg = base;
        cfg.span = span;
        ValidatedScenario scen = validate_scenario_or_throw(cfg);
        OptimizerOptions o = opts;
        o.init_strategy = InitStrategy::endpoints_uniform;
        OptimizationResult res = optimize(scen, o);

        PlotSeries s;
        s.label = "span " + format_g17(span).substr(0, 4);
        for (const auto &rec : res.trace.records)
            s.points.emplace_back(rec.iter, rec.f);
        series.push_back(std::move(s));

        if (res.f > prev_final + 1e-12)
            out.ordering_ok = false;  // larger span should not do worse
        prev_final = res.f;

        out.trace_csvs.push_back(trace_to_csv(res.trace));
        out.traces.push_back(std::move(res.trace));
    }
    out.overlay_svg =
        svg_line_chart("total power per iteration", "iteration", "total power", series);
    return out;
}

OptimizationResult optimize_multistart(const ValidatedScenario &scen, const OptimizerOptions &opts,
                                       const std::vector<std::uint64_t> &seeds,
                                       std::uint64_t point_index)
{
    OptimizationResult best;
    bool have_best = false;
    std::string first_error;

    auto consider = [&](const OptimizerOptions &o) {
        try {
            OptimizationResult r = optimize(scen, o);
            if (!have_best || r.f < best.f) {
                best = std::move(r);
                have_best = true;
            }
        } catch (const Error &e) {
            if (first_error.empty())
                first_error = e.what();
        }
    };

    OptimizerOptions o = opts;
    o.init_strategy = InitStrategy::endpoints_uniform;
    consider(o);
    for (std::uint64_t s : seeds) {
        o.init_strategy = InitStrategy::seeded_random;
        o.init_seed = derive_seed(s, point_index, 0x4d53u);
        consider(o);
    }
    if (!have_best)
        throw Error("every start failed: " + first_error);
    return best;
}

SweepRun run_sweep(const ScenarioConfig &base, const SweepSpec &spec,
                   const OptimizerOptions &opts)
{
    SweepRun out;
    out.parameter = spec.parameter;

    bool dominance_ok = true;
    for (size_t j = 0; j < spec.values.size(); ++j) {
        const double v = spec.values[j];
        RunRecord rec;
        rec.value = v;

        ScenarioConfig cfg = base;
        switch (spec.parameter) {
        case SweepSpec::Parameter::num_antennas:
            cfg.num_antennas = static_cast<int>(std::llround(v));
            break;
        case SweepSpec::Parameter::rate_target:
            cfg.rate_targets.assign(cfg.rate_targets.size(), v);
            break;
        case SweepSpec::Parameter::span:
            cfg.span = v;
            break;
        }

        ValidationResult vr = validate_scenario(cfg);
        if (!vr.ok()) {
            rec.status = "error: validation failed";
            out.records.push_back(std::move(rec));
            out.checks_ok = false;
            continue;
        }
        const ValidatedScenario &scen = *vr.scenario;

        try {
            rec.fpa = total_power_objective(fpa_positions(scen), scen);
            RpaEstimate rpa =
                rpa_average_power(scen, spec.rpa_draws, derive_seed(spec.seeds.front(), j, 0x5250u));
            rec.rpa_mean = rpa.mean_power;
            rec.rpa_se = rpa.std_error;

            OptimizationResult best = optimize_multistart(scen, opts, spec.seeds, j);
            rec.proposed = best.f;
            rec.iters = static_cast<int>(best.trace.records.size()) - 1;
            rec.status = status_name(best.trace.status);
            if (best.trace.line_search_exhausted)
                rec.status += ",line_search_exhausted";
            if (rec.proposed > rec.fpa || rec.proposed > rec.rpa_mean) {
                rec.status += ",dominance_violation";
                dominance_ok = false;
            }
        } catch (const Error &e) {
            rec.status = std::string("error: ") + e.what();
            out.checks_ok = false;
        }
        out.records.push_back(std::move(rec));
    }

    // Trend verdicts for the summary.
    bool monotone_ok = true;
    std::string expected = "none";
    auto strictly = [&](auto get, bool decreasing) {
        for (size_t j = 0; j + 1 < out.records.size(); ++j) {
            const double a = get(out.records[j]), b = get(out.records[j + 1]);
            if (decreasing ? !(b < a) : !(b > a))
                return false;
        }
        return true;
    };
    if (spec.parameter == SweepSpec::Parameter::num_antennas) {
        expected = "proposed strictly decreasing";
        monotone_ok = strictly([](const RunRecord &r) { return r.proposed; }, true);
    } else if (spec.parameter == SweepSpec::Parameter::rate_target) {
        expected = "all schemes strictly increasing";
        monotone_ok = strictly([](const RunRecord &r) { return r.proposed; }, false) &&
                      strictly([](const RunRecord &r) { return r.fpa; }, false) &&
                      strictly([](const RunRecord &r) { return r.rpa_mean; }, false);
    }

    double plateau_tail = std::numeric_limits<double>::quiet_NaN();
    bool plateau_ok = true;
    if (spec.parameter == SweepSpec::Parameter::span && out.records.size() >= 2) {
        const double a = out.records[out.records.size() - 2].proposed;
        const double b = out.records.back().proposed;
        plateau_tail = std::abs(b - a) / a;
        plateau_ok = plateau_tail < 0.01;
    }

    out.checks_ok = out.checks_ok && dominance_ok && monotone_ok && plateau_ok;

    json summary = {{"parameter", to_string(spec.parameter)},
                    {"records", out.records.size()},
                    {"dominance_ok", dominance_ok},
                    {"monotonicity", {{"expected", expected}, {"ok", monotone_ok}}}};
    if (spec.parameter == SweepSpec::Parameter::span) {
        summary["plateau"] = {{"tail_rel", plateau_tail}, {"ok", plateau_ok}};
    }
    out.summary_json = summary.dump(2) + "\n";

    out.csv = "value,proposed,fpa,rpa_mean,rpa_se,iters,status\n";
    for (const auto &r : out.records)
        out.csv += format_g17(r.value) + "," + format_g17(r.proposed) + "," + format_g17(r.fpa) +
                   "," + format_g17(r.rpa_mean) + "," + format_g17(r.rpa_se) + "," +
                   std::to_string(r.iters) + "," + r.status + "\n";

    PlotSeries prop{"optimized", {}}, fpa{"fixed grid", {}}, rpa{"random mean", {}};
    for (const auto &r : out.records) {
        prop.points.emplace_back(r.value, r.proposed);
        fpa.points.emplace_back(r.value, r.fpa);
        rpa.points.emplace_back(r.value, r.rpa_mean);
    }
    out.svg = svg_line_chart("total power vs " + to_string(spec.parameter),
                             to_string(spec.parameter), "total power", {prop, fpa, rpa});
    return out;
}

ComplexityRun run_complexity(int m_min, int m_max, int n, int t_outer, int t_inner)
{
    ComplexityRun out;
    out.csv = "m,closed_form,definition_based,ratio\n";
    PlotSeries closed{"closed form", {}}, definition{"definition based", {}};
    double prev_ratio = 0.0;
    for (int m = m_min; m <= m_max; ++m) {
        ComplexityRow row;
        row.m = m;
        row.closed_form = flop_count_estimate(m, n, t_outer, t_inner, GradientMethod::closed_form);
        row.definition_based =
            flop_count_estimate(m, n, t_outer, t_inner, GradientMethod::definition_based);
        row.ratio = row.definition_based / row.closed_form;
        if (m > m_min && m >= 3 && !(row.ratio > prev_ratio))
            out.ratio_increasing = false;
        prev_ratio = row.ratio;
        out.csv += std::to_string(m) + "," + format_g17(row.closed_form) + "," +
                   format_g17(row.definition_based) + "," + format_g17(row.ratio) + "\n";
        closed.points.emplace_back(m, row.closed_form);
        definition.points.emplace_back(m, row.definition_based);
        out.rows.push_back(row);
    }
    out.svg = svg_line_chart("flop estimate vs users", "users", "flops", {closed, definition},
                             /*log_y=*/true);
    return out;
}

GradcheckReport run_gradcheck(const ValidatedScenario &scen, int num_points, std::uint64_t seed,
                              bool corrupt_partial_sign)
{
    GradcheckReport rep;
    rep.num_points = num_points;
    rep.csv = "point,closed_vs_fd,closed_vs_trace,objective_identity,zf_residual,"
              "tightness,general_vs_zf\n";

    const Eigen::VectorXd omega = scen.omega_diag();
    for (int k = 0; k < num_points; ++k) {
        SplitMix64 stream(derive_seed(seed, static_cast<std::uint64_t>(k), 0x4743u));
        AntennaPositions x = random_feasible(scen.regions, stream);

        // Gradient cross-checks.
        Gradient g_closed = gradient_closed_form(x, scen);
        if (corrupt_partial_sign)
            g_closed = -g_closed;
        Gradient g_trace = gradient_trace_form(x, scen);
        Gradient g_fd = gradient_finite_difference(x, scen, 1e-6, FdMode::central);
        const double d_fd = max_entry_rel(g_closed, g_fd);
        const double d_trace = max_entry_rel(g_closed, g_trace);

        // Four-way objective identity.
        ChannelMatrix h = channel_matrix(x, scen);
        Eigen::MatrixXcd w0 = zf_combiner(h);
        const double f_cols = min_powers(x, scen).sum();
        const Eigen::VectorXcd omega_sqrt = omega.cwiseSqrt().cast<std::complex<double>>();
        const double f_frob = (w0 * omega_sqrt.asDiagonal()).squaredNorm();
        Eigen::MatrixXcd z = gain_matrix(x, scen);
        const double f_trace =
            z.partialPivLu().solve(Eigen::MatrixXcd::Identity(z.rows(), z.cols())).trace().real();
        const double f_eigs = total_power_objective(x, scen);
        double d_ident = 0.0;
        const double faces[4] = {f_cols, f_frob, f_trace, f_eigs};
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                d_ident = std::max(d_ident, rel_diff(faces[a], faces[b]));

        // Combiner identities.
        const double d_zf =
            (w0.adjoint() * h - Eigen::MatrixXcd::Identity(scen.m(), scen.m())).norm();
        PowerAllocation pmin = min_powers(x, scen);
        const double d_tight =
            max_entry_rel(sinr_zf(x, scen, pmin), scen.epsilons.eps);
        PowerAllocation p_rand(scen.m());
        for (int i = 0; i < scen.m(); ++i)
            p_rand(i) = 0.1 + 10.0 * stream.uniform();
        const double d_gen = max_entry_rel(sinr_general(w0, h, p_rand, scen.cfg.noise_power),
                                           sinr_zf(x, scen, p_rand));

        rep.max_closed_vs_fd_rel = std::max(rep.max_closed_vs_fd_rel, d_fd);
        rep.max_closed_vs_trace_rel = std::max(rep.max_closed_vs_trace_rel, d_trace);
        rep.max_objective_identity_rel = std::max(rep.max_objective_identity_rel, d_ident);
        rep.max_zf_residual = std::max(rep.max_zf_residual, d_zf);
        rep.max_tightness_rel = std::max(rep.max_tightness_rel, d_tight);
        rep.max_general_vs_zf_rel = std::max(rep.max_general_vs_zf_rel, d_gen);

        rep.csv += std::to_string(k) + "," + format_g17(d_fd) + "," + format_g17(d_trace) + "," +
                   format_g17(d_ident) + "," + format_g17(d_zf) + "," + format_g17(d_tight) +
                   "," + format_g17(d_gen) + "\n";

        const bool point_ok = d_fd <= kFdRelTol && d_trace <= kTraceRelTol &&
                              d_ident <= kIdentityRelTol && d_zf <= 1e-9 && d_tight <= 1e-9 &&
                              d_gen <= 1e-9;
        if (!point_ok && rep.offending_point_json.empty()) {
            json bad = {{"point", k}, {"x", std::vector<double>(x.data(), x.data() + x.size())}};
            rep.offending_point_json = bad.dump();
        }
    }

    rep.pass = rep.offending_point_json.empty();
    return rep;
}

SinrValidationReport run_validate_sinr(const ValidatedScenario &scen, std::int64_t num_symbols,
                                       std::uint64_t seed)
{
    SinrValidationReport rep;
    AntennaPositions x = initial_positions(scen.regions, InitStrategy::endpoints_uniform);
    PowerAllocation p = min_powers(x, scen);
    Eigen::VectorXd emp = simulate_uplink_sinr(x, scen, p, num_symbols, seed);

    rep.band = (num_symbols >= 100000) ? 0.02 : 0.05;
    rep.pass = true;
    rep.csv = "user,empirical,target,rel_err\n";
    for (int i = 0; i < scen.m(); ++i) {
        const double target = scen.epsilons.eps(i);
        const double rel = std::abs(emp(i) - target) / target;
        rep.empirical.push_back(emp(i));
        rep.targets.push_back(target);
        rep.pass = rep.pass && rel <= rep.band;
        rep.csv += std::to_string(i + 1) + "," + format_g17(emp(i)) + "," + format_g17(target) +
                   "," + format_g17(rel) + "\n";
    }
    return rep;
}

} // namespace maopt
