// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 maopt contributors
//
// Command line front end for the movable-antenna position optimizer.
// Exit codes: 0 success, 1 numeric check failure, 2 malformed input.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maopt/errors.hpp"
#include "maopt/harness.hpp"
#include "maopt/scenario_io.hpp"

namespace {

struct CommonOpts {
    std::string out_dir = ".";
    std::string format = "csv";
    maopt::OptimizerOptions opt;
};

void add_optimizer_flags(CLI::App *cmd, CommonOpts &c)
{
    cmd->add_option("--out", c.out_dir, "output directory for artifacts");
    cmd->add_option("--format", c.format, "artifact format (csv)")
        ->check(CLI::IsMember({"csv"}));
    cmd->add_option("--delta0", c.opt.delta0, "initial line search step");
    cmd->add_option("--rho", c.opt.rho, "line search shrink factor in (0,1)");
    cmd->add_option("--tau", c.opt.tau, "convergence threshold on objective decrease");
    cmd->add_option("--max-outer", c.opt.max_outer, "outer iteration cap");
    cmd->add_option("--max-inner", c.opt.max_inner, "line search trial cap");
    cmd->add_option("--armijo", c.opt.armijo, "sufficient decrease coefficient");
}

std::string join_args(int argc, char **argv)
{
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i)
            s += ' ';
        s += argv[i];
    }
    return s;
}

std::string out_path(const CommonOpts &c, const std::string &name)
{
    return (std::filesystem::path(c.out_dir) / name).string();
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"movable-antenna array position optimization"};
    app.require_subcommand(1);

    const std::map<std::string, maopt::InitStrategy> init_names{
        {"midpoint", maopt::InitStrategy::midpoint},
        {"endpoints-uniform", maopt::InitStrategy::endpoints_uniform},
        {"seeded-random", maopt::InitStrategy::seeded_random}};

    // optimize
    CommonOpts opt_c;
    std::string opt_scenario;
    std::string opt_init = "endpoints-uniform";
    std::uint64_t opt_init_seed = 0;
    bool opt_trace = false;
    auto *cmd_opt = app.add_subcommand("optimize", "minimize total power for one scenario");
    cmd_opt->add_option("--scenario", opt_scenario, "scenario JSON path")->required();
    cmd_opt->add_option("--init", opt_init, "initial layout strategy")
        ->check(CLI::IsMember({"midpoint", "endpoints-uniform", "seeded-random"}));
    cmd_opt->add_option("--init-seed", opt_init_seed, "seed for the random initial layout");
    cmd_opt->add_flag("--trace", opt_trace, "write the per-iteration trace CSV");
    add_optimizer_flags(cmd_opt, opt_c);

    // convergence
    CommonOpts conv_c;
    std::string conv_scenario;
    std::vector<double> conv_spans{2.5, 3.5, 4.5};
    auto *cmd_conv = app.add_subcommand("convergence", "trace the objective across array spans");
    cmd_conv->add_option("--scenario", conv_scenario, "scenario JSON path")->required();
    cmd_conv->add_option("--spans", conv_spans, "array spans to trace")->expected(-1);
    add_optimizer_flags(cmd_conv, conv_c);

    // sweep
    CommonOpts sweep_c;
    std::string sweep_spec_path;
    auto *cmd_sweep = app.add_subcommand("sweep", "compare schemes across a parameter grid");
    cmd_sweep->add_option("--spec", sweep_spec_path, "sweep spec JSON path")->required();
    add_optimizer_flags(cmd_sweep, sweep_c);

    // complexity
    CommonOpts cx_c;
    int cx_m_min = 1, cx_m_max = 10, cx_n = 30, cx_to = 10, cx_ti = 10;
    auto *cmd_cx = app.add_subcommand("complexity", "tabulate gradient flop estimates");
    cmd_cx->add_option("--m-min", cx_m_min, "smallest user count");
    cmd_cx->add_option("--m-max", cx_m_max, "largest user count");
    cmd_cx->add_option("--n", cx_n, "antenna count");
    cmd_cx->add_option("--t-outer", cx_to, "outer iteration count");
    cmd_cx->add_option("--t-inner", cx_ti, "line search trial count");
    cmd_cx->add_option("--out", cx_c.out_dir, "output directory for artifacts");

    // gradcheck
    CommonOpts gc_c;
    std::string gc_scenario;
    int gc_points = 100;
    std::uint64_t gc_seed = 42;
    auto *cmd_gc = app.add_subcommand("gradcheck", "cross-validate gradients and identities");
    cmd_gc->add_option("--scenario", gc_scenario, "scenario JSON path")->required();
    cmd_gc->add_option("--points", gc_points, "number of random feasible points");
    cmd_gc->add_option("--seed", gc_seed, "point cloud seed");
    cmd_gc->add_option("--out", gc_c.out_dir, "output directory for artifacts");

    // validate-sinr
    CommonOpts vs_c;
    std::string vs_scenario;
    std::int64_t vs_symbols = 1000000;
    std::uint64_t vs_seed = 42;
    auto *cmd_vs = app.add_subcommand("validate-sinr", "Monte Carlo check of target ratios");
    cmd_vs->add_option("--scenario", vs_scenario, "scenario JSON path")->required();
    cmd_vs->add_option("--symbols", vs_symbols, "number of simulated symbols");
    cmd_vs->add_option("--seed", vs_seed, "simulation seed");
    cmd_vs->add_option("--out", vs_c.out_dir, "output directory for artifacts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    const std::string cmdline = join_args(argc, argv);
    try {
        if (cmd_opt->parsed()) {
            maopt::ValidatedScenario scen =
                maopt::validate_scenario_or_throw(maopt::load_scenario(opt_scenario));
            opt_c.opt.init_strategy = init_names.at(opt_init);
            opt_c.opt.init_seed = opt_init_seed;
            maopt::OptimizeRun run = maopt::run_optimize(scen, opt_c.opt);
            std::cout << run.summary_text;
            if (opt_trace)
                maopt::write_text_file(out_path(opt_c, "trace.csv"), run.trace_csv);
            maopt::write_run_meta(opt_c.out_dir, cmdline);
            return run.result.trace.status == maopt::TerminationStatus::error ? 1 : 0;
        }
        if (cmd_conv->parsed()) {
            maopt::ScenarioConfig base = maopt::load_scenario(conv_scenario);
            maopt::ConvergenceRun run = maopt::run_convergence(base, conv_spans, conv_c.opt);
            for (size_t j = 0; j < run.spans.size(); ++j) {
                const std::string name =
                    "convergence_span_" + maopt::format_g17(run.spans[j]) + ".csv";
                maopt::write_text_file(out_path(conv_c, name), run.trace_csvs[j]);
                std::cout << "span " << run.spans[j] << ": final "
                          << maopt::format_g17(run.traces[j].records.back().f) << " after "
                          << run.traces[j].records.size() - 1 << " iterations\n";
            }
            maopt::write_text_file(out_path(conv_c, "convergence.svg"), run.overlay_svg);
            std::cout << "span ordering: " << (run.ordering_ok ? "ok" : "violated") << "\n";
            maopt::write_run_meta(conv_c.out_dir, cmdline);
            return 0;
        }
        if (cmd_sweep->parsed()) {
            maopt::SweepSpec spec = maopt::load_sweep_spec(sweep_spec_path);
            maopt::ScenarioConfig base = maopt::load_scenario(spec.scenario_path);
            maopt::SweepRun run = maopt::run_sweep(base, spec, sweep_c.opt);
            const std::string stem = "sweep_" + maopt::to_string(run.parameter);
            maopt::write_text_file(out_path(sweep_c, stem + ".csv"), run.csv);
            maopt::write_text_file(out_path(sweep_c, stem + ".svg"), run.svg);
            maopt::write_text_file(out_path(sweep_c, stem + "_summary.json"), run.summary_json);
            std::cout << run.csv;
            std::cout << "checks: " << (run.checks_ok ? "ok" : "failed") << "\n";
            maopt::write_run_meta(sweep_c.out_dir, cmdline);
            return run.checks_ok ? 0 : 1;
        }
        if (cmd_cx->parsed()) {
            maopt::ComplexityRun run =
                maopt::run_complexity(cx_m_min, cx_m_max, cx_n, cx_to, cx_ti);
            maopt::write_text_file(out_path(cx_c, "complexity.csv"), run.csv);
            maopt::write_text_file(out_path(cx_c, "complexity.svg"), run.svg);
            std::cout << run.csv;
            std::cout << "ratio increasing: " << (run.ratio_increasing ? "yes" : "no") << "\n";
            maopt::write_run_meta(cx_c.out_dir, cmdline);
            return run.ratio_increasing ? 0 : 1;
        }
        if (cmd_gc->parsed()) {
            maopt::ValidatedScenario scen =
                maopt::validate_scenario_or_throw(maopt::load_scenario(gc_scenario));
            maopt::GradcheckReport rep = maopt::run_gradcheck(scen, gc_points, gc_seed);
            maopt::write_text_file(out_path(gc_c, "gradcheck.csv"), rep.csv);
            std::cout << "points: " << rep.num_points << "\n"
                      << "max closed vs finite difference: "
                      << maopt::format_g17(rep.max_closed_vs_fd_rel) << "\n"
                      << "max closed vs trace: " << maopt::format_g17(rep.max_closed_vs_trace_rel)
                      << "\n"
                      << "max objective identity spread: "
                      << maopt::format_g17(rep.max_objective_identity_rel) << "\n"
                      << "max combiner residual: " << maopt::format_g17(rep.max_zf_residual)
                      << "\n"
                      << "max tightness error: " << maopt::format_g17(rep.max_tightness_rel)
                      << "\n"
                      << "max general vs zero-forcing: "
                      << maopt::format_g17(rep.max_general_vs_zf_rel) << "\n"
                      << "result: " << (rep.pass ? "pass" : "fail") << "\n";
            if (!rep.pass) {
                maopt::write_text_file(out_path(gc_c, "gradcheck_offending.json"),
                                       rep.offending_point_json + "\n");
                std::cerr << rep.offending_point_json << "\n";
            }
            maopt::write_run_meta(gc_c.out_dir, cmdline);
            return rep.pass ? 0 : 1;
        }
        if (cmd_vs->parsed()) {
            maopt::ValidatedScenario scen =
                maopt::validate_scenario_or_throw(maopt::load_scenario(vs_scenario));
            maopt::SinrValidationReport rep = maopt::run_validate_sinr(scen, vs_symbols, vs_seed);
            std::cout << rep.csv;
            std::cout << "band: " << rep.band << "\n"
                      << "result: " << (rep.pass ? "pass" : "fail") << "\n";
            maopt::write_text_file(out_path(vs_c, "sinr_validation.csv"), rep.csv);
            maopt::write_run_meta(vs_c.out_dir, cmdline);
            return rep.pass ? 0 : 1;
        }
    } catch (const maopt::ParseError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const maopt::ValidationError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const maopt::GeometryError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const maopt::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
