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
//
// Library layer behind the CLI: every subcommand is a pure function from a
// validated scenario to result structs plus deterministic CSV text. The CLI
// only adds argument parsing and file writing, so tests drive these directly.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maopt/baselines.hpp"
#include "maopt/optimizer.hpp"
#include "maopt/scenario_io.hpp"

namespace maopt {

// One sweep grid point. status is "converged"/"outer_cap" from the winning
// start, with ",dominance_violation" appended when the optimized power fails
// to dominate a baseline, or "error: ..." when the point failed outright.
struct RunRecord {
    double value = 0.0;
    double proposed = 0.0;
    double fpa = 0.0;
    double rpa_mean = 0.0;
    double rpa_se = 0.0;
    int iters = 0;
    std::string status;
};

struct OptimizeRun {
    OptimizationResult result;
    std::string summary_text;  // human-readable, >= 9 significant digits
    std::string trace_csv;     // header: iter,objective,step,grad_norm
};

struct ConvergenceRun {
    std::vector<double> spans;
    std::vector<OptimizationTrace> traces;
    std::vector<std::string> trace_csvs;
    std::string overlay_svg;
    bool ordering_ok = true;  // final f non-increasing as the span grows
};

struct SweepRun {
    SweepSpec::Parameter parameter = SweepSpec::Parameter::num_antennas;
    std::vector<RunRecord> records;
    std::string csv;  // header: value,proposed,fpa,rpa_mean,rpa_se,iters,status
    std::string svg;
    std::string summary_json;  // machine-readable monotonicity/dominance verdicts
    bool checks_ok = true;
};

struct ComplexityRow {
    int m;
    double closed_form;
    double definition_based;
    double ratio;
};

struct ComplexityRun {
    std::vector<ComplexityRow> rows;
    std::string csv;  // header: m,closed_form,definition_based,ratio
    std::string svg;
    bool ratio_increasing = true;  // strict, from the second row on
};

struct GradcheckReport {
    int num_points = 0;
    double max_closed_vs_fd_rel = 0.0;     // vs central differences, eps 1e-6
    double max_closed_vs_trace_rel = 0.0;  // vs the trace-identity oracle
    double max_objective_identity_rel = 0.0;  // four-way objective agreement
    double max_zf_residual = 0.0;          // ||W^H H - I||_F
    double max_tightness_rel = 0.0;        // sinr at min powers vs eps
    double max_general_vs_zf_rel = 0.0;    // combiner-formula cross-check
    std::string csv;
    std::string offending_point_json;  // first violating x, for replay
    bool pass = false;
};

struct SinrValidationReport {
    std::vector<double> empirical;
    std::vector<double> targets;
    double band = 0.0;  // relative: 0.02 at >= 1e5 symbols, else 0.05
    bool pass = false;
    std::string csv;
};

// Tolerances the gradcheck report is judged against.
inline constexpr double kFdRelTol = 1e-5;
inline constexpr double kTraceRelTol = 1e-9;
inline constexpr double kIdentityRelTol = 1e-9;

OptimizeRun run_optimize(const ValidatedScenario &scen, const OptimizerOptions &opts);

ConvergenceRun run_convergence(const ScenarioConfig &base, const std::vector<double> &spans,
                               const OptimizerOptions &opts);

// Per grid point: FPA evaluation, RPA estimate (spec.rpa_draws draws), and a
// multi-start optimizer run (endpoints_uniform plus one seeded start per
// entry of spec.seeds, best final f wins).
SweepRun run_sweep(const ScenarioConfig &base, const SweepSpec &spec,
                   const OptimizerOptions &opts);

ComplexityRun run_complexity(int m_min, int m_max, int n, int t_outer, int t_inner);

// corrupt_partial_sign is a fault-injection hook: it flips the sign of the
// closed-form gradient before comparison, so a passing report proves the
// cross-checks can actually fail.
GradcheckReport run_gradcheck(const ValidatedScenario &scen, int num_points, std::uint64_t seed,
                              bool corrupt_partial_sign = false);

SinrValidationReport run_validate_sinr(const ValidatedScenario &scen, std::int64_t num_symbols,
                                       std::uint64_t seed);

// Best-of multi-start wrapper used by run_sweep; point_index decorrelates the
// seeded starts across grid points.
OptimizationResult optimize_multistart(const ValidatedScenario &scen, const OptimizerOptions &opts,
                                       const std::vector<std::uint64_t> &seeds,
                                       std::uint64_t point_index);

// Shortest round-trippable decimal form ("%.17g").
std::string format_g17(double v);

void write_text_file(const std::string &path, const std::string &content);

// Timestamped sidecar (run_meta.json) next to the CSV outputs; CSVs stay
// timestamp-free so repeated runs are byte-identical.
void write_run_meta(const std::string &out_dir, const std::string &command_line);

} // namespace maopt
