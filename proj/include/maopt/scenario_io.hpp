// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 maopt contributors

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maopt/scenario.hpp"

namespace maopt {

// Sweep description: vary one scenario parameter over an increasing grid.
struct SweepSpec {
    enum class Parameter { num_antennas, rate_target, span };
    Parameter parameter = Parameter::num_antennas;
    std::vector<double> values;          // non-empty, strictly increasing
    std::string scenario_path;           // base scenario file
    std::vector<std::uint64_t> seeds;    // multi-start seeds (default 1..8)
    int rpa_draws = 10000;
};

// Parse an angle: plain number (radians) or a rational multiple of pi given
// as a string, e.g. "pi/16", "-pi/10", "3pi/4", "0.5pi". Throws ParseError.
double parse_angle(const std::string &text);

// Load a scenario from its JSON file. Field names match ScenarioConfig;
// aoas entries may be numbers or pi-strings. Throws ParseError with
// diagnostics on malformed input. Validation is the caller's step.
ScenarioConfig load_scenario(const std::string &path);
ScenarioConfig parse_scenario_json(const std::string &text, const std::string &origin = "<string>");

// Load a sweep spec from its JSON file; `scenario` may be relative to the
// spec file's directory.
SweepSpec load_sweep_spec(const std::string &path);

std::string to_string(SweepSpec::Parameter p);

} // namespace maopt
