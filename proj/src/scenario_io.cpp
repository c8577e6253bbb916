// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 maopt contributors

#include "maopt/scenario_io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "maopt/errors.hpp"

namespace maopt {

using nlohmann::json;

double parse_angle(const std::string &text)
{
    // "<coef>pi[/<den>]" with optional sign and optional '*', or plain radians.
    static const std::regex pi_form(R"(^\s*([+-]?)\s*([0-9]*\.?[0-9]*)\s*\*?\s*pi\s*(?:/\s*([0-9]*\.?[0-9]+))?\s*$)",
                                    std::regex::icase);
    std::smatch m;
    if (std::regex_match(text, m, pi_form)) {
        const double sign = (m[1].str() == "-") ? -1.0 : 1.0;
        const double coef = m[2].str().empty() ? 1.0 : std::stod(m[2].str());
        const double den = m[3].str().empty() ? 1.0 : std::stod(m[3].str());
        if (den == 0.0)
            throw ParseError("zero denominator in angle: '" + text + "'");
        return sign * coef * std::numbers::pi / den;
    }
    try {
        size_t used = 0;
        const double v = std::stod(text, &used);
        while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used])))
            ++used;
        if (used != text.size())
            throw ParseError("trailing characters in angle: '" + text + "'");
        return v;
    } catch (const std::invalid_argument &) {
        throw ParseError("unparseable angle: '" + text + "' (expected radians or e.g. \"pi/16\")");
    } catch (const std::out_of_range &) {
        throw ParseError("angle out of range: '" + text + "'");
    }
}

namespace {

double angle_from_json(const json &v)
{
    if (v.is_number())
        return v.get<double>();
    if (v.is_string())
        return parse_angle(v.get<std::string>());
    throw ParseError("angle entries must be numbers or pi-strings");
}

json parse_json_or_throw(const std::string &text, const std::string &origin)
{
    try {
        return json::parse(text);
    } catch (const json::exception &e) {
        throw ParseError(origin + ": " + e.what());
    }
}

std::string read_file_or_throw(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

ScenarioConfig parse_scenario_json(const std::string &text, const std::string &origin)
{
    const json j = parse_json_or_throw(text, origin);
    if (!j.is_object())
        throw ParseError(origin + ": scenario file must hold a JSON object");

    ScenarioConfig cfg;
    try {
        cfg.num_users = j.at("num_users").get<int>();
        cfg.num_antennas = j.at("num_antennas").get<int>();
        cfg.wavelength = j.value("wavelength", 1.0);
        for (const auto &a : j.at("aoas"))
            cfg.aoas.push_back(angle_from_json(a));
        cfg.noise_power = j.at("noise_power").get<double>();
        if (j.at("rate_targets").is_number()) {
            cfg.rate_targets.assign(static_cast<size_t>(std::max(cfg.num_users, 0)),
                                    j.at("rate_targets").get<double>());
        } else {
            for (const auto &r : j.at("rate_targets"))
                cfg.rate_targets.push_back(r.get<double>());
        }
        cfg.span = j.at("span").get<double>();
        cfg.min_spacing = j.at("min_spacing").get<double>();
    } catch (const json::exception &e) {
        throw ParseError(origin + ": " + e.what());
    }
    return cfg;
}

ScenarioConfig load_scenario(const std::string &path)
{
    return parse_scenario_json(read_file_or_throw(path), path);
}

SweepSpec load_sweep_spec(const std::string &path)
{
    const json j = parse_json_or_throw(read_file_or_throw(path), path);
    if (!j.is_object())
        throw ParseError(path + ": sweep spec must hold a JSON object");

    SweepSpec spec;
    try {
        const std::string p = j.at("parameter").get<std::string>();
        if (p == "num_antennas")
            spec.parameter = SweepSpec::Parameter::num_antennas;
        else if (p == "rate_target")
            spec.parameter = SweepSpec::Parameter::rate_target;
        else if (p == "span")
            spec.parameter = SweepSpec::Parameter::span;
        else
            throw ParseError(path + ": unknown parameter '" + p +
                             "' (num_antennas, rate_target, span)");
        for (const auto &v : j.at("values"))
            spec.values.push_back(v.get<double>());
        spec.scenario_path = j.at("scenario").get<std::string>();
        if (j.contains("seeds"))
            for (const auto &s : j.at("seeds"))
                spec.seeds.push_back(s.get<std::uint64_t>());
        spec.rpa_draws = j.value("rpa_draws", 10000);
    } catch (const json::exception &e) {
        throw ParseError(path + ": " + e.what());
    }

    if (spec.values.empty())
        throw ParseError(path + ": values must be non-empty");
    for (size_t i = 0; i + 1 < spec.values.size(); ++i)
        if (!(spec.values[i] < spec.values[i + 1]))
            throw ParseError(path + ": values must be strictly increasing");
    if (spec.rpa_draws < 1)
        throw ParseError(path + ": rpa_draws must be >= 1");
    if (spec.seeds.empty())
        for (std::uint64_t s = 1; s <= 8; ++s)
            spec.seeds.push_back(s);

    // Resolve the scenario path relative to the spec file.
    std::filesystem::path sp(spec.scenario_path);
    if (sp.is_relative())
        spec.scenario_path = (std::filesystem::path(path).parent_path() / sp).string();
    return spec;
}

std::string to_string(SweepSpec::Parameter p)
{
    switch (p) {
    case SweepSpec::Parameter::num_antennas:
        return "num_antennas";
    case SweepSpec::Parameter::rate_target:
        return "rate_target";
    case SweepSpec::Parameter::span:
        return "span";
    }
    return "?";
}

} // namespace maopt
