// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 maopt contributors

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace maopt {

// Minimal line-chart rendering. Plots are a convenience layer over the CSV
// outputs; nothing downstream parses them.
struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

std::string svg_line_chart(const std::string &title, const std::string &x_label,
                           const std::string &y_label, const std::vector<PlotSeries> &series,
                           bool log_y = false);

} // namespace maopt
