// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 maopt contributors

#include "maopt/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace maopt {

namespace {

const char *kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Round the raw tick spacing to 1/2/5 x 10^k.
double nice_step(double range, int target_ticks)
{
    if (!(range > 0.0))
        return 1.0;
    const double raw = range / target_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    double step = 10.0;
    if (norm <= 1.0)
        step = 1.0;
    else if (norm <= 2.0)
        step = 2.0;
    else if (norm <= 5.0)
        step = 5.0;
    return step * mag;
}

} // namespace

std::string svg_line_chart(const std::string &title, const std::string &x_label,
                           const std::string &y_label, const std::vector<PlotSeries> &series,
                           bool log_y)
{
    const double w = 720, h = 480;
    const double ml = 78, mr = 24, mt = 44, mb = 56;
    const double pw = w - ml - mr, ph = h - mt - mb;

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto &s : series)
        for (auto [px, py] : s.points) {
            const double yv = log_y ? std::log10(std::max(py, 1e-300)) : py;
            xmin = std::min(xmin, px);
            xmax = std::max(xmax, px);
            ymin = std::min(ymin, yv);
            ymax = std::max(ymax, yv);
        }
    if (!(xmax > xmin)) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (!(ymax > ymin)) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    auto sx = [&](double v) { return ml + (v - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double v) {
        const double t = log_y ? std::log10(std::max(v, 1e-300)) : v;
        return mt + ph - (t - ymin) / (ymax - ymin) * ph;
    };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) + "\" height=\"" +
           fmt(h) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + fmt(w / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" +
           title + "</text>\n";

    // axes
    out += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(mt + ph) + "\" x2=\"" + fmt(ml + pw) +
           "\" y2=\"" + fmt(mt + ph) + "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(mt) + "\" x2=\"" + fmt(ml) + "\" y2=\"" +
           fmt(mt + ph) + "\" stroke=\"black\"/>\n";

    const double xstep = nice_step(xmax - xmin, 6);
    for (double t = std::ceil(xmin / xstep) * xstep; t <= xmax + 1e-12 * xstep; t += xstep) {
        out += "<line x1=\"" + fmt(sx(t)) + "\" y1=\"" + fmt(mt + ph) + "\" x2=\"" + fmt(sx(t)) +
               "\" y2=\"" + fmt(mt + ph + 5) + "\" stroke=\"black\"/>\n";
        out += "<text x=\"" + fmt(sx(t)) + "\" y=\"" + fmt(mt + ph + 20) +
               "\" text-anchor=\"middle\">" + fmt(t) + "</text>\n";
    }
    const double ystep = nice_step(ymax - ymin, 6);
    for (double t = std::ceil(ymin / ystep) * ystep; t <= ymax + 1e-12 * ystep; t += ystep) {
        const double yy = mt + ph - (t - ymin) / (ymax - ymin) * ph;
        out += "<line x1=\"" + fmt(ml - 5) + "\" y1=\"" + fmt(yy) + "\" x2=\"" + fmt(ml) +
               "\" y2=\"" + fmt(yy) + "\" stroke=\"black\"/>\n";
        out += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(yy) + "\" x2=\"" + fmt(ml + pw) +
               "\" y2=\"" + fmt(yy) + "\" stroke=\"#dddddd\"/>\n";
        const std::string lbl = log_y ? ("1e" + fmt(t)) : fmt(t);
        out += "<text x=\"" + fmt(ml - 9) + "\" y=\"" + fmt(yy + 4) +
               "\" text-anchor=\"end\">" + lbl + "</text>\n";
    }

    out += "<text x=\"" + fmt(ml + pw / 2) + "\" y=\"" + fmt(h - 12) +
           "\" text-anchor=\"middle\">" + x_label + "</text>\n";
    out += "<text x=\"18\" y=\"" + fmt(mt + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
           fmt(mt + ph / 2) + ")\">" + y_label + "</text>\n";

    for (size_t k = 0; k < series.size(); ++k) {
        const char *color = kPalette[k % (sizeof kPalette / sizeof *kPalette)];
        std::string pts;
        for (auto [px, py] : series[k].points)
            pts += fmt(sx(px)) + "," + fmt(sy(py)) + " ";
        out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"1.8\" points=\"" + pts + "\"/>\n";
        for (auto [px, py] : series[k].points)
            out += "<circle cx=\"" + fmt(sx(px)) + "\" cy=\"" + fmt(sy(py)) +
                   "\" r=\"2.5\" fill=\"" + color + "\"/>\n";
        const double ly = mt + 16 + 16 * static_cast<double>(k);
        out += "<line x1=\"" + fmt(ml + pw - 150) + "\" y1=\"" + fmt(ly - 4) + "\" x2=\"" +
               fmt(ml + pw - 126) + "\" y2=\"" + fmt(ly - 4) + "\" stroke=\"" + color +
               "\" stroke-width=\"2\"/>\n";
        out += "<text x=\"" + fmt(ml + pw - 120) + "\" y=\"" + fmt(ly) + "\">" +
               series[k].label + "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace maopt
