// Copyright 2026 The weylgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "weylgate/plot.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <ostream>

namespace weylgate {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 420;
constexpr double kLeft = 70;
constexpr double kRight = 150;
constexpr double kTop = 40;
constexpr double kBottom = 60;

constexpr std::array<const char *, 6> kColors = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};
constexpr std::array<const char *, 3> kDashes = {"", "6,4", "2,3"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void write_svg_plot(std::ostream &out, const std::string &title, const std::string &x_label,
                    const std::string &y_label, const std::vector<double> &x, const std::vector<Series> &series) {
    double xmin = x.empty() ? 0.0 : *std::min_element(x.begin(), x.end());
    double xmax = x.empty() ? 1.0 : *std::max_element(x.begin(), x.end());
    double ymin = 0.0;
    double ymax = 0.0;
    bool first = true;
    for (const auto &s : series) {
        for (double v : s.y) {
            ymin = first ? v : std::min(ymin, v);
            ymax = first ? v : std::max(ymax, v);
            first = false;
        }
    }
    if (xmax <= xmin) {
        xmax = xmin + 1.0;
    }
    if (ymax - ymin < 1e-9) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto sx = [&](double v) { return kLeft + (v - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double v) { return kTop + (ymax - v) / (ymax - ymin) * ph; };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << kLeft + pw / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"15\">" << escape(title) << "</text>\n"
        << "<g stroke=\"black\" stroke-width=\"1\">\n"
        << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + ph << "\" x2=\"" << kLeft + pw << "\" y2=\"" << kTop + ph
        << "\"/>\n"
        << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + ph << "\"/>\n"
        << "</g>\n"
        << "<g font-family=\"sans-serif\" font-size=\"12\">\n"
        << "<text x=\"" << kLeft << "\" y=\"" << kTop + ph + 18 << "\" text-anchor=\"middle\">" << num(xmin)
        << "</text>\n"
        << "<text x=\"" << kLeft + pw << "\" y=\"" << kTop + ph + 18 << "\" text-anchor=\"middle\">" << num(xmax)
        << "</text>\n"
        << "<text x=\"" << kLeft - 8 << "\" y=\"" << kTop + ph + 4 << "\" text-anchor=\"end\">" << num(ymin)
        << "</text>\n"
        << "<text x=\"" << kLeft - 8 << "\" y=\"" << kTop + 4 << "\" text-anchor=\"end\">" << num(ymax)
        << "</text>\n"
        << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 18 << "\" text-anchor=\"middle\">"
        << escape(x_label) << "</text>\n"
        << "<text x=\"18\" y=\"" << kTop + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << kTop + ph / 2 << ")\">" << escape(y_label) << "</text>\n"
        << "</g>\n";

    for (std::size_t k = 0; k < series.size(); k++) {
        const auto &s = series[k];
        const char *color = kColors[k % kColors.size()];
        const char *dash = kDashes[k % kDashes.size()];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"";
        if (*dash != '\0') {
            out << " stroke-dasharray=\"" << dash << "\"";
        }
        out << " points=\"";
        for (std::size_t i = 0; i < s.y.size() && i < x.size(); i++) {
            out << (i ? " " : "") << num(sx(x[i])) << ',' << num(sy(s.y[i]));
        }
        out << "\"/>\n";
        const double ly = kTop + 16 + 20 * static_cast<double>(k);
        out << "<line x1=\"" << kLeft + pw + 14 << "\" y1=\"" << ly << "\" x2=\"" << kLeft + pw + 44 << "\" y2=\"" << ly
            << "\" stroke=\"" << color << "\" stroke-width=\"2\"";
        if (*dash != '\0') {
            out << " stroke-dasharray=\"" << dash << "\"";
        }
        out << "/>\n"
            << "<text x=\"" << kLeft + pw + 50 << "\" y=\"" << ly + 4
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape(s.label) << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace weylgate
