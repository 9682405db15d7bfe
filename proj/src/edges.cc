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

#include "weylgate/edges.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "weylgate/canonical.h"

namespace weylgate {

namespace {

using std::cos;
using std::sin;
using std::sqrt;

const double kR2 = std::sqrt(2.0);
const double kC8 = std::cos(kPi / 8.0);
const double kS8 = std::sin(kPi / 8.0);
const double kInv2R2 = 1.0 / (2.0 * std::sqrt(2.0));

CanonicalPoint pt(double c1, double c2, double c3) {
    return CanonicalPoint{c1, c2, c3, false};
}

// Radicands of the QP / MN / PN rows.
double mixed_hi(double half) {
    return sqrt(std::pow(kC8, 4) * std::pow(cos(half), 2) + std::pow(kS8, 4) * std::pow(sin(half), 2));
}
double mixed_lo(double half) {
    return sqrt(std::pow(kS8, 4) * std::pow(cos(half), 2) + std::pow(kC8, 4) * std::pow(sin(half), 2));
}

const std::array<EdgeSpec, 15> kEdges = {{
    // Tetrahedron.
    {"OA1", "theta", false, 0.0, kPi,
     [](double t) { return pt(t, 0, 0); },
     [](double t) { return std::array<double, 4>{cos(t / 2), sin(t / 2), 0, 0}; }},
    {"OA2", "theta", false, 0.0, kPi / 2,
     [](double t) { return pt(t, t, 0); },
     [](double t) {
         return std::array<double, 4>{std::pow(cos(t / 2), 2), sin(t) / 2, sin(t) / 2, std::pow(sin(t / 2), 2)};
     }},
    {"A2A1", "phi", false, 0.0, kPi / 2,
     [](double p) { return pt(kPi / 2 + p, kPi / 2 - p, 0); },
     [](double p) { return std::array<double, 4>{cos(p) / 2, (1 + sin(p)) / 2, (1 - sin(p)) / 2, cos(p) / 2}; }},
    {"A2A3", "phi", false, 0.0, kPi / 2,
     [](double p) { return pt(kPi / 2, kPi / 2, p); },
     [](double) { return std::array<double, 4>{0.5, 0.5, 0.5, 0.5}; }},
    {"OA3", "alpha", false, 0.0, 1.0,
     [](double a) { return pt(kPi * a / 2, kPi * a / 2, kPi * a / 2); },
     [](double a) {
         const double h = kPi * a / 2;
         return std::array<double, 4>{0.5 * sqrt(1 + 3 * std::pow(cos(h), 2)), 0.5 * sin(h), 0.5 * sin(h),
                                      0.5 * sin(h)};
     }},
    {"A1A3", "alpha", false, 0.0, 1.0,
     [](double a) { return pt(kPi - kPi * a / 2, kPi * a / 2, kPi * a / 2); },
     [](double a) {
         const double h = kPi * a / 2;
         return std::array<double, 4>{0.5 * sin(h), 0.5 * sqrt(1 + 3 * std::pow(cos(h), 2)), 0.5 * sin(h),
                                      0.5 * sin(h)};
     }},
    // Polyhedron.
    {"LQ", "theta", true, 0.0, kPi / 4,
     [](double t) { return pt(kPi / 2 - t, t, 0); },
     [](double t) {
         const double c = std::pow(cos(t / 2), 2);
         const double s = std::pow(sin(t / 2), 2);
         const double h = sin(t) / 2;
         return std::array<double, 4>{(c + h) / kR2, (c - h) / kR2, (s + h) / kR2, (h - s) / kR2};
     }},
    {"LM", "theta", true, 0.0, kPi / 4,
     [](double t) { return pt(kPi / 2 + t, t, 0); },
     [](double t) {
         const double c = std::pow(cos(t / 2), 2);
         const double s = std::pow(sin(t / 2), 2);
         const double h = sin(t) / 2;
         return std::array<double, 4>{(c - h) / kR2, (c + h) / kR2, (h - s) / kR2, (s + h) / kR2};
     }},
    {"A2M", "phi", true, 0.0, kPi / 4,
     [](double p) { return pt(kPi / 2 + p, kPi / 2 - p, 0); },
     [](double p) { return std::array<double, 4>{cos(p) / 2, (1 + sin(p)) / 2, (1 - sin(p)) / 2, cos(p) / 2}; }},
    {"A2Q", "phi", true, 0.0, kPi / 4,
     [](double p) { return pt(kPi / 2 - p, kPi / 2 - p, 0); },
     [](double p) { return std::array<double, 4>{(1 + sin(p)) / 2, cos(p) / 2, cos(p) / 2, (1 - sin(p)) / 2}; }},
    {"QP", "eta", true, 0.0, kPi / 4,
     [](double e) { return pt(kPi / 4, kPi / 4, e); },
     [](double e) { return std::array<double, 4>{mixed_hi(e / 2), kInv2R2, kInv2R2, mixed_lo(e / 2)}; }},
    {"MN", "eta", true, 0.0, kPi / 4,
     [](double e) { return pt(3 * kPi / 4, kPi / 4, e); },
     [](double e) { return std::array<double, 4>{kInv2R2, mixed_hi(e / 2), mixed_lo(e / 2), kInv2R2}; }},
    {"PN", "eta", true, 0.0, kPi / 2,
     [](double e) { return pt(kPi / 4 + e, kPi / 4, kPi / 4); },
     [](double e) {
         return std::array<double, 4>{mixed_hi(kPi / 8 + e / 2), mixed_lo(kPi / 8 + e / 2), kInv2R2, kInv2R2};
     }},
    {"LN", "theta", true, 0.0, kPi / 4,
     [](double t) { return pt(kPi / 2 + t, t, t); },
     [](double t) {
         const double base = 1 + std::pow(cos(t), 2);
         return std::array<double, 4>{0.5 * sqrt(base - sin(2 * t)), 0.5 * sqrt(base + sin(2 * t)), 0.5 * sin(t),
                                      0.5 * sin(t)};
     }},
    {"A2P", "theta", true, 0.0, kPi / 4,
     [](double t) { return pt(kPi / 2 - t, kPi / 2 - t, t); },
     [](double t) {
         const double base = 1 + std::pow(sin(t), 2);
         return std::array<double, 4>{0.5 * sqrt(base + sin(2 * t)), 0.5 * cos(t), 0.5 * cos(t),
                                      0.5 * sqrt(base - sin(2 * t))};
     }},
}};

const std::array<FigureSpec, 7> &figures() {
    static const std::array<FigureSpec, 7> figs = {{
        // Only the first half of OA1 is plotted; it is symmetric about pi/2.
        {Figure::Fig2, "fig2", "theta", 0.0, kPi / 2, {"OA1", "OA2"}},
        {Figure::Fig3a, "fig3a", "alpha", 0.0, 1.0, {"OA3", "A1A3"}},
        {Figure::Fig3b, "fig3b", "phi", 0.0, kPi / 2, {"A2A1"}},
        {Figure::Fig4a, "fig4a", "phi", 0.0, kPi / 4, {"A2Q", "A2M", "A2P"}},
        {Figure::Fig4b, "fig4b", "theta", 0.0, kPi / 4, {"LQ", "LM", "LN"}},
        {Figure::Fig5a, "fig5a", "eta", 0.0, kPi / 4, {"QP", "MN"}},
        {Figure::Fig5b, "fig5b", "eta", 0.0, kPi / 2, {"PN"}},
    }};
    return figs;
}

constexpr std::array<std::string_view, 7> kFigureKeys = {"fig2", "fig3a", "fig3b", "fig4a",
                                                         "fig4b", "fig5a", "fig5b"};

void check_points(int n) {
    if (n < 2) {
        throw PreconditionError("need at least 2 grid points, got " + std::to_string(n));
    }
}

}  // namespace

std::span<const EdgeSpec> all_edges() {
    return kEdges;
}

const EdgeSpec &edge(std::string_view name) {
    for (const auto &e : kEdges) {
        if (e.name == name) {
            return e;
        }
    }
    std::string valid;
    for (const auto &e : kEdges) {
        valid += valid.empty() ? "" : ", ";
        valid += e.name;
    }
    throw LookupError("unknown edge '" + std::string(name) + "'; valid edges: " + valid);
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
    check_points(n);
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int k = 0; k < n; k++) {
        g[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
    }
    g.back() = hi;
    return g;
}

std::vector<SweepRow> sweep(std::string_view name, int n_points, const ZEngine &engine) {
    const EdgeSpec &spec = edge(name);
    std::vector<SweepRow> rows;
    for (double t : uniform_grid(spec.lo, spec.hi, n_points)) {
        SweepRow row;
        row.param = t;
        row.point = spec.point(t);
        const ZCoefficients z = engine(row.point);
        row.s = z.sorted_moduli();
        row.strength = schmidt_strength(row.s);
        const LocalInvariants inv = invariants_from_point(row.point);
        row.g1 = inv.g1;
        row.g2 = inv.g2;
        row.is_pe = is_perfect_entangler(row.point);
        rows.push_back(row);
    }
    return rows;
}

std::string format_value(double x) {
    if (std::abs(x) < 5e-16) {
        x = 0.0;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15f", x);
    return buf;
}

void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    out << "param,c1,c2,c3,s1,s2,s3,s4,strength,g1_re,g1_im,g2,is_pe\n";
    for (const auto &r : rows) {
        out << format_value(r.param) << ',' << format_value(r.point.c1) << ',' << format_value(r.point.c2) << ','
            << format_value(r.point.c3);
        for (double s : r.s) {
            out << ',' << format_value(s);
        }
        out << ',' << format_value(r.strength) << ',' << format_value(r.g1.real()) << ','
            << format_value(r.g1.imag()) << ',' << format_value(r.g2) << ',' << (r.is_pe ? 1 : 0) << '\n';
    }
}

TableReport verify_tables(int n_points, const ZEngine &engine) {
    check_points(n_points);
    TableReport report;
    for (const auto &e : kEdges) {
        EdgeDeviation dev{std::string(e.name), 0.0, e.lo};
        for (double t : uniform_grid(e.lo, e.hi, n_points)) {
            const auto numeric = engine(e.point(t)).sorted_moduli();
            auto table = e.closed_form_s(t);
            std::sort(table.begin(), table.end(), std::greater<>());
            for (std::size_t l = 0; l < 4; l++) {
                const double d = std::abs(numeric[l] - table[l]);
                // NaN deviations must fail, hence the negated comparison.
                if (!(d <= dev.max_deviation)) {
                    dev.max_deviation = std::isnan(d) ? std::numeric_limits<double>::infinity() : d;
                    dev.worst_param = t;
                }
            }
        }
        if (!(dev.max_deviation <= report.tolerance)) {
            report.passed = false;
        }
        report.edges.push_back(dev);
    }
    return report;
}

const FigureSpec &figure_spec(Figure f) {
    return figures()[static_cast<std::size_t>(f)];
}

Figure parse_figure(std::string_view key) {
    for (const auto &f : figures()) {
        if (f.key == key) {
            return f.id;
        }
    }
    throw LookupError("unknown figure '" + std::string(key) + "'; valid: fig2, fig3a, fig3b, fig4a, fig4b, fig5a, fig5b");
}

std::span<const std::string_view> figure_keys() {
    return kFigureKeys;
}

FigureData figure_data(Figure f, int n_points) {
    const FigureSpec &spec = figure_spec(f);
    FigureData data;
    data.spec = &spec;
    data.params = uniform_grid(spec.lo, spec.hi, n_points);
    for (auto name : spec.curves) {
        const EdgeSpec &e = edge(name);
        std::vector<double> ys;
        ys.reserve(data.params.size());
        for (double t : data.params) {
            ys.push_back(schmidt_strength(z_from_point(e.point(t)).sorted_moduli()));
        }
        data.strengths.push_back(std::move(ys));
    }
    return data;
}

void write_figure_csv(std::ostream &out, const FigureData &data) {
    out << "param";
    for (auto name : data.spec->curves) {
        out << ',' << name;
    }
    out << '\n';
    for (std::size_t k = 0; k < data.params.size(); k++) {
        out << format_value(data.params[k]);
        for (const auto &curve : data.strengths) {
            out << ',' << format_value(curve[k]);
        }
        out << '\n';
    }
}

void emit_figure_data(std::ostream &out, Figure f, int n_points) {
    write_figure_csv(out, figure_data(f, n_points));
}

}  // namespace weylgate
