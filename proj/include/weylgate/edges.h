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

#ifndef WEYLGATE_EDGES_H
#define WEYLGATE_EDGES_H

#include <array>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weylgate/invariants.h"
#include "weylgate/point.h"
#include "weylgate/schmidt.h"

namespace weylgate {

/// One edge of the Weyl chamber or of the perfect-entangler polyhedron,
/// parameterized by a single angle.
struct EdgeSpec {
    std::string_view name;
    std::string_view parameter;  // theta, phi, alpha or eta
    bool polyhedron;             // false: tetrahedron edge
    double lo;
    double hi;
    CanonicalPoint (*point)(double);
    /// Closed-form Schmidt coefficients, unsorted.
    /// Used as a test oracle only; sweeps never read it.
    std::array<double, 4> (*closed_form_s)(double);
};

/// OA1 OA2 A2A1 A2A3 OA3 A1A3, then LQ LM A2M A2Q QP MN PN LN A2P.
std::span<const EdgeSpec> all_edges();

/// LookupError for unknown names.
const EdgeSpec &edge(std::string_view name);

/// Endpoint-inclusive uniform grid on [lo, hi]; n >= 2.
std::vector<double> uniform_grid(double lo, double hi, int n);

struct SweepRow {
    double param = 0.0;
    CanonicalPoint point;
    std::array<double, 4> s{};  // descending
    double strength = 0.0;
    cplx g1;
    double g2 = 0.0;
    bool is_pe = false;
};

/// Source of the z coefficients for a point; z_from_point unless overridden.
using ZEngine = std::function<ZCoefficients(const CanonicalPoint &)>;

/// Rows in parameter order, computed from z_from_point. PreconditionError for
/// n < 2.
std::vector<SweepRow> sweep(std::string_view name, int n_points, const ZEngine &engine = z_from_point);

/// CSV with header param,c1,c2,c3,s1,s2,s3,s4,strength,g1_re,g1_im,g2,is_pe.
void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows);

struct EdgeDeviation {
    std::string name;
    double max_deviation = 0.0;
    double worst_param = 0.0;
};

struct TableReport {
    std::vector<EdgeDeviation> edges;
    double tolerance = 1e-10;
    bool passed = true;
};

/// Compares sorted |z| from the engine against the sorted closed forms on an
/// n-point grid of every edge.
TableReport verify_tables(int n_points, const ZEngine &engine = z_from_point);

enum class Figure { Fig2, Fig3a, Fig3b, Fig4a, Fig4b, Fig5a, Fig5b };

struct FigureSpec {
    Figure id;
    std::string_view key;         // "fig2", "fig3a", ...
    std::string_view parameter;   // x-axis label
    double lo;
    double hi;
    std::vector<std::string_view> curves;  // edge names, caption order
};

const FigureSpec &figure_spec(Figure f);
/// LookupError for unknown keys.
Figure parse_figure(std::string_view key);
std::span<const std::string_view> figure_keys();

struct FigureData {
    const FigureSpec *spec = nullptr;
    std::vector<double> params;
    std::vector<std::vector<double>> strengths;  // [curve][row]
};

FigureData figure_data(Figure f, int n_points);

/// CSV: param, then one strength column per edge in caption order.
void emit_figure_data(std::ostream &out, Figure f, int n_points);
void write_figure_csv(std::ostream &out, const FigureData &data);

/// Fixed 15-decimal formatting used by every CSV writer; negative zero and
/// |x| < 5e-16 print as 0.
std::string format_value(double x);

}  // namespace weylgate

#endif
