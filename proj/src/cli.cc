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

#include "weylgate/cli.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "weylgate/plot.h"
#include "weylgate/random.h"

namespace weylgate {

namespace {

constexpr double kRadToDeg = 180.0 / kPi;

std::string fixed6(double x) {
    if (std::abs(x) < 5e-7) {
        x = 0.0;
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

double round15(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

std::string sci(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

struct SvgTarget {
    std::string title;
    std::string x_label;
    std::vector<double> x;
    std::vector<Series> series;
};

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::ios_base::failure("cannot open '" + path + "' for writing");
    }
    f << content;
    f.close();
    if (!f) {
        throw std::ios_base::failure("failed writing '" + path + "'");
    }
}

std::string svg_path_for(const std::string &csv_path) {
    std::filesystem::path p(csv_path);
    p.replace_extension(".svg");
    return p.string();
}

std::string svg_string(const SvgTarget &t) {
    std::ostringstream s;
    write_svg_plot(s, t.title, t.x_label, "Schmidt strength (bits)", t.x, t.series);
    return s.str();
}

Gate resolve_source(const std::string &source) {
    const auto names = catalog_names();
    if (std::find(names.begin(), names.end(), source) != names.end()) {
        return catalog(source);
    }
    if (!std::filesystem::exists(source)) {
        std::string valid;
        for (auto n : names) {
            valid += valid.empty() ? "" : ", ";
            valid += n;
        }
        throw ParseError("'" + source + "' is neither a catalog gate nor a readable file (catalog: " + valid + ")");
    }
    return read_gate_file(source);
}

// Uniform point in the Weyl chamber tetrahedron via flat Dirichlet weights.
CanonicalPoint uniform_chamber_point(Rng &rng) {
    std::exponential_distribution<double> expo(1.0);
    std::array<double, 4> w{};
    double total = 0.0;
    for (auto &x : w) {
        x = expo(rng);
        total += x;
    }
    const ChamberGeometry &g = chamber_geometry();
    const std::array<CanonicalPoint, 4> v = {g.O, g.A1, g.A2, g.A3};
    CanonicalPoint p;
    for (std::size_t k = 0; k < 4; k++) {
        p.c1 += w[k] / total * v[k].c1;
        p.c2 += w[k] / total * v[k].c2;
        p.c3 += w[k] / total * v[k].c3;
    }
    return p;
}

int map_exception(const std::exception &e, std::ostream &err) {
    err << "error: " << e.what() << '\n';
    if (dynamic_cast<const ParseError *>(&e) || dynamic_cast<const LookupError *>(&e) ||
        dynamic_cast<const PreconditionError *>(&e)) {
        return kExitParse;
    }
    if (dynamic_cast<const ValidationError *>(&e)) {
        return kExitValidation;
    }
    if (dynamic_cast<const NumericalError *>(&e)) {
        return kExitNumerical;
    }
    if (dynamic_cast<const std::ios_base::failure *>(&e)) {
        return kExitIo;
    }
    return kExitNumerical;
}

}  // namespace

AnalysisReport analyze(const Gate &g, const std::string &source) {
    AnalysisReport r;
    r.source = source;
    r.point = canonical_point(g);
    r.invariants = invariants_from_unitary(g);
    const SchmidtData sd = schmidt_decompose(g);
    r.coefficients = sd.coefficients;
    r.schmidt_number = sd.schmidt_number;
    r.strength = sd.strength;
    r.perfect_entangler = is_perfect_entangler(r.point);
    r.controlled_unitary = schmidt_number_line(r.point);
    return r;
}

std::string report_text(const AnalysisReport &r, bool degrees) {
    const double scale = degrees ? kRadToDeg : 1.0;
    std::ostringstream s;
    s << "gate:                 " << r.source << '\n'
      << "canonical point:      [" << fixed6(r.point.c1 * scale) << ", " << fixed6(r.point.c2 * scale) << ", "
      << fixed6(r.point.c3 * scale) << "] " << (degrees ? "deg" : "rad") << '\n'
      << "G1:                   " << fixed6(r.invariants.g1.real()) << (r.invariants.g1.imag() < -5e-7 ? " - " : " + ")
      << fixed6(std::abs(r.invariants.g1.imag())) << "i\n"
      << "G2:                   " << fixed6(r.invariants.g2) << '\n'
      << "Schmidt coefficients: " << fixed6(r.coefficients[0]) << ' ' << fixed6(r.coefficients[1]) << ' '
      << fixed6(r.coefficients[2]) << ' ' << fixed6(r.coefficients[3]) << '\n'
      << "Schmidt number:       " << r.schmidt_number << '\n'
      << "Schmidt strength:     " << fixed6(r.strength) << '\n'
      << "perfect entangler:    " << (r.perfect_entangler ? "yes" : "no") << '\n'
      << "controlled unitary:   " << (r.controlled_unitary ? "yes" : "no") << '\n';
    return s.str();
}

nlohmann::json report_json(const AnalysisReport &r, bool degrees) {
    const double scale = degrees ? kRadToDeg : 1.0;
    nlohmann::json j;
    j["gate"] = r.source;
    j["canonical_point"] = {round15(r.point.c1 * scale), round15(r.point.c2 * scale), round15(r.point.c3 * scale)};
    j["angle_units"] = degrees ? "deg" : "rad";
    j["g1"] = {{"re", round15(r.invariants.g1.real())}, {"im", round15(r.invariants.g1.imag())}};
    j["g2"] = round15(r.invariants.g2);
    j["schmidt_coefficients"] = {round15(r.coefficients[0]), round15(r.coefficients[1]), round15(r.coefficients[2]),
                                 round15(r.coefficients[3])};
    j["schmidt_number"] = r.schmidt_number;
    j["schmidt_strength"] = round15(r.strength);
    j["perfect_entangler"] = r.perfect_entangler;
    j["controlled_unitary"] = r.controlled_unitary;
    return j;
}

AuditResult run_audit(const AuditOptions &opts) {
    if (opts.samples < 1) {
        throw PreconditionError("audit needs at least one sample");
    }
    AuditResult res;
    Rng rng(opts.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    auto fail = [&](const std::string &why, const Gate &g) {
        res.passed = false;
        res.failures.push_back(why);
        if (!res.counterexample) {
            res.counterexample = g;
        }
    };

    for (int i = 0; i < opts.samples; i++) {
        const Gate g = [&] {
            if (opts.family == AuditFamily::Haar) {
                return haar_gate(rng);
            }
            // theta uniform in (0, pi/2].
            const double theta = (1.0 - unit(rng)) * kPi / 2.0;
            const CMat4 k1 = random_local(rng);
            const CMat4 k2 = random_local(rng);
            return make_gate(k1 * canonical_gate({theta, 0.0, 0.0}).matrix() * k2, "controlled_unitary_line");
        }();
        const CMat4 k1 = random_local(rng);
        const CMat4 k2 = random_local(rng);
        res.samples++;
        try {
            const LocalInvariants from_u = invariants_from_unitary(g);
            const CanonicalPoint c = canonical_point(g);
            const LocalInvariants from_c = invariants_from_point(c);
            const LocalInvariants from_z = invariants_from_z(opts.z_engine(c));
            const double route =
                std::max({from_u.distance(from_c), from_u.distance(from_z), from_c.distance(from_z)});
            res.max_route_deviation = std::max(res.max_route_deviation, route);
            if (route > kAuditRouteTol) {
                fail("three-route invariant deviation " + sci(route) + " at sample " + std::to_string(i), g);
            }

            const SchmidtData sd = schmidt_decompose(g);
            const Gate moved = make_gate(k1 * g.matrix() * k2, "local_transform");
            const SchmidtData sm = schmidt_decompose(moved);
            double coef = 0.0;
            for (std::size_t l = 0; l < 4; l++) {
                coef = std::max(coef, std::abs(sd.coefficients[l] - sm.coefficients[l]));
            }
            const double inv = from_u.distance(invariants_from_unitary(moved));
            res.max_coefficient_deviation = std::max(res.max_coefficient_deviation, coef);
            res.max_invariant_deviation = std::max(res.max_invariant_deviation, inv);
            if (coef > kAuditLocalTol || inv > kAuditLocalTol) {
                fail("local-invariance deviation (coefficients " + sci(coef) + ", invariants " + sci(inv) +
                         ") at sample " + std::to_string(i),
                     g);
            }

            const int n = sd.schmidt_number;
            if (n >= 1 && n <= 4) {
                res.schmidt_histogram[n]++;
            }
            if (n != 1 && n != 2 && n != 4) {
                fail("Schmidt number " + std::to_string(n) + " at sample " + std::to_string(i), g);
            }
            if (opts.family == AuditFamily::ControlledUnitaryLine && n > 2) {
                fail("controlled-unitary gate with Schmidt number " + std::to_string(n) + " at sample " +
                         std::to_string(i),
                     g);
            }
            if (is_perfect_entangler(c)) {
                res.perfect_entanglers++;
            }
        } catch (const Error &e) {
            fail(std::string("exception at sample ") + std::to_string(i) + ": " + e.what(), g);
        }
    }

    if (opts.family == AuditFamily::Haar) {
        Rng volume_rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
        int inside = 0;
        for (int i = 0; i < opts.samples; i++) {
            if (is_perfect_entangler(uniform_chamber_point(volume_rng))) {
                inside++;
            }
        }
        res.chamber_volume_fraction = static_cast<double>(inside) / opts.samples;
        if (opts.samples >= kAuditVolumeMinSamples && std::abs(*res.chamber_volume_fraction - 0.5) > kAuditVolumeTol) {
            res.passed = false;
            res.failures.push_back("perfect-entangler chamber-volume fraction " +
                                   fixed6(*res.chamber_volume_fraction) + " outside 0.5 +- 0.05");
        }
    }
    return res;
}

void print_audit(std::ostream &out, const AuditOptions &opts, const AuditResult &r) {
    out << "audit: samples=" << r.samples << " seed=" << opts.seed
        << " family=" << (opts.family == AuditFamily::Haar ? "haar" : "cu-line") << '\n';
    out << "three-route invariant deviation (max): " << sci(r.max_route_deviation) << " [tol " << sci(kAuditRouteTol)
        << "]\n";
    out << "local-invariance coefficient deviation (max): " << sci(r.max_coefficient_deviation) << " [tol "
        << sci(kAuditLocalTol) << "]\n";
    out << "local-invariance invariant deviation (max): " << sci(r.max_invariant_deviation) << " [tol "
        << sci(kAuditLocalTol) << "]\n";
    out << "Schmidt numbers: 1:" << r.schmidt_histogram[1] << " 2:" << r.schmidt_histogram[2]
        << " 3:" << r.schmidt_histogram[3] << " 4:" << r.schmidt_histogram[4] << '\n';
    out << "perfect-entangler fraction (sampled gates): " << fixed6(static_cast<double>(r.perfect_entanglers) / r.samples)
        << '\n';
    if (r.chamber_volume_fraction) {
        out << "perfect-entangler fraction (uniform chamber volume): " << fixed6(*r.chamber_volume_fraction);
        if (r.samples >= kAuditVolumeMinSamples) {
            out << " [expected 0.5 +- 0.05]\n";
        } else {
            out << " [not checked below " << kAuditVolumeMinSamples << " samples]\n";
        }
    }
    for (const auto &f : r.failures) {
        out << "violation: " << f << '\n';
    }
    out << (r.passed ? "PASS" : "FAIL") << '\n';
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, const CliHooks &hooks) {
    CLI::App app{"Nonlocal analysis of two-qubit gates: Weyl-chamber coordinates, local invariants, "
                 "operator-Schmidt decomposition and Schmidt strength."};
    app.name("weylgate");
    app.require_subcommand(1);

    std::string source;
    std::string format = "text";
    bool degrees = false;
    auto *analyze_cmd = app.add_subcommand("analyze", "Analyze a catalog gate or a gate JSON file");
    analyze_cmd->add_option("source", source, "Catalog name or path to gate JSON")->required();
    analyze_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    analyze_cmd->add_flag("--degrees", degrees, "Print angles in degrees");

    std::string edge_name;
    int sweep_n = 101;
    std::string sweep_out;
    bool sweep_svg = false;
    auto *sweep_cmd = app.add_subcommand("sweep", "Sweep Schmidt data along a chamber or polyhedron edge");
    sweep_cmd->add_option("edge", edge_name, "Edge name (see list-gates)")->required();
    sweep_cmd->add_option("--n", sweep_n, "Number of grid points (>= 2)");
    sweep_cmd->add_option("--out", sweep_out, "CSV output path (stdout when omitted)");
    sweep_cmd->add_flag("--svg", sweep_svg, "Also write an SVG plot next to the CSV");

    std::string figure_key;
    int figure_n = 201;
    std::string figure_out;
    bool figure_svg = false;
    auto *figure_cmd = app.add_subcommand("figure", "Emit Schmidt-strength curves for one figure");
    figure_cmd->add_option("figure", figure_key, "fig2, fig3a, fig3b, fig4a, fig4b, fig5a or fig5b")->required();
    figure_cmd->add_option("--n", figure_n, "Number of grid points (>= 2)");
    figure_cmd->add_option("--out", figure_out, "CSV output path (stdout when omitted)");
    figure_cmd->add_flag("--svg", figure_svg, "Also write an SVG plot next to the CSV");

    int verify_n = 97;
    auto *verify_cmd = app.add_subcommand("verify-tables", "Check closed-form edge coefficients against the engine");
    verify_cmd->add_option("--n", verify_n, "Grid points per edge (>= 2)");

    AuditOptions audit_opts;
    std::string family = "haar";
    std::string counterexample_out;
    auto *audit_cmd = app.add_subcommand("audit", "Randomized property audit");
    audit_cmd->add_option("--samples", audit_opts.samples, "Number of random gates (>= 1)");
    audit_cmd->add_option("--seed", audit_opts.seed, "PRNG seed")->required();
    audit_cmd->add_option("--family", family, "Gate family")->check(CLI::IsMember({"haar", "cu-line"}));
    audit_cmd->add_option("--counterexample-out", counterexample_out, "Also write a failing gate to this JSON file");

    auto *list_cmd = app.add_subcommand("list-gates", "List catalog gates, edges and figures");

    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (*analyze_cmd) {
            const Gate g = resolve_source(source);
            const AnalysisReport r = analyze(g, source);
            if (format == "json") {
                out << report_json(r, degrees).dump(2) << '\n';
            } else {
                out << report_text(r, degrees);
            }
            return kExitOk;
        }

        if (*sweep_cmd) {
            const EdgeSpec &spec = edge(edge_name);
            const auto rows = sweep(edge_name, sweep_n);
            std::ostringstream csv;
            write_sweep_csv(csv, rows);
            double kmin = rows.front().strength;
            double kmax = kmin;
            for (const auto &r : rows) {
                kmin = std::min(kmin, r.strength);
                kmax = std::max(kmax, r.strength);
            }
            if (sweep_out.empty()) {
                out << csv.str();
            } else {
                write_text_file(sweep_out, csv.str());
                if (sweep_svg) {
                    SvgTarget t{"Schmidt strength along " + edge_name, std::string(spec.parameter), {}, {}};
                    Series s{edge_name, {}};
                    for (const auto &r : rows) {
                        t.x.push_back(r.param);
                        s.y.push_back(r.strength);
                    }
                    t.series.push_back(std::move(s));
                    write_text_file(svg_path_for(sweep_out), svg_string(t));
                }
                out << "wrote " << rows.size() << " rows to " << sweep_out << '\n';
            }
            if (sweep_svg && sweep_out.empty()) {
                err << "note: --svg needs --out; no SVG written\n";
            }
            (sweep_out.empty() ? err : out) << "edge " << edge_name << ": strength min " << format_value(kmin)
                                            << " max " << format_value(kmax) << '\n';
            return kExitOk;
        }

        if (*figure_cmd) {
            const FigureData data = figure_data(parse_figure(figure_key), figure_n);
            std::ostringstream csv;
            write_figure_csv(csv, data);
            if (figure_out.empty()) {
                out << csv.str();
                if (figure_svg) {
                    err << "note: --svg needs --out; no SVG written\n";
                }
            } else {
                write_text_file(figure_out, csv.str());
                if (figure_svg) {
                    SvgTarget t{std::string(data.spec->key), std::string(data.spec->parameter), data.params, {}};
                    for (std::size_t k = 0; k < data.strengths.size(); k++) {
                        t.series.push_back({std::string(data.spec->curves[k]), data.strengths[k]});
                    }
                    write_text_file(svg_path_for(figure_out), svg_string(t));
                }
                out << "wrote " << figure_key << " to " << figure_out << '\n';
            }
            return kExitOk;
        }

        if (*verify_cmd) {
            const TableReport report = verify_tables(verify_n, hooks.z_engine);
            for (const auto &e : report.edges) {
                const EdgeSpec &spec = edge(e.name);
                char line[160];
                std::snprintf(line, sizeof line, "%-5s max deviation %.3e at %s = %.12f  %s\n", e.name.c_str(),
                              e.max_deviation, std::string(spec.parameter).c_str(), e.worst_param,
                              e.max_deviation <= report.tolerance ? "ok" : "MISMATCH");
                out << line;
            }
            if (report.passed) {
                out << "PASS, " << report.edges.size() << " edges (tolerance " << sci(report.tolerance) << ")\n";
                return kExitOk;
            }
            for (const auto &e : report.edges) {
                if (!(e.max_deviation <= report.tolerance)) {
                    err << "mismatch on edge " << e.name << " at " << edge(e.name).parameter << " = " << e.worst_param
                        << " (deviation " << sci(e.max_deviation) << ")\n";
                }
            }
            out << "FAIL\n";
            return kExitTableMismatch;
        }

        if (*audit_cmd) {
            audit_opts.family = family == "haar" ? AuditFamily::Haar : AuditFamily::ControlledUnitaryLine;
            audit_opts.z_engine = hooks.z_engine;
            const AuditResult r = run_audit(audit_opts);
            print_audit(out, audit_opts, r);
            if (r.passed) {
                return kExitOk;
            }
            if (r.counterexample) {
                const std::string js = gate_to_json(*r.counterexample).dump(2);
                out << "counterexample:\n" << js << '\n';
                if (!counterexample_out.empty()) {
                    write_text_file(counterexample_out, js + "\n");
                }
            }
            return kExitAuditFailure;
        }

        if (*list_cmd) {
            out << "gates:";
            for (auto n : catalog_names()) {
                out << ' ' << n;
            }
            out << "\nedges:";
            for (const auto &e : all_edges()) {
                out << ' ' << e.name;
            }
            out << "\nfigures:";
            for (auto k : figure_keys()) {
                out << ' ' << k;
            }
            out << '\n';
            return kExitOk;
        }
    } catch (const std::exception &e) {
        return map_exception(e, err);
    }
    return kExitParse;
}

}  // namespace weylgate
