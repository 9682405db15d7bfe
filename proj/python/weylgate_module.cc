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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "weylgate/canonical.h"
#include "weylgate/cli.h"
#include "weylgate/edges.h"
#include "weylgate/gates.h"
#include "weylgate/invariants.h"
#include "weylgate/schmidt.h"

namespace py = pybind11;
using namespace weylgate;

namespace {

using ComplexArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

template <std::size_t N>
CMat<N> to_mat(const ComplexArray &a) {
    if (a.ndim() != 2 || a.shape(0) != static_cast<py::ssize_t>(N) || a.shape(1) != static_cast<py::ssize_t>(N)) {
        throw py::value_error("expected a " + std::to_string(N) + "x" + std::to_string(N) + " complex array");
    }
    std::array<cplx, N * N> e{};
    auto r = a.unchecked<2>();
    for (std::size_t i = 0; i < N; i++) {
        for (std::size_t j = 0; j < N; j++) {
            e[i * N + j] = r(i, j);
        }
    }
    return CMat<N>(e);
}

template <std::size_t N>
ComplexArray to_array(const CMat<N> &m) {
    ComplexArray a({N, N});
    auto w = a.mutable_unchecked<2>();
    for (std::size_t i = 0; i < N; i++) {
        for (std::size_t j = 0; j < N; j++) {
            w(i, j) = m(i, j);
        }
    }
    return a;
}

CanonicalPoint to_point(const std::array<double, 3> &c) {
    return CanonicalPoint{c[0], c[1], c[2], false};
}

}  // namespace

PYBIND11_MODULE(weylgate, m) {
    m.doc() = "Nonlocal analysis of two-qubit gates";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<LookupError>(m, "LookupError", PyExc_KeyError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    py::class_<Gate>(m, "Gate")
        .def(py::init([](const ComplexArray &a, std::optional<std::string> name) {
                 return make_gate(to_mat<4>(a), std::move(name));
             }),
             py::arg("matrix"), py::arg("name") = py::none())
        .def_property_readonly("matrix", [](const Gate &g) { return to_array(g.matrix()); })
        .def_property_readonly("name", &Gate::name)
        .def_property_readonly("phase_normalized", &Gate::phase_normalized)
        .def("to_json", [](const Gate &g) { return gate_to_json(g).dump(); })
        .def("__repr__", [](const Gate &g) { return "<weylgate.Gate " + g.name().value_or("unnamed") + ">"; });

    m.def("catalog", [](const std::string &name) { return catalog(name); }, py::arg("name"));
    m.def("catalog_names", [] {
        std::vector<std::string> out;
        for (auto n : catalog_names()) {
            out.emplace_back(n);
        }
        return out;
    });
    m.def("gate_from_json", [](const std::string &text) {
        try {
            return gate_from_json(nlohmann::json::parse(text));
        } catch (const nlohmann::json::parse_error &e) {
            throw ParseError(e.what());
        }
    });
    m.def("su4_normalize", &su4_normalize);
    m.def("bell_transform", [](const Gate &g) { return to_array(bell_transform(g)); });
    m.def("magic_basis", [] { return to_array(magic_basis()); });
    m.def("controlled_unitary_gate", &controlled_unitary_gate, py::arg("p"));
    m.def("canonical_gate", [](const std::array<double, 3> &c) { return canonical_gate(to_point(c)); });

    m.def("invariants_from_unitary", [](const Gate &g) {
        const auto inv = invariants_from_unitary(g);
        return py::make_tuple(inv.g1, inv.g2);
    });
    m.def("invariants_from_point", [](const std::array<double, 3> &c) {
        const auto inv = invariants_from_point(to_point(c));
        return py::make_tuple(inv.g1, inv.g2);
    });
    m.def("invariants_from_z", [](const std::array<cplx, 4> &z) {
        const auto inv = invariants_from_z(ZCoefficients{z});
        return py::make_tuple(inv.g1, inv.g2);
    });
    m.def("locally_equivalent", &locally_equivalent, py::arg("a"), py::arg("b"),
          py::arg("tol") = kLocalEquivalenceTol);

    m.def("canonical_point", [](const Gate &g) { return canonical_point(g).coords(); });
    m.def("weyl_reduce", [](const std::array<double, 3> &c) { return weyl_reduce(to_point(c)).coords(); });
    m.def("is_perfect_entangler", [](const std::array<double, 3> &c) { return is_perfect_entangler(to_point(c)); });
    m.def("schmidt_number_line", [](const std::array<double, 3> &c) { return schmidt_number_line(to_point(c)); });

    m.def("z_from_point", [](const std::array<double, 3> &c) { return z_from_point(to_point(c)).z; });
    m.def("schmidt_decompose", [](const Gate &g) {
        const SchmidtData d = schmidt_decompose(g);
        py::list a;
        py::list b;
        for (std::size_t l = 0; l < 4; l++) {
            a.append(to_array(d.factors_a[l]));
            b.append(to_array(d.factors_b[l]));
        }
        py::dict out;
        out["coefficients"] = d.coefficients;
        out["factors_a"] = a;
        out["factors_b"] = b;
        out["schmidt_number"] = d.schmidt_number;
        out["strength"] = d.strength;
        return out;
    });
    m.def("schmidt_strength", &schmidt_strength);
    m.def("schmidt_number_of", [](const Gate &g) { return schmidt_number_of(g); });

    m.def("edge_names", [] {
        std::vector<std::string> out;
        for (const auto &e : all_edges()) {
            out.emplace_back(e.name);
        }
        return out;
    });
    m.def(
        "sweep",
        [](const std::string &name, int n) {
            py::list rows;
            for (const auto &r : sweep(name, n)) {
                py::dict d;
                d["param"] = r.param;
                d["point"] = r.point.coords();
                d["s"] = r.s;
                d["strength"] = r.strength;
                d["g1"] = r.g1;
                d["g2"] = r.g2;
                d["is_pe"] = r.is_pe;
                rows.append(d);
            }
            return rows;
        },
        py::arg("edge"), py::arg("n_points"));
    m.def(
        "verify_tables",
        [](int n) {
            const TableReport rep = verify_tables(n);
            py::dict per_edge;
            for (const auto &e : rep.edges) {
                per_edge[py::str(e.name)] = e.max_deviation;
            }
            return py::make_tuple(rep.passed, per_edge);
        },
        py::arg("n_points") = 97);
    m.def(
        "figure_csv",
        [](const std::string &key, int n) {
            std::ostringstream s;
            emit_figure_data(s, parse_figure(key), n);
            return s.str();
        },
        py::arg("figure"), py::arg("n_points") = 201);
    m.def("analyze", [](const Gate &g, const std::string &source) {
        return report_json(analyze(g, source)).dump();
    });
}
