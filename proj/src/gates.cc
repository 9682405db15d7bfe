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

#include "weylgate/gates.h"

#include <fstream>
#include <sstream>

namespace weylgate {

namespace {

constexpr cplx I{0.0, 1.0};
const double kRh = 1.0 / std::sqrt(2.0);

constexpr std::array<std::string_view, 8> kCatalogNames = {
    "identity", "cnot", "cz", "swap", "dcnot", "iswap", "sqrt_swap", "sqrt_iswap",
};

CMat4 catalog_matrix(std::string_view name) {
    if (name == "identity") {
        return CMat4::identity();
    }
    if (name == "cnot") {
        return CMat4{1, 0, 0, 0,  //
                     0, 1, 0, 0,  //
                     0, 0, 0, 1,  //
                     0, 0, 1, 0};
    }
    if (name == "cz") {
        return CMat4::diagonal({1, 1, 1, -1});
    }
    if (name == "swap") {
        return CMat4{1, 0, 0, 0,  //
                     0, 0, 1, 0,  //
                     0, 1, 0, 0,  //
                     0, 0, 0, 1};
    }
    if (name == "dcnot") {
        // CNOT with control A, followed by CNOT with control B.
        const CMat4 cnot_ab = catalog_matrix("cnot");
        const CMat4 cnot_ba{1, 0, 0, 0,  //
                            0, 0, 0, 1,  //
                            0, 0, 1, 0,  //
                            0, 1, 0, 0};
        return cnot_ba * cnot_ab;
    }
    if (name == "iswap") {
        return CMat4{1, 0, 0, 0,  //
                     0, 0, I, 0,  //
                     0, I, 0, 0,  //
                     0, 0, 0, 1};
    }
    if (name == "sqrt_swap") {
        const cplx p = 0.5 * (1.0 + I);
        const cplx m = 0.5 * (1.0 - I);
        return CMat4{1, 0, 0, 0,  //
                     0, p, m, 0,  //
                     0, m, p, 0,  //
                     0, 0, 0, 1};
    }
    if (name == "sqrt_iswap") {
        return CMat4{1, 0,         0,         0,  //
                     0, kRh,       I * kRh,   0,  //
                     0, I * kRh,   kRh,       0,  //
                     0, 0,         0,         1};
    }
    std::string valid;
    for (auto n : kCatalogNames) {
        valid += valid.empty() ? "" : ", ";
        valid += n;
    }
    throw LookupError("unknown gate '" + std::string(name) + "'; valid names: " + valid);
}

}  // namespace

Gate Gate::renamed(std::optional<std::string> name) const {
    Gate g = *this;
    g.name_ = std::move(name);
    return g;
}

Gate make_gate(const CMat4 &matrix, std::optional<std::string> name, const Tolerance &tol) {
    if (!matrix.is_finite()) {
        throw ValidationError("gate matrix has non-finite entries");
    }
    const double d = unitarity_defect(matrix);
    if (d > tol.unitarity) {
        std::ostringstream msg;
        msg << "gate is not unitary: ||U^dag U - I||_F = " << d << " exceeds " << tol.unitarity;
        throw ValidationError(msg.str());
    }
    return Gate(matrix, std::move(name), false);
}

Gate su4_normalize(const Gate &g) {
    const double alpha = -principal_angle(std::arg(det(g.matrix()))) / 4.0;
    const CMat4 m = g.matrix() * std::polar(1.0, alpha);
    return Gate(m, g.name(), true);
}

namespace pauli {

const CMat2 &identity() {
    static const CMat2 m = CMat2::identity();
    return m;
}

const CMat2 &x() {
    static const CMat2 m{0, 1, 1, 0};
    return m;
}

const CMat2 &y() {
    static const CMat2 m{0, -I, I, 0};
    return m;
}

const CMat2 &z() {
    static const CMat2 m{1, 0, 0, -1};
    return m;
}

}  // namespace pauli

const std::array<CMat2, 4> &pauli_basis() {
    static const std::array<CMat2, 4> basis = {
        pauli::identity() * kRh,
        pauli::x() * kRh,
        pauli::y() * kRh,
        pauli::z() * kRh,
    };
    return basis;
}

const CMat4 &magic_basis() {
    static const CMat4 q = CMat4{1, 0, 0, I,   //
                                 0, I, 1, 0,   //
                                 0, I, -1, 0,  //
                                 1, 0, 0, -I} *
                           kRh;
    return q;
}

CMat4 bell_transform(const Gate &g) {
    const CMat4 &q = magic_basis();
    return q.transpose() * g.matrix() * q;
}

Gate catalog(std::string_view name) {
    return make_gate(catalog_matrix(name), std::string(name));
}

std::span<const std::string_view> catalog_names() {
    return kCatalogNames;
}

Gate gate_from_json(const nlohmann::json &j, const Tolerance &tol) {
    std::optional<std::string> name;
    const nlohmann::json *rows = &j;
    if (j.is_object()) {
        if (!j.contains("matrix")) {
            throw ParseError("gate object has no \"matrix\" field");
        }
        rows = &j.at("matrix");
        if (j.contains("name") && j.at("name").is_string()) {
            name = j.at("name").get<std::string>();
        }
    }
    if (!rows->is_array() || rows->size() != 4) {
        throw ParseError("gate matrix must be an array of 4 rows");
    }
    std::array<cplx, 16> entries{};
    for (std::size_t r = 0; r < 4; r++) {
        const auto &row = (*rows)[r];
        if (!row.is_array() || row.size() != 4) {
            throw ParseError("gate row " + std::to_string(r) + " must have 4 entries");
        }
        for (std::size_t c = 0; c < 4; c++) {
            const auto &e = row[c];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                throw ParseError("entry (" + std::to_string(r) + ", " + std::to_string(c) +
                                 ") must be a [re, im] pair of numbers");
            }
            entries[r * 4 + c] = cplx{e[0].get<double>(), e[1].get<double>()};
        }
    }
    CMat4 m;
    try {
        m = CMat4(entries);
    } catch (const PreconditionError &) {
        throw ParseError("gate matrix has non-finite entries");
    }
    return make_gate(m, std::move(name), tol);
}

nlohmann::json gate_to_json(const Gate &g) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < 4; r++) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < 4; c++) {
            row.push_back({g.matrix()(r, c).real(), g.matrix()(r, c).imag()});
        }
        rows.push_back(row);
    }
    nlohmann::json out;
    if (g.name()) {
        out["name"] = *g.name();
    }
    out["matrix"] = rows;
    return out;
}

Gate read_gate_file(const std::string &path, const Tolerance &tol) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open gate file '" + path + "'");
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    Gate g = gate_from_json(j, tol);
    if (!g.name()) {
        g = g.renamed(path);
    }
    return g;
}

}  // namespace weylgate
