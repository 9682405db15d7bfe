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

#include "weylgate/schmidt.h"

#include <algorithm>
#include <functional>
#include <sstream>

namespace weylgate {

namespace {

constexpr cplx I{0.0, 1.0};

int count_above(const std::array<double, 4> &s, double tol) {
    return static_cast<int>(std::count_if(s.begin(), s.end(), [tol](double x) { return x > tol; }));
}

}  // namespace

std::array<double, 4> ZCoefficients::sorted_moduli() const {
    std::array<double, 4> m{};
    for (std::size_t l = 0; l < 4; l++) {
        m[l] = std::abs(z[l]);
    }
    std::sort(m.begin(), m.end(), std::greater<>());
    return m;
}

ZCoefficients z_from_point(const CanonicalPoint &c) {
    const cplx ep = std::polar(1.0, c.c1 / 2.0);
    const cplx em = std::polar(1.0, -c.c1 / 2.0);
    const double diff = (c.c3 - c.c2) / 2.0;
    const double sum = (c.c3 + c.c2) / 2.0;
    ZCoefficients out;
    out.z[0] = 0.5 * (ep * std::cos(diff) + em * std::cos(sum));
    out.z[1] = 0.5 * (ep * std::cos(diff) - em * std::cos(sum));
    out.z[2] = -0.5 * I * (ep * std::sin(diff) - em * std::sin(sum));
    out.z[3] = 0.5 * I * (ep * std::sin(diff) + em * std::sin(sum));
    return out;
}

SchmidtData schmidt_decompose(const Gate &g, const Tolerance &tol) {
    const CMat4 &u = g.matrix();
    CMat4 realigned;
    for (std::size_t a = 0; a < 2; a++) {
        for (std::size_t b = 0; b < 2; b++) {
            for (std::size_t c = 0; c < 2; c++) {
                for (std::size_t d = 0; d < 2; d++) {
                    realigned(2 * a + b, 2 * c + d) = u(2 * a + c, 2 * b + d);
                }
            }
        }
    }
    const Svd4 svd = svd4(realigned);

    SchmidtData out;
    for (std::size_t l = 0; l < 4; l++) {
        out.coefficients[l] = svd.singular_values[l] / 2.0;
        for (std::size_t i = 0; i < 4; i++) {
            out.factors_a[l](i / 2, i % 2) = svd.left(i, l);
            out.factors_b[l](i / 2, i % 2) = std::conj(svd.right(i, l));
        }
    }
    out.schmidt_number = schmidt_number_from(out.coefficients, tol);
    out.strength = schmidt_strength(out.coefficients);
    return out;
}

CMat4 reconstruct(const SchmidtData &d) {
    CMat4 out;
    for (std::size_t l = 0; l < 4; l++) {
        out += kron(d.factors_a[l], d.factors_b[l]) * (2.0 * d.coefficients[l]);
    }
    return out;
}

int schmidt_number_from(const std::array<double, 4> &s, const Tolerance &tol) {
    for (double t : {tol.zero, tol.zero * 10.0, tol.zero / 10.0}) {
        const int n = count_above(s, t);
        if (n != 3) {
            return n;
        }
    }
    std::ostringstream msg;
    msg.precision(17);
    msg << "Schmidt number 3 at tolerances " << tol.zero / 10.0 << ".." << tol.zero * 10.0 << " for coefficients ("
        << s[0] << ", " << s[1] << ", " << s[2] << ", " << s[3] << ")";
    throw InvariantViolation(msg.str());
}

int schmidt_number_of(const Gate &g, const Tolerance &tol) {
    return schmidt_decompose(g, tol).schmidt_number;
}

double schmidt_strength(const std::array<double, 4> &s) {
    double total = 0.0;
    for (double x : s) {
        if (!(x >= 0.0)) {
            throw PreconditionError("Schmidt coefficients must be nonnegative");
        }
        total += x * x;
    }
    if (std::abs(total - 1.0) > 1e-10) {
        std::ostringstream msg;
        msg << "Schmidt coefficients are not normalized: sum s^2 = " << total;
        throw PreconditionError(msg.str());
    }
    double k = 0.0;
    for (double x : s) {
        const double p = x * x;
        if (p >= 1e-300) {
            k -= p * std::log2(p);
        }
    }
    return std::clamp(k, 0.0, 2.0);
}

Gate controlled_unitary_gate(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("controlled_unitary_gate: p must lie in [0, 1]");
    }
    const CMat4 m = kron(pauli::identity(), pauli::identity()) * std::sqrt(1.0 - p) +
                    kron(pauli::x(), pauli::x()) * (I * std::sqrt(p));
    std::ostringstream name;
    name << "controlled_unitary(p=" << p << ")";
    return make_gate(m, name.str());
}

}  // namespace weylgate
