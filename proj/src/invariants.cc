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

#include "weylgate/invariants.h"

#include <sstream>

namespace weylgate {

namespace {

double checked_real(cplx g2, const char *route) {
    if (std::abs(g2.imag()) > kG2ImagTol) {
        std::ostringstream msg;
        msg << route << ": G2 has imaginary residue " << g2.imag();
        throw NumericalError(msg.str());
    }
    return g2.real();
}

}  // namespace

double LocalInvariants::distance(const LocalInvariants &o) const {
    return std::max(std::abs(g1 - o.g1), std::abs(g2 - o.g2));
}

LocalInvariants invariants_from_unitary(const Gate &g) {
    const CMat4 ub = bell_transform(g);
    const CMat4 m = ub.transpose() * ub;
    const cplx tr = m.trace();
    const cplx tr_sq = (m * m).trace();
    const cplx d = det(g.matrix());
    LocalInvariants out;
    out.g1 = tr * tr / (16.0 * d);
    out.g2 = checked_real((tr * tr - tr_sq) / (4.0 * d), "invariants_from_unitary");
    return out;
}

LocalInvariants invariants_from_point(const CanonicalPoint &c) {
    const double cc = std::pow(std::cos(c.c1) * std::cos(c.c2) * std::cos(c.c3), 2);
    const double ss = std::pow(std::sin(c.c1) * std::sin(c.c2) * std::sin(c.c3), 2);
    const double s2 = std::sin(2 * c.c1) * std::sin(2 * c.c2) * std::sin(2 * c.c3);
    const double c2 = std::cos(2 * c.c1) * std::cos(2 * c.c2) * std::cos(2 * c.c3);
    LocalInvariants out;
    out.g1 = cplx{cc - ss, s2 / 4.0};
    out.g2 = 4.0 * cc - 4.0 * ss - c2;
    return out;
}

LocalInvariants invariants_from_z(const ZCoefficients &z, const Tolerance &tol) {
    double norm = 0.0;
    cplx sum_sq = 0.0;
    cplx sum_4 = 0.0;
    cplx prod = 1.0;
    for (const cplx &zl : z.z) {
        norm += std::norm(zl);
        const cplx sq = zl * zl;
        sum_sq += sq;
        sum_4 += sq * sq;
        prod *= zl;
    }
    if (std::abs(norm - 1.0) > tol.zero) {
        std::ostringstream msg;
        msg << "invariants_from_z: sum |z|^2 = " << norm << " is not 1";
        throw PreconditionError(msg.str());
    }
    LocalInvariants out;
    out.g1 = sum_sq * sum_sq;
    out.g2 = checked_real(out.g1 + 2.0 * sum_4 + 24.0 * prod, "invariants_from_z");
    return out;
}

bool locally_equivalent(const Gate &a, const Gate &b, double tol) {
    const LocalInvariants ia = invariants_from_unitary(a);
    const LocalInvariants ib = invariants_from_unitary(b);
    return std::abs(ia.g1 - ib.g1) <= tol && std::abs(ia.g2 - ib.g2) <= tol;
}

}  // namespace weylgate
