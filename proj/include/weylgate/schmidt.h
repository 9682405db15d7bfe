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

#ifndef WEYLGATE_SCHMIDT_H
#define WEYLGATE_SCHMIDT_H

#include <array>

#include "weylgate/gates.h"
#include "weylgate/linops.h"
#include "weylgate/point.h"

namespace weylgate {

/// Expansion coefficients of the nonlocal core in the basis
/// (I(x)I, X(x)X, Y(x)Y, Z(x)Z). Their moduli are the Schmidt coefficients.
struct ZCoefficients {
    std::array<cplx, 4> z{};

    /// |z_l| in descending order.
    std::array<double, 4> sorted_moduli() const;
};

/// Closed-form coefficients of exp(i/2 (c1 XX + c2 YY + c3 ZZ)).
ZCoefficients z_from_point(const CanonicalPoint &c);

/// Operator-Schmidt decomposition U = sum_l s_l (2 A_l (x) B_l), where the A_l
/// and B_l are orthonormal under tr(a^dag b) and sum_l s_l^2 = 1.
struct SchmidtData {
    std::array<double, 4> coefficients{};  // descending
    std::array<CMat2, 4> factors_a;
    std::array<CMat2, 4> factors_b;
    int schmidt_number = 0;  // 1, 2 or 4
    double strength = 0.0;   // bits, in [0, 2]
};

/// Numerical decomposition by realignment and SVD. The realigned matrix is
/// R[2a+b][2c+d] = U[2a+c][2b+d], i.e. U = sum_ij R_ij E_i (x) E_j.
SchmidtData schmidt_decompose(const Gate &g, const Tolerance &tol = {});

/// sum_l s_l (2 A_l (x) B_l).
CMat4 reconstruct(const SchmidtData &d);

/// Number of coefficients above tol.zero. A count of 3 is retried at 10x and
/// 0.1x the tolerance; if it persists InvariantViolation is thrown.
int schmidt_number_from(const std::array<double, 4> &s, const Tolerance &tol = {});
int schmidt_number_of(const Gate &g, const Tolerance &tol = {});

/// Shannon entropy (bits) of {s_l^2}. Requires s_l >= 0 and
/// |sum s_l^2 - 1| <= 1e-10 (PreconditionError otherwise).
double schmidt_strength(const std::array<double, 4> &s);

/// sqrt(1-p) I(x)I + i sqrt(p) X(x)X for p in [0, 1]; DomainError otherwise.
/// With p = sin^2(theta/2) the gate sits at [theta, 0, 0].
Gate controlled_unitary_gate(double p);

}  // namespace weylgate

#endif
