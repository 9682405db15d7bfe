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

#ifndef WEYLGATE_INVARIANTS_H
#define WEYLGATE_INVARIANTS_H

#include "weylgate/gates.h"
#include "weylgate/point.h"
#include "weylgate/schmidt.h"

namespace weylgate {

/// Makhlin local invariants. Two gates are locally equivalent iff both agree.
struct LocalInvariants {
    cplx g1;
    double g2 = 0.0;

    /// max(|g1 - o.g1|, |g2 - o.g2|).
    double distance(const LocalInvariants &o) const;
};

/// Largest imaginary residue of G2 tolerated before it is dropped.
inline constexpr double kG2ImagTol = 1e-9;

/// From the matrix: with M = U_B^T U_B,
///   G1 = tr(M)^2 / (16 det U),  G2 = (tr(M)^2 - tr(M^2)) / (4 det U).
/// det U is taken from the input as given, so the result ignores global phase.
LocalInvariants invariants_from_unitary(const Gate &g);

/// From canonical coordinates; valid for any real triple.
LocalInvariants invariants_from_point(const CanonicalPoint &c);

/// From Schmidt-form coefficients:
///   G1 = (sum z^2)^2,  G2 = G1 + 2 sum z^4 + 24 prod z.
/// Requires |sum |z|^2 - 1| <= tol.zero.
LocalInvariants invariants_from_z(const ZCoefficients &z, const Tolerance &tol = {});

inline constexpr double kLocalEquivalenceTol = 1e-8;

bool locally_equivalent(const Gate &a, const Gate &b, double tol = kLocalEquivalenceTol);

}  // namespace weylgate

#endif
