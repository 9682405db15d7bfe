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

#ifndef WEYLGATE_CANONICAL_H
#define WEYLGATE_CANONICAL_H

#include <array>
#include <span>

#include "weylgate/gates.h"
#include "weylgate/invariants.h"
#include "weylgate/point.h"

namespace weylgate {

/// Vertices of the Weyl chamber O A1 A2 A3 and of the perfect-entangler
/// polyhedron L M N P Q A2. L, M, N, P, Q are the midpoints of OA1, A2A1,
/// A1A3, OA3 and OA2.
struct ChamberGeometry {
    CanonicalPoint O, A1, A2, A3;
    CanonicalPoint L, M, N, P, Q;
};

const ChamberGeometry &chamber_geometry();

/// Supporting half-space normal . c <= offset.
struct HalfSpace {
    std::array<double, 3> normal;
    double offset;

    double slack(const CanonicalPoint &c) const {
        return offset - (normal[0] * c.c1 + normal[1] * c.c2 + normal[2] * c.c3);
    }
};

/// Facets of the perfect-entangler polyhedron, outward normals.
std::span<const HalfSpace> perfect_entangler_facets();

inline constexpr double kHullTol = 1e-10;
inline constexpr double kLineTol = 1e-9;
inline constexpr double kExtractionTol = 1e-8;

/// exp(i/2 (c1 XX + c2 YY + c3 ZZ)).
Gate canonical_gate(const CanonicalPoint &c);

/// Maps any point onto the chamber representative of its local-equivalence
/// class using period-pi shifts, permutations and the pair reflections
/// [pi - ci, pi - cj, ck]. Idempotent.
CanonicalPoint weyl_reduce(const CanonicalPoint &c);

/// Chamber inequalities c1 >= c2 >= c3 >= 0, c1 + c2 <= pi, within tol.
bool in_weyl_chamber(const CanonicalPoint &c, double tol = kHullTol);

/// Chamber-reduced coordinates of a gate.
///
/// The eigenphases of M = U_B^T U_B for the SU(4)-normalized gate are
/// {c1-c2+c3, -c1+c2+c3, c1+c2-c3, -(c1+c2+c3)} mod 2pi in some order. Every
/// assignment of phases to those slots (and its mirror) is reduced into the
/// chamber; the lexicographically smallest candidate whose invariants match
/// invariants_from_unitary within 1e-8 wins. ExtractionError otherwise.
CanonicalPoint canonical_point(const Gate &g, const Tolerance &tol = {});

/// Closed-polyhedron membership (boundary counts). Reduces the point first.
bool is_perfect_entangler(const CanonicalPoint &c);

/// True on the controlled-unitary line [theta, 0, 0] (after reduction).
bool schmidt_number_line(const CanonicalPoint &c);

}  // namespace weylgate

#endif
