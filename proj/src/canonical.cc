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

#include "weylgate/canonical.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>
#include <vector>

namespace weylgate {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr double kHalfPi = kPi / 2.0;
constexpr double kQuarterPi = kPi / 4.0;

// Base-plane identification [c1, c2, 0] ~ [pi - c1, c2, 0].
constexpr double kBaseTol = 1e-9;

constexpr CanonicalPoint vertex(double c1, double c2, double c3) {
    return CanonicalPoint{c1, c2, c3, true};
}

double wrap_period(double x) {
    x -= kPi * std::floor(x / kPi);
    if (x >= kPi - 1e-14 || x < 0.0) {
        x = 0.0;
    }
    return x;
}

// Facet list; each comment names the polyhedron vertices lying on the facet.
const std::array<HalfSpace, 7> kFacets = {{
    {{0.0, 0.0, -1.0}, 0.0},         // c3 >= 0:            L M A2 Q
    {{-1.0, 1.0, 0.0}, 0.0},         // c2 <= c1:           Q P A2
    {{0.0, -1.0, 1.0}, 0.0},         // c3 <= c2:           L N P
    {{1.0, 1.0, 0.0}, kPi},          // c1 + c2 <= pi:      M N A2
    {{1.0, -1.0, 0.0}, kHalfPi},     // c1 - c2 <= pi/2:    L M N
    {{-1.0, -1.0, 0.0}, -kHalfPi},   // c1 + c2 >= pi/2:    L Q P
    {{0.0, 1.0, 1.0}, kHalfPi},      // c2 + c3 <= pi/2:    N P A2
}};

}  // namespace

const ChamberGeometry &chamber_geometry() {
    static const ChamberGeometry g = {
        vertex(0.0, 0.0, 0.0),
        vertex(kPi, 0.0, 0.0),
        vertex(kHalfPi, kHalfPi, 0.0),
        vertex(kHalfPi, kHalfPi, kHalfPi),
        vertex(kHalfPi, 0.0, 0.0),
        vertex(3.0 * kQuarterPi, kQuarterPi, 0.0),
        vertex(3.0 * kQuarterPi, kQuarterPi, kQuarterPi),
        vertex(kQuarterPi, kQuarterPi, kQuarterPi),
        vertex(kQuarterPi, kQuarterPi, 0.0),
    };
    return g;
}

std::span<const HalfSpace> perfect_entangler_facets() {
    return kFacets;
}

Gate canonical_gate(const CanonicalPoint &c) {
    const CMat4 id = CMat4::identity();
    auto factor = [&](double angle, const CMat2 &p) {
        return id * std::cos(angle / 2.0) + kron(p, p) * (I * std::sin(angle / 2.0));
    };
    const CMat4 m = factor(c.c1, pauli::x()) * factor(c.c2, pauli::y()) * factor(c.c3, pauli::z());
    std::ostringstream name;
    name.precision(17);
    name << "canonical[" << c.c1 << ", " << c.c2 << ", " << c.c3 << "]";
    return make_gate(m, name.str());
}

CanonicalPoint weyl_reduce(const CanonicalPoint &c) {
    std::array<double, 3> v = {wrap_period(c.c1), wrap_period(c.c2), wrap_period(c.c3)};
    // Each reflection strictly lowers c1 + c2 + c3, so this terminates.
    for (int guard = 0; guard < 16; guard++) {
        std::sort(v.begin(), v.end(), std::greater<>());
        if (v[0] + v[1] <= kPi) {
            break;
        }
        v[0] = kPi - v[0];
        v[1] = kPi - v[1];
    }
    std::sort(v.begin(), v.end(), std::greater<>());
    if (v[2] <= kBaseTol && v[0] > kHalfPi) {
        v[0] = kPi - v[0];
    }
    return CanonicalPoint{v[0], v[1], v[2], true};
}

bool in_weyl_chamber(const CanonicalPoint &c, double tol) {
    return c.c1 - c.c2 >= -tol && c.c2 - c.c3 >= -tol && c.c3 >= -tol && kPi - c.c1 - c.c2 >= -tol;
}

CanonicalPoint canonical_point(const Gate &g, const Tolerance &tol) {
    const LocalInvariants target = invariants_from_unitary(g);
    const Gate normalized = su4_normalize(g);
    const CMat4 ub = bell_transform(normalized);
    const CMat4 m = ub.transpose() * ub;
    // M is unitary to within a few ulps of the gate's own unitarity defect.
    Tolerance eig_tol = tol;
    eig_tol.unitarity = std::max(tol.unitarity, 4.0 * unitarity_defect(g.matrix()) + 1e-12);
    const Eig4 eig = eig4_unitary(m, eig_tol);

    struct Candidate {
        CanonicalPoint point;
        double residual;
    };
    std::vector<Candidate> matches;
    double best = std::numeric_limits<double>::infinity();

    std::array<int, 4> slot = {0, 1, 2, 3};
    do {
        // slot[k] is the eigenphase index assigned to
        // (c1-c2+c3, -c1+c2+c3, c1+c2-c3, -(c1+c2+c3)).
        const double a = eig.phases[slot[0]];
        const double b = eig.phases[slot[1]];
        const double e = eig.phases[slot[2]];
        for (double sign : {1.0, -1.0}) {
            const CanonicalPoint raw{sign * (a + e) / 2.0, sign * (b + e) / 2.0, sign * (a + b) / 2.0};
            const CanonicalPoint p = weyl_reduce(raw);
            const double r = invariants_from_point(p).distance(target);
            best = std::min(best, r);
            if (r <= kExtractionTol) {
                matches.push_back({p, r});
            }
        }
    } while (std::next_permutation(slot.begin(), slot.end()));

    if (matches.empty()) {
        std::ostringstream msg;
        msg << "canonical_point: no candidate reproduces the local invariants (best residual " << best << ")";
        throw ExtractionError(msg.str(), best);
    }
    const auto lex = [](const Candidate &x, const Candidate &y) { return x.point.coords() < y.point.coords(); };
    return std::min_element(matches.begin(), matches.end(), lex)->point;
}

bool is_perfect_entangler(const CanonicalPoint &c) {
    const CanonicalPoint p = weyl_reduce(c);
    return std::all_of(kFacets.begin(), kFacets.end(), [&](const HalfSpace &h) { return h.slack(p) >= -kHullTol; });
}

bool schmidt_number_line(const CanonicalPoint &c) {
    const CanonicalPoint p = weyl_reduce(c);
    return p.c2 <= kLineTol && p.c3 <= kLineTol;
}

}  // namespace weylgate
