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

#ifndef WEYLGATE_POINT_H
#define WEYLGATE_POINT_H

#include <array>

namespace weylgate {

/// Coordinates [c1, c2, c3] (radians) of the nonlocal core
/// exp(i/2 (c1 XX + c2 YY + c3 ZZ)).
///
/// `chamber_reduced` is set only by weyl_reduce and canonical_point; such
/// points satisfy c1 >= c2 >= c3 >= 0, c1 + c2 <= pi, and c1 <= pi/2 when
/// c3 = 0.
struct CanonicalPoint {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
    bool chamber_reduced = false;

    std::array<double, 3> coords() const {
        return {c1, c2, c3};
    }
};

}  // namespace weylgate

#endif
