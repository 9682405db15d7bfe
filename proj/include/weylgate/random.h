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

#ifndef WEYLGATE_RANDOM_H
#define WEYLGATE_RANDOM_H

#include <random>

#include "weylgate/gates.h"
#include "weylgate/linops.h"

namespace weylgate {

using Rng = std::mt19937_64;

/// Haar-distributed unitaries: Gram-Schmidt QR of a complex Ginibre matrix.
/// Modified Gram-Schmidt leaves R with a positive real diagonal, which is the
/// phase correction that makes Q exactly Haar.
CMat2 haar_unitary2(Rng &rng);
CMat4 haar_unitary4(Rng &rng);

/// k_A (x) k_B with independent Haar factors.
CMat4 random_local(Rng &rng);

/// Haar-random two-qubit gate (not phase normalized).
Gate haar_gate(Rng &rng);

}  // namespace weylgate

#endif
