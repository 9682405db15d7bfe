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

#ifndef WEYLGATE_GATES_H
#define WEYLGATE_GATES_H

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"
#include "weylgate/linops.h"

namespace weylgate {

/// A two-qubit unitary on A (x) B. Qubit A is the most significant bit of the
/// computational-basis index.
class Gate {
   public:
    const CMat4 &matrix() const {
        return matrix_;
    }
    const std::optional<std::string> &name() const {
        return name_;
    }
    bool phase_normalized() const {
        return phase_normalized_;
    }

    /// A copy carrying a different label.
    Gate renamed(std::optional<std::string> name) const;

   private:
    Gate(CMat4 matrix, std::optional<std::string> name, bool phase_normalized)
        : matrix_(matrix), name_(std::move(name)), phase_normalized_(phase_normalized) {
    }

    friend Gate make_gate(const CMat4 &, std::optional<std::string>, const Tolerance &);
    friend Gate su4_normalize(const Gate &);

    CMat4 matrix_;
    std::optional<std::string> name_;
    bool phase_normalized_ = false;
};

/// Validates unitarity and wraps the matrix. Throws ValidationError, quoting
/// ||U^dag U - I||_F, when the defect exceeds tol.unitarity.
Gate make_gate(const CMat4 &matrix, std::optional<std::string> name = std::nullopt, const Tolerance &tol = {});

/// Multiplies by e^{i alpha}, alpha = -arg(det U)/4 on the principal branch, so
/// that det = 1. The remaining fourth-root-of-unity freedom is left alone.
Gate su4_normalize(const Gate &g);

namespace pauli {
const CMat2 &identity();
const CMat2 &x();
const CMat2 &y();
const CMat2 &z();
}  // namespace pauli

/// {I, X, Y, Z} / sqrt(2), orthonormal under tr(a^dag b).
const std::array<CMat2, 4> &pauli_basis();

/// The magic (Bell) basis change Q; its columns are the four Bell states.
const CMat4 &magic_basis();

/// U_B = Q^T U Q. Note the plain transpose: conj(Q) U_B Q^dag recovers U.
CMat4 bell_transform(const Gate &g);

/// Named gates: identity, cnot, cz, swap, dcnot, iswap, sqrt_swap, sqrt_iswap.
Gate catalog(std::string_view name);
std::span<const std::string_view> catalog_names();

/// Gate JSON: a 4 x 4 array of [re, im] pairs, or an object
/// {"name": ..., "matrix": <that array>}.
Gate gate_from_json(const nlohmann::json &j, const Tolerance &tol = {});
nlohmann::json gate_to_json(const Gate &g);

/// Reads and validates a gate file; ParseError on I/O or syntax problems.
Gate read_gate_file(const std::string &path, const Tolerance &tol = {});

}  // namespace weylgate

#endif
