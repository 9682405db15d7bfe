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

#ifndef WEYLGATE_ERRORS_H
#define WEYLGATE_ERRORS_H

#include <stdexcept>
#include <string>

namespace weylgate {

/// Base class of every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (gate JSON, command-line values).
struct ParseError : Error {
    using Error::Error;
};

/// Input parsed fine but violates a data invariant (e.g. a non-unitary gate).
struct ValidationError : Error {
    using Error::Error;
};

/// A function was called outside its documented domain.
struct PreconditionError : Error {
    using Error::Error;
};

/// A scalar argument lies outside its allowed range.
struct DomainError : PreconditionError {
    using PreconditionError::PreconditionError;
};

/// Unknown gate, edge or figure name.
struct LookupError : Error {
    using Error::Error;
};

/// An iterative kernel did not converge or a consistency check failed.
struct NumericalError : Error {
    using Error::Error;
};

/// Canonical-coordinate extraction found no candidate reproducing the invariants.
struct ExtractionError : NumericalError {
    ExtractionError(const std::string &what, double best_residual)
        : NumericalError(what), best_residual(best_residual) {
    }
    double best_residual;
};

/// A numerically persistent Schmidt number of 3, which cannot occur for a unitary.
struct InvariantViolation : NumericalError {
    using NumericalError::NumericalError;
};

}  // namespace weylgate

#endif
