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

#ifndef WEYLGATE_LINOPS_H
#define WEYLGATE_LINOPS_H

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>

#include "weylgate/errors.h"

namespace weylgate {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Numerical tolerances shared by the validation and classification code.
struct Tolerance {
    double unitarity = 1e-10;  // bound on ||U^dag U - I||_F
    double zero = 1e-8;        // a Schmidt coefficient at or below this counts as zero
    double eig = 1e-9;         // eigenpair residual bound

    /// Throws PreconditionError unless every field is strictly positive.
    void validate() const;
};

/// Dense row-major N x N complex matrix with value semantics.
///
/// Entries are finite by construction: the checked constructors reject NaN and
/// infinity. Arithmetic results are not re-checked.
template <std::size_t N>
class CMat {
   public:
    static constexpr std::size_t kDim = N;

    CMat() {
        data_.fill(cplx{0.0, 0.0});
    }

    /// Row-major entries; throws PreconditionError on a non-finite value.
    explicit CMat(const std::array<cplx, N * N> &entries) : data_(entries) {
        check_finite();
    }

    CMat(std::initializer_list<cplx> entries) {
        if (entries.size() != N * N) {
            throw PreconditionError("matrix initializer has " + std::to_string(entries.size()) +
                                    " entries, expected " + std::to_string(N * N));
        }
        std::size_t k = 0;
        for (const auto &e : entries) {
            data_[k++] = e;
        }
        check_finite();
    }

    static CMat identity() {
        CMat m;
        for (std::size_t i = 0; i < N; i++) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static CMat diagonal(const std::array<cplx, N> &d) {
        CMat m;
        for (std::size_t i = 0; i < N; i++) {
            m(i, i) = d[i];
        }
        return m;
    }

    cplx &operator()(std::size_t r, std::size_t c) {
        return data_[r * N + c];
    }
    const cplx &operator()(std::size_t r, std::size_t c) const {
        return data_[r * N + c];
    }

    const std::array<cplx, N * N> &entries() const {
        return data_;
    }

    CMat adjoint() const {
        CMat out;
        for (std::size_t r = 0; r < N; r++) {
            for (std::size_t c = 0; c < N; c++) {
                out(c, r) = std::conj((*this)(r, c));
            }
        }
        return out;
    }

    CMat transpose() const {
        CMat out;
        for (std::size_t r = 0; r < N; r++) {
            for (std::size_t c = 0; c < N; c++) {
                out(c, r) = (*this)(r, c);
            }
        }
        return out;
    }

    CMat conj() const {
        CMat out;
        for (std::size_t k = 0; k < N * N; k++) {
            out.data_[k] = std::conj(data_[k]);
        }
        return out;
    }

    cplx trace() const {
        cplx t = 0.0;
        for (std::size_t i = 0; i < N; i++) {
            t += (*this)(i, i);
        }
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto &e : data_) {
            s += std::norm(e);
        }
        return std::sqrt(s);
    }

    bool is_finite() const {
        for (const auto &e : data_) {
            if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
                return false;
            }
        }
        return true;
    }

    CMat &operator+=(const CMat &o) {
        for (std::size_t k = 0; k < N * N; k++) {
            data_[k] += o.data_[k];
        }
        return *this;
    }
    CMat &operator-=(const CMat &o) {
        for (std::size_t k = 0; k < N * N; k++) {
            data_[k] -= o.data_[k];
        }
        return *this;
    }
    CMat &operator*=(cplx s) {
        for (auto &e : data_) {
            e *= s;
        }
        return *this;
    }

    friend CMat operator+(CMat a, const CMat &b) {
        return a += b;
    }
    friend CMat operator-(CMat a, const CMat &b) {
        return a -= b;
    }
    friend CMat operator*(CMat a, cplx s) {
        return a *= s;
    }
    friend CMat operator*(cplx s, CMat a) {
        return a *= s;
    }
    friend CMat operator*(const CMat &a, const CMat &b) {
        CMat out;
        for (std::size_t r = 0; r < N; r++) {
            for (std::size_t k = 0; k < N; k++) {
                const cplx v = a(r, k);
                for (std::size_t c = 0; c < N; c++) {
                    out(r, c) += v * b(k, c);
                }
            }
        }
        return out;
    }
    friend bool operator==(const CMat &a, const CMat &b) {
        return a.data_ == b.data_;
    }

   private:
    void check_finite() const {
        if (!is_finite()) {
            throw PreconditionError("matrix has non-finite entries");
        }
    }

    std::array<cplx, N * N> data_;
};

using CMat2 = CMat<2>;
using CMat4 = CMat<4>;

/// Kronecker product with the first factor on the most significant index.
CMat4 kron(const CMat2 &a, const CMat2 &b);

/// Determinant by partial-pivot elimination.
cplx det(const CMat4 &m);
cplx det(const CMat2 &m);

/// ||m^dag m - I||_F.
double unitarity_defect(const CMat4 &m);
double unitarity_defect(const CMat2 &m);

/// Hilbert-Schmidt inner product tr(a^dag b).
cplx hs_inner(const CMat2 &a, const CMat2 &b);

/// Maps an angle onto the principal branch (-pi, pi].
double principal_angle(double phi);

struct Svd4 {
    std::array<double, 4> singular_values;  // descending, nonnegative
    CMat4 left;                             // unitary
    CMat4 right;                            // unitary; m = left * diag(s) * right^dag
};

/// Singular value decomposition of a 4x4 complex matrix (one-sided Jacobi).
///
/// Throws PreconditionError for non-finite input and NumericalError when the
/// sweeps fail to converge.
Svd4 svd4(const CMat4 &m);

struct Eig4 {
    std::array<double, 4> phases;  // descending, each in (-pi, pi]
    CMat4 vectors;                 // column k is the eigenvector for phases[k]
};

/// Eigendecomposition of a 4x4 unitary via the shifted complex QR algorithm.
///
/// The input must be unitary within tol.unitarity (PreconditionError
/// otherwise). Inside a degenerate eigenspace the returned basis is arbitrary.
Eig4 eig4_unitary(const CMat4 &m, const Tolerance &tol = {});

}  // namespace weylgate

#endif
