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

#include "weylgate/linops.h"

#include <algorithm>
#include <limits>
#include <numeric>

namespace weylgate {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxJacobiSweeps = 60;
constexpr int kMaxQrIterations = 200;

template <std::size_t N>
double defect(const CMat<N> &m) {
    return (m.adjoint() * m - CMat<N>::identity()).frobenius_norm();
}

// Complex Givens rotation G = [[c, s], [-conj(s), c]] with G [x; y] = [r; 0].
struct Givens {
    double c;
    cplx s;
};

Givens make_givens(cplx x, cplx y) {
    const double ay = std::abs(y);
    if (ay == 0.0) {
        return {1.0, 0.0};
    }
    const double ax = std::abs(x);
    if (ax == 0.0) {
        return {0.0, std::conj(y) / ay};
    }
    const double nrm = std::hypot(ax, ay);
    return {ax / nrm, (x / ax) * std::conj(y) / nrm};
}

}  // namespace

void Tolerance::validate() const {
    if (!(unitarity > 0.0) || !(zero > 0.0) || !(eig > 0.0)) {
        throw PreconditionError("tolerances must be strictly positive");
    }
}

CMat4 kron(const CMat2 &a, const CMat2 &b) {
    CMat4 out;
    for (std::size_t ar = 0; ar < 2; ar++) {
        for (std::size_t ac = 0; ac < 2; ac++) {
            for (std::size_t br = 0; br < 2; br++) {
                for (std::size_t bc = 0; bc < 2; bc++) {
                    out(2 * ar + br, 2 * ac + bc) = a(ar, ac) * b(br, bc);
                }
            }
        }
    }
    return out;
}

cplx det(const CMat2 &m) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

cplx det(const CMat4 &m) {
    CMat4 a = m;
    cplx result = 1.0;
    for (std::size_t col = 0; col < 4; col++) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < 4; r++) {
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) {
                pivot = r;
            }
        }
        if (a(pivot, col) == cplx{0.0, 0.0}) {
            return 0.0;
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < 4; c++) {
                std::swap(a(pivot, c), a(col, c));
            }
            result = -result;
        }
        result *= a(col, col);
        for (std::size_t r = col + 1; r < 4; r++) {
            const cplx f = a(r, col) / a(col, col);
            for (std::size_t c = col; c < 4; c++) {
                a(r, c) -= f * a(col, c);
            }
        }
    }
    return result;
}

double unitarity_defect(const CMat4 &m) {
    return defect(m);
}

double unitarity_defect(const CMat2 &m) {
    return defect(m);
}

cplx hs_inner(const CMat2 &a, const CMat2 &b) {
    cplx s = 0.0;
    for (std::size_t k = 0; k < 4; k++) {
        s += std::conj(a.entries()[k]) * b.entries()[k];
    }
    return s;
}

double principal_angle(double phi) {
    phi = std::remainder(phi, 2.0 * kPi);
    if (phi <= -kPi) {
        phi += 2.0 * kPi;
    }
    return phi;
}

Svd4 svd4(const CMat4 &m) {
    if (!m.is_finite()) {
        throw PreconditionError("svd4: matrix has non-finite entries");
    }

    // Columns of `a` are rotated until mutually orthogonal; `v` accumulates
    // the rotations so that m * v = a throughout.
    CMat4 a = m;
    CMat4 v = CMat4::identity();

    auto col_dot = [&](std::size_t p, std::size_t q) {
        cplx s = 0.0;
        for (std::size_t r = 0; r < 4; r++) {
            s += std::conj(a(r, p)) * a(r, q);
        }
        return s;
    };
    auto col_norm2 = [&](std::size_t p) {
        double s = 0.0;
        for (std::size_t r = 0; r < 4; r++) {
            s += std::norm(a(r, p));
        }
        return s;
    };

    bool converged = false;
    for (int sweep = 0; sweep < kMaxJacobiSweeps && !converged; sweep++) {
        converged = true;
        for (std::size_t p = 0; p < 3; p++) {
            for (std::size_t q = p + 1; q < 4; q++) {
                const double alpha = col_norm2(p);
                const double beta = col_norm2(q);
                const cplx gamma = col_dot(p, q);
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= 4.0 * kEps * std::sqrt(alpha * beta)) {
                    continue;
                }
                converged = false;

                // Rotate the phase of column q so that <a_p, a_q> is real,
                // then apply a real Jacobi rotation.
                const cplx unphase = gamma / g;  // e^{i arg gamma}
                for (std::size_t r = 0; r < 4; r++) {
                    a(r, q) *= std::conj(unphase);
                    v(r, q) *= std::conj(unphase);
                }
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t r = 0; r < 4; r++) {
                    const cplx ap = a(r, p);
                    const cplx aq = a(r, q);
                    a(r, p) = c * ap - s * aq;
                    a(r, q) = s * ap + c * aq;
                    const cplx vp = v(r, p);
                    const cplx vq = v(r, q);
                    v(r, p) = c * vp - s * vq;
                    v(r, q) = s * vp + c * vq;
                }
            }
        }
    }
    if (!converged) {
        throw NumericalError("svd4: one-sided Jacobi did not converge");
    }

    std::array<double, 4> sigma{};
    for (std::size_t p = 0; p < 4; p++) {
        sigma[p] = std::sqrt(col_norm2(p));
    }
    std::array<std::size_t, 4> order{};
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    Svd4 out;
    const double smax = sigma[order[0]];
    const double cutoff = std::max(smax * 1e-13, std::numeric_limits<double>::min());
    std::array<bool, 4> have{};
    for (std::size_t k = 0; k < 4; k++) {
        const std::size_t src = order[k];
        out.singular_values[k] = sigma[src];
        for (std::size_t r = 0; r < 4; r++) {
            out.right(r, k) = v(r, src);
        }
        if (sigma[src] > cutoff) {
            for (std::size_t r = 0; r < 4; r++) {
                out.left(r, k) = a(r, src) / sigma[src];
            }
            have[k] = true;
        }
    }

    // Complete the left basis for (numerically) zero singular values by
    // Gram-Schmidt against the standard basis.
    std::size_t candidate = 0;
    for (std::size_t k = 0; k < 4; k++) {
        if (have[k]) {
            continue;
        }
        while (candidate < 4) {
            std::array<cplx, 4> w{};
            w[candidate++] = 1.0;
            for (int pass = 0; pass < 2; pass++) {
                for (std::size_t j = 0; j < 4; j++) {
                    if (!have[j]) {
                        continue;
                    }
                    cplx proj = 0.0;
                    for (std::size_t r = 0; r < 4; r++) {
                        proj += std::conj(out.left(r, j)) * w[r];
                    }
                    for (std::size_t r = 0; r < 4; r++) {
                        w[r] -= proj * out.left(r, j);
                    }
                }
            }
            double nrm = 0.0;
            for (const auto &x : w) {
                nrm += std::norm(x);
            }
            nrm = std::sqrt(nrm);
            if (nrm > 1e-3) {
                for (std::size_t r = 0; r < 4; r++) {
                    out.left(r, k) = w[r] / nrm;
                }
                have[k] = true;
                break;
            }
        }
        if (!have[k]) {
            throw NumericalError("svd4: could not complete the left singular basis");
        }
    }
    return out;
}

Eig4 eig4_unitary(const CMat4 &m, const Tolerance &tol) {
    if (!m.is_finite()) {
        throw PreconditionError("eig4_unitary: matrix has non-finite entries");
    }
    const double d = unitarity_defect(m);
    if (d > tol.unitarity) {
        throw PreconditionError("eig4_unitary: input is not unitary (||m^dag m - I||_F = " + std::to_string(d) + ")");
    }

    CMat4 h = m;
    CMat4 z = CMat4::identity();

    // Hessenberg reduction with Householder reflectors, accumulated into z.
    for (std::size_t k = 0; k + 2 < 4; k++) {
        std::array<cplx, 4> x{};
        double xnorm2 = 0.0;
        for (std::size_t r = k + 1; r < 4; r++) {
            x[r] = h(r, k);
            xnorm2 += std::norm(x[r]);
        }
        const double xnorm = std::sqrt(xnorm2);
        double tail = 0.0;
        for (std::size_t r = k + 2; r < 4; r++) {
            tail += std::norm(x[r]);
        }
        if (tail == 0.0) {
            continue;
        }
        const double a0 = std::abs(x[k + 1]);
        const cplx ph = a0 == 0.0 ? cplx{1.0, 0.0} : x[k + 1] / a0;
        std::array<cplx, 4> u = x;
        u[k + 1] += ph * xnorm;
        double unorm2 = 0.0;
        for (std::size_t r = k + 1; r < 4; r++) {
            unorm2 += std::norm(u[r]);
        }
        // P = I - 2 u u^dag / |u|^2 (Hermitian and unitary).
        for (std::size_t c = 0; c < 4; c++) {
            cplx s = 0.0;
            for (std::size_t r = k + 1; r < 4; r++) {
                s += std::conj(u[r]) * h(r, c);
            }
            s *= 2.0 / unorm2;
            for (std::size_t r = k + 1; r < 4; r++) {
                h(r, c) -= s * u[r];
            }
        }
        for (std::size_t r = 0; r < 4; r++) {
            cplx s = 0.0;
            cplx sz = 0.0;
            for (std::size_t c = k + 1; c < 4; c++) {
                s += h(r, c) * u[c];
                sz += z(r, c) * u[c];
            }
            s *= 2.0 / unorm2;
            sz *= 2.0 / unorm2;
            for (std::size_t c = k + 1; c < 4; c++) {
                h(r, c) -= s * std::conj(u[c]);
                z(r, c) -= sz * std::conj(u[c]);
            }
        }
        for (std::size_t r = k + 2; r < 4; r++) {
            h(r, k) = 0.0;
        }
    }

    // Shifted QR iterations on the active Hessenberg block [lo, hi].
    int hi = 3;
    int iterations = 0;
    while (hi > 0) {
        int lo = hi;
        while (lo > 0) {
            const double scale = std::abs(h(lo, lo)) + std::abs(h(lo - 1, lo - 1));
            if (std::abs(h(lo, lo - 1)) <= kEps * scale) {
                h(lo, lo - 1) = 0.0;
                break;
            }
            lo--;
        }
        if (lo == hi) {
            hi--;
            iterations = 0;
            continue;
        }
        if (++iterations > kMaxQrIterations) {
            throw NumericalError("eig4_unitary: QR iteration did not converge");
        }

        // Wilkinson shift from the trailing 2x2 block; exceptional shifts
        // break rare cycles.
        const cplx a = h(hi - 1, hi - 1);
        const cplx b = h(hi - 1, hi);
        const cplx c = h(hi, hi - 1);
        const cplx dd = h(hi, hi);
        cplx mu;
        if (iterations % 11 == 10) {
            mu = dd + std::abs(c) * cplx{0.75, 0.43};
        } else {
            const cplx half = 0.5 * (a - dd);
            const cplx root = std::sqrt(half * half + b * c);
            const cplx m1 = 0.5 * (a + dd) + root;
            const cplx m2 = 0.5 * (a + dd) - root;
            mu = std::abs(m1 - dd) < std::abs(m2 - dd) ? m1 : m2;
        }

        std::array<Givens, 3> rot{};
        for (int i = 0; i < 4; i++) {
            h(i, i) -= mu;
        }
        for (int k = lo; k < hi; k++) {
            const Givens g = make_givens(h(k, k), h(k + 1, k));
            rot[k - lo] = g;
            for (std::size_t col = 0; col < 4; col++) {
                const cplx x = h(k, col);
                const cplx y = h(k + 1, col);
                h(k, col) = g.c * x + g.s * y;
                h(k + 1, col) = -std::conj(g.s) * x + g.c * y;
            }
        }
        for (int k = lo; k < hi; k++) {
            const Givens g = rot[k - lo];
            for (std::size_t row = 0; row < 4; row++) {
                const cplx x = h(row, k);
                const cplx y = h(row, k + 1);
                h(row, k) = g.c * x + std::conj(g.s) * y;
                h(row, k + 1) = -g.s * x + g.c * y;
                const cplx zx = z(row, k);
                const cplx zy = z(row, k + 1);
                z(row, k) = g.c * zx + std::conj(g.s) * zy;
                z(row, k + 1) = -g.s * zx + g.c * zy;
            }
        }
        for (int i = 0; i < 4; i++) {
            h(i, i) += mu;
        }
    }

    std::array<double, 4> phases{};
    for (std::size_t k = 0; k < 4; k++) {
        phases[k] = principal_angle(std::arg(h(k, k)));
    }
    std::array<std::size_t, 4> order{};
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return phases[x] > phases[y]; });

    Eig4 out;
    for (std::size_t k = 0; k < 4; k++) {
        out.phases[k] = phases[order[k]];
        for (std::size_t r = 0; r < 4; r++) {
            out.vectors(r, k) = z(r, order[k]);
        }
    }
    return out;
}

}  // namespace weylgate
