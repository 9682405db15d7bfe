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

#include "weylgate/random.h"

namespace weylgate {

namespace {

template <std::size_t N>
CMat<N> haar(Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMat<N> q;
    for (std::size_t r = 0; r < N; r++) {
        for (std::size_t c = 0; c < N; c++) {
            const double re = normal(rng);
            const double im = normal(rng);
            q(r, c) = cplx{re, im};
        }
    }
    for (std::size_t c = 0; c < N; c++) {
        for (std::size_t j = 0; j < c; j++) {
            cplx proj = 0.0;
            for (std::size_t r = 0; r < N; r++) {
                proj += std::conj(q(r, j)) * q(r, c);
            }
            for (std::size_t r = 0; r < N; r++) {
                q(r, c) -= proj * q(r, j);
            }
        }
        double nrm = 0.0;
        for (std::size_t r = 0; r < N; r++) {
            nrm += std::norm(q(r, c));
        }
        nrm = std::sqrt(nrm);
        for (std::size_t r = 0; r < N; r++) {
            q(r, c) /= nrm;
        }
    }
    return q;
}

}  // namespace

CMat2 haar_unitary2(Rng &rng) {
    return haar<2>(rng);
}

CMat4 haar_unitary4(Rng &rng) {
    return haar<4>(rng);
}

CMat4 random_local(Rng &rng) {
    const CMat2 a = haar_unitary2(rng);
    const CMat2 b = haar_unitary2(rng);
    return kron(a, b);
}

Gate haar_gate(Rng &rng) {
    return make_gate(haar_unitary4(rng), "haar");
}

}  // namespace weylgate
