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

#include "weylgate/schmidt.h"

#include <gtest/gtest.h>

#include <cmath>

#include "test_util.h"
#include "weylgate/canonical.h"
#include "weylgate/invariants.h"
#include "weylgate/random.h"

using namespace weylgate;
using weylgate::testing::max_abs_diff;
using weylgate::testing::random_chamber_point;

namespace {

constexpr cplx I{0.0, 1.0};
const double kRh = 1.0 / std::sqrt(2.0);

}  // namespace

TEST(z_from_point, examples) {
    const ZCoefficients o = z_from_point({0.0, 0.0, 0.0});
    EXPECT_LT(std::abs(o.z[0] - 1.0), 1e-15);
    EXPECT_LT(std::abs(o.z[1]) + std::abs(o.z[2]) + std::abs(o.z[3]), 1e-15);

    const ZCoefficients l = z_from_point({kPi / 2, 0.0, 0.0});
    EXPECT_LT(std::abs(l.z[0] - kRh), 1e-15);
    EXPECT_LT(std::abs(l.z[1] - I * kRh), 1e-15);
    EXPECT_LT(std::abs(l.z[2]) + std::abs(l.z[3]), 1e-15);

    EXPECT_LT(max_abs_diff(z_from_point({kPi / 2, kPi / 2, kPi / 2}).sorted_moduli(), {0.5, 0.5, 0.5, 0.5}), 1e-15);

    const double c = std::cos(kPi / 8);
    const double s = std::sin(kPi / 8);
    EXPECT_LT(max_abs_diff(z_from_point({kPi / 4, kPi / 4, 0.0}).sorted_moduli(), {c * c, s * c, s * c, s * s}),
              1e-15);
}

TEST(z_from_point, expands_the_canonical_gate) {
    // sum z_l P_l (x) P_l reproduces the matrix exponential.
    Rng rng(weylgate::testing::kSeed);
    for (int t = 0; t < 200; t++) {
        const CanonicalPoint c = random_chamber_point(rng);
        const ZCoefficients z = z_from_point(c);
        const CMat4 sum = CMat4::identity() * z.z[0] + kron(pauli::x(), pauli::x()) * z.z[1] +
                          kron(pauli::y(), pauli::y()) * z.z[2] + kron(pauli::z(), pauli::z()) * z.z[3];
        EXPECT_LT(max_abs_diff(sum, weylgate::testing::canonical_by_series(c)), 1e-12);
        double norm = 0.0;
        for (const auto &x : z.z) {
            norm += std::norm(x);
        }
        EXPECT_NEAR(norm, 1.0, 1e-12);
    }
}

TEST(schmidt_decompose, examples) {
    const SchmidtData id = schmidt_decompose(catalog("identity"));
    EXPECT_LT(max_abs_diff(id.coefficients, {1, 0, 0, 0}), 1e-14);
    EXPECT_EQ(id.schmidt_number, 1);
    EXPECT_NEAR(id.strength, 0.0, 1e-14);

    const SchmidtData cnot = schmidt_decompose(catalog("cnot"));
    EXPECT_LT(max_abs_diff(cnot.coefficients, {kRh, kRh, 0, 0}), 1e-14);
    EXPECT_EQ(cnot.schmidt_number, 2);
    EXPECT_NEAR(cnot.strength, 1.0, 1e-14);

    const SchmidtData swap = schmidt_decompose(catalog("swap"));
    EXPECT_LT(max_abs_diff(swap.coefficients, {0.5, 0.5, 0.5, 0.5}), 1e-14);
    EXPECT_EQ(swap.schmidt_number, 4);
    EXPECT_NEAR(swap.strength, 2.0, 1e-14);

    // Frozen from a numpy SVD of the realigned matrix.
    const SchmidtData root = schmidt_decompose(catalog("sqrt_swap"));
    EXPECT_LT(max_abs_diff(root.coefficients, {0.790569415042095, 0.353553390593274, 0.353553390593274,
                                               0.353553390593274}),
              1e-12);
}

TEST(schmidt_decompose, reconstruction_and_orthonormality) {
    Rng rng(weylgate::testing::kSeed + 1);
    for (int t = 0; t < 200; t++) {
        const Gate g = haar_gate(rng);
        const SchmidtData d = schmidt_decompose(g);
        EXPECT_LT(max_abs_diff(reconstruct(d), g.matrix()), 1e-10);
        double sq = 0.0;
        for (int l = 0; l < 4; l++) {
            sq += d.coefficients[l] * d.coefficients[l];
            for (int m = 0; m < 4; m++) {
                const double delta = l == m ? 1.0 : 0.0;
                EXPECT_LT(std::abs(hs_inner(d.factors_a[l], d.factors_a[m]) - delta), 1e-10);
                EXPECT_LT(std::abs(hs_inner(d.factors_b[l], d.factors_b[m]) - delta), 1e-10);
            }
        }
        EXPECT_NEAR(sq, 1.0, 1e-10);
    }
}

TEST(schmidt_decompose, reconstruction_of_named_gates) {
    for (auto n : catalog_names()) {
        const Gate g = catalog(n);
        EXPECT_LT(max_abs_diff(reconstruct(schmidt_decompose(g)), g.matrix()), 1e-10) << n;
    }
}

TEST(schmidt_decompose, matches_gram_oracle) {
    Rng rng(weylgate::testing::kSeed + 2);
    for (int t = 0; t < 200; t++) {
        const Gate g = haar_gate(rng);
        EXPECT_LT(max_abs_diff(schmidt_decompose(g).coefficients, weylgate::testing::schmidt_by_gram(g.matrix())),
                  1e-7);
    }
}

TEST(schmidt_decompose, analytic_matches_numeric) {
    Rng rng(weylgate::testing::kSeed + 3);
    for (int t = 0; t < 1000; t++) {
        const CanonicalPoint c = random_chamber_point(rng);
        const Gate g = make_gate(weylgate::testing::canonical_by_series(c));
        EXPECT_LT(max_abs_diff(z_from_point(c).sorted_moduli(), schmidt_decompose(g).coefficients), 1e-9);
    }
}

TEST(schmidt_decompose, local_invariance) {
    Rng rng(weylgate::testing::kSeed + 4);
    for (int t = 0; t < 500; t++) {
        const Gate g = haar_gate(rng);
        const Gate h = make_gate(random_local(rng) * g.matrix() * random_local(rng));
        EXPECT_LT(max_abs_diff(schmidt_decompose(g).coefficients, schmidt_decompose(h).coefficients), 1e-9);
    }
}

TEST(schmidt_decompose, same_coefficients_without_equivalence) {
    const double a = 0.5;
    const CanonicalPoint oa3{kPi * a / 2, kPi * a / 2, kPi * a / 2};
    const CanonicalPoint a1a3{kPi - kPi * a / 2, kPi * a / 2, kPi * a / 2};
    EXPECT_LT(max_abs_diff(z_from_point(oa3).sorted_moduli(), z_from_point(a1a3).sorted_moduli()), 1e-12);
    // Frozen: G1 = +i/4 and -i/4.
    const LocalInvariants u = invariants_from_point(oa3);
    const LocalInvariants v = invariants_from_point(a1a3);
    EXPECT_NEAR(u.g1.imag(), 0.25, 1e-14);
    EXPECT_NEAR(v.g1.imag(), -0.25, 1e-14);
    EXPECT_GT(std::abs(u.g1 - v.g1), 1e-3);
}

TEST(schmidt_strength, examples) {
    EXPECT_EQ(schmidt_strength({1, 0, 0, 0}), 0.0);
    EXPECT_NEAR(schmidt_strength({kRh, kRh, 0, 0}), 1.0, 1e-15);
    EXPECT_NEAR(schmidt_strength({0.5, 0.5, 0.5, 0.5}), 2.0, 1e-15);
    EXPECT_NEAR(schmidt_strength({1 - 1e-200, 1e-160, 0, 0}), 0.0, 1e-15);
}

TEST(schmidt_strength, errors) {
    EXPECT_THROW(schmidt_strength({0.5, 0.5, 0.5, 0.4}), PreconditionError);
    EXPECT_THROW(schmidt_strength({-1, 0, 0, 0}), PreconditionError);
}

TEST(schmidt_strength, bounds) {
    Rng rng(weylgate::testing::kSeed + 5);
    for (int t = 0; t < 1000; t++) {
        const double k = schmidt_strength(z_from_point(random_chamber_point(rng)).sorted_moduli());
        EXPECT_GE(k, 0.0);
        EXPECT_LE(k, 2.0);
    }
}

TEST(schmidt_number_from, counts_and_escape_hatch) {
    EXPECT_EQ(schmidt_number_from({1, 0, 0, 0}), 1);
    EXPECT_EQ(schmidt_number_from({kRh, kRh, 1e-12, 0}), 2);
    EXPECT_EQ(schmidt_number_from({0.5, 0.5, 0.5, 0.5}), 4);
    // Three above 1e-8 but the fourth lies between the retry tolerances.
    const double s4 = 5e-9;
    const double s = std::sqrt((1 - s4 * s4) / 3);
    EXPECT_EQ(schmidt_number_from({s, s, s, s4}), 4);
    EXPECT_THROW(schmidt_number_from({std::sqrt(1.0 / 3), std::sqrt(1.0 / 3), std::sqrt(1.0 / 3), 0}),
                 InvariantViolation);
}

TEST(schmidt_number_of, classification) {
    EXPECT_EQ(schmidt_number_of(catalog("identity")), 1);
    Rng rng(weylgate::testing::kSeed + 6);
    std::uniform_real_distribution<double> th(1e-3, kPi / 2);
    for (int t = 0; t < 200; t++) {
        const Gate g = make_gate(random_local(rng) * canonical_gate({th(rng), 0, 0}).matrix() * random_local(rng));
        EXPECT_EQ(schmidt_number_of(g), 2);
    }
    for (int t = 0; t < 2000; t++) {
        const int n = schmidt_number_of(haar_gate(rng));
        EXPECT_TRUE(n == 1 || n == 2 || n == 4);
    }
}

TEST(controlled_unitary_gate, examples) {
    EXPECT_LT(max_abs_diff(controlled_unitary_gate(0.0).matrix(), CMat4::identity()), 1e-15);
    const LocalInvariants half = invariants_from_unitary(controlled_unitary_gate(0.5));
    EXPECT_LT(half.distance({0.0, 1.0}), 1e-14);
    EXPECT_TRUE(locally_equivalent(controlled_unitary_gate(0.5), catalog("cnot")));
    const Gate one = controlled_unitary_gate(1.0);
    EXPECT_LT(max_abs_diff(one.matrix(), kron(pauli::x(), pauli::x()) * I), 1e-15);
    EXPECT_LT(invariants_from_unitary(one).distance({1.0, 3.0}), 1e-14);
}

TEST(controlled_unitary_gate, invariants_follow_theta) {
    for (double p : {0.1, 0.25, 0.7, 0.9}) {
        const double theta = 2 * std::asin(std::sqrt(p));
        const LocalInvariants v = invariants_from_unitary(controlled_unitary_gate(p));
        const double g1 = std::cos(theta) * std::cos(theta);
        EXPECT_LT(v.distance({g1, 2 * g1 + 1}), 1e-12);
    }
}

TEST(controlled_unitary_gate, domain) {
    EXPECT_THROW(controlled_unitary_gate(-0.01), DomainError);
    EXPECT_THROW(controlled_unitary_gate(1.01), DomainError);
    EXPECT_THROW(controlled_unitary_gate(std::nan("")), DomainError);
}
