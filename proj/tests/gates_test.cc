// Copyright 2026 The hqcdfs Authors
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

#include "hqcdfs/gates.h"

#include <gtest/gtest.h>

#include <numbers>

#include "oracle.h"

using namespace hqcdfs;

namespace {

constexpr double kPi = std::numbers::pi;
const std::complex<double> kI{0, 1};

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(targets, uxz) {
    EXPECT_LE(max_abs(target_uxz(0).matrix() - pauli(Axis::kX)), 1e-15);
    EXPECT_LE(max_abs(target_uxz(kPi / 2).matrix() - pauli(Axis::kY)), 1e-15);
    for (double phi : {0.0, 0.3, 2.0, -1.0}) {
        EXPECT_NEAR(std::abs(target_uxz(phi).matrix().determinant() + 1.0), 0, 1e-15);
    }
}

TEST(targets, uzx) {
    EXPECT_LE(max_abs(target_uzx(0).matrix() - pauli(Axis::kZ)), 1e-15);
    ComplexMatrix expected(2, 2);
    expected << 0.5, kI * std::sqrt(3.0) / 2.0, -kI * std::sqrt(3.0) / 2.0, -0.5;
    EXPECT_LE(max_abs(target_uzx(kPi / 3).matrix() - expected), 1e-15);
    ComplexMatrix u = target_uzx(0.8).matrix();
    EXPECT_LE(max_abs(u * u - ComplexMatrix::Identity(2, 2)), 1e-15);
}

TEST(targets, cnot) {
    ComplexMatrix c = target_cnot().matrix();
    EXPECT_EQ(c(3, 2), std::complex<double>(1, 0));
    EXPECT_EQ(c(0, 0), std::complex<double>(1, 0));
    EXPECT_EQ(c * c, ComplexMatrix::Identity(4, 4));
}

TEST(realize, xz_invariant_block) {
    double phi = 0.3;
    GateRealization g = realize(GateRecipe::xz(phi), 1, 0);
    EXPECT_LE(g.distance, 1e-10);
    EXPECT_LE(max_abs(g.invariant_block - oracle::u1_block(phi)), 1e-10);
    EXPECT_LE(g.invariance, 1e-10);
    EXPECT_FALSE(g.holonomy.reconstruction_distance.has_value());
}

TEST(realize, zx_invariant_block) {
    double phi = -2.1;
    GateRealization g = realize(GateRecipe::zx(phi, 0.4), 1, 0);
    EXPECT_LE(g.distance, 1e-10);
    EXPECT_LE(max_abs(g.invariant_block - oracle::u2_block(phi)), 1e-10);
}

TEST(realize, cnot_invariant_block) {
    GateRealization g = realize(GateRecipe::cnot(), 2, 0);
    EXPECT_LE(g.distance, 1e-10);
    EXPECT_LE(max_abs(g.invariant_block - oracle::u3_block()), 1e-10);
    EXPECT_EQ(g.propagator.dim(), 64);
}

TEST(realize, detuned_reports_distance) {
    double area = kPi / std::sqrt(2.0) * 1.05;
    GateRealization g = realize(GateRecipe::detuned(GateKind::kXZ, 0.3, 1, area, {1}), 1, 0);
    EXPECT_GT(g.distance, 1e-3);
    EXPECT_LE(g.invariance, 1e-10);
}

TEST(rotation_sequence, z_and_x) {
    double theta = 0.9;
    auto z = rotation_sequence(Axis::kZ, theta);
    ASSERT_EQ(z.size(), 2u);
    EXPECT_EQ(z[0].kind(), GateKind::kXZ);
    EXPECT_NEAR(z[0].phase(), -theta / 2, 1e-15);
    EXPECT_LE(phase_aligned_distance(compose_targets(z), rz(theta)), 1e-12);
    auto x = rotation_sequence(Axis::kX, theta);
    EXPECT_LE(phase_aligned_distance(compose_targets(x), rx(theta)), 1e-12);
    EXPECT_LE(phase_aligned_frobenius(compose_realized(x, 1), rx(theta).matrix()), 1e-9);
    EXPECT_THROW(rotation_sequence(Axis::kY, theta), ConfigError);
}

TEST(rotation_sequence, zero_angle_is_identity) {
    auto z = rotation_sequence(Axis::kZ, 0);
    EXPECT_LE(phase_aligned_distance(compose_targets(z), UnitaryOperator::identity(2)), 1e-15);
}

TEST(euler_compose, axis_aligned_z) {
    auto seq = euler_compose(rz(0.7));
    ASSERT_EQ(seq.size(), 2u);
    EXPECT_LE(phase_aligned_distance(compose_targets(seq), rz(0.7)), 1e-12);
}

TEST(euler_compose, hadamard_and_sigma_y) {
    ComplexMatrix h(2, 2);
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    // Independent check: Rz(π/2)Rx(π/2)Rz(π/2) equals H up to phase.
    EXPECT_LE(oracle::brute_phase_distance((rz(kPi / 2) * rx(kPi / 2) * rz(kPi / 2)).matrix(), h), 1e-6);
    for (const ComplexMatrix& t : {h, ComplexMatrix(pauli(Axis::kY))}) {
        UnitaryOperator target(t);
        auto seq = euler_compose(target);
        EXPECT_LE(phase_aligned_frobenius(compose_realized(seq, 1), t), 1e-8);
    }
}

TEST(euler_zxz, branch_ranges) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 50; ++i) {
        UnitaryOperator u(oracle::random_unitary(rng, 2));
        EulerAngles e = euler_zxz(u);
        EXPECT_GE(e.beta, 0);
        EXPECT_LE(e.beta, kPi);
        EXPECT_GT(e.alpha, -kPi - 1e-12);
        EXPECT_LE(e.alpha, kPi + 1e-12);
        EXPECT_GT(e.gamma, -kPi - 1e-12);
        EXPECT_LE(e.gamma, kPi + 1e-12);
        EXPECT_LE(phase_aligned_distance(rz(e.alpha) * rx(e.beta) * rz(e.gamma), u), 1e-10);
    }
}

TEST(euler_zxz, degenerate_beta_pi) {
    EulerAngles e = euler_zxz(UnitaryOperator(pauli(Axis::kX)));
    EXPECT_NEAR(e.beta, kPi, 1e-12);
    EXPECT_EQ(e.gamma, 0);
}

TEST(no_go_certificate, witness_and_counts) {
    NoGoReport r = no_go_certificate(200, 7);
    EXPECT_EQ(r.trials, 200);
    EXPECT_EQ(r.trivial + r.nontrivial, 200);
    EXPECT_EQ(r.counterexamples, 0);
    EXPECT_EQ(r.nontrivial_without_defect, 0);
    EXPECT_EQ(r.witness_restricted, pauli(Axis::kX));
    EXPECT_NEAR(r.witness_transport_defect, 1.0, 1e-12);
    EXPECT_GT(r.trivial, 0);
}

TEST(no_go_certificate, deterministic) {
    NoGoReport a = no_go_certificate(50, 3);
    NoGoReport b = no_go_certificate(50, 3);
    EXPECT_EQ(a.trivial, b.trivial);
    EXPECT_EQ(a.min_nontrivial_transport_defect, b.min_nontrivial_transport_defect);
}
