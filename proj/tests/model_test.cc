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

#include "hqcdfs/model.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hqcdfs/subspace.h"
#include "oracle.h"

using namespace hqcdfs;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST(r_op, matches_exchange_oracle) {
    for (int n = 2; n <= 4; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (int l = k + 1; l <= n; ++l) {
                EXPECT_LE((r_op(Axis::kX, k, l, n).matrix() - oracle::r_op('x', k, l, n)).norm(), 1e-15);
                EXPECT_LE((r_op(Axis::kY, k, l, n).matrix() - oracle::r_op('y', k, l, n)).norm(), 1e-15);
            }
        }
    }
}

TEST(r_op, rejects_bad_indices) {
    EXPECT_THROW(r_op(Axis::kX, 2, 1, 3), IndexError);
    EXPECT_THROW(r_op(Axis::kX, 1, 4, 3), IndexError);
    EXPECT_THROW(r_op(Axis::kZ, 1, 2, 3), ConfigError);
}

TEST(assemble, empty_config_is_zero) {
    CouplingConfig c{.n_qubits = 3};
    EXPECT_EQ(assemble(c).matrix(), ComplexMatrix::Zero(8, 8));
}

TEST(assemble_two_body, xz_couplings_give_h1) {
    double phi = 0.9;
    double j = 1.3;
    double c = std::cos(phi / 2);
    double s = std::sin(phi / 2);
    CouplingConfig config{.n_qubits = 3,
                          .two_body = {{1, 2, Axis::kX, j * c},
                                       {1, 2, Axis::kY, -j * s},
                                       {1, 3, Axis::kX, -j * c},
                                       {1, 3, Axis::kY, -j * s}}};
    oracle::Matrix expected =
        j * ((oracle::r_op('x', 1, 2, 3) - oracle::r_op('x', 1, 3, 3)) * c -
             (oracle::r_op('y', 1, 2, 3) + oracle::r_op('y', 1, 3, 3)) * s);
    EXPECT_LE((assemble_two_body(config).matrix() - expected).norm(), 1e-14);
}

TEST(assemble_four_body, cnot_couplings_give_h3) {
    double j = 0.8;
    CouplingConfig config{.n_qubits = 6,
                          .four_body = {{1, 3, 4, 5, AxisPair::kXX, j}, {1, 3, 4, 6, AxisPair::kXX, -j}}};
    oracle::Matrix r13 = oracle::r_op('x', 1, 3, 6);
    oracle::Matrix expected = j * (r13 * oracle::r_op('x', 4, 5, 6) - r13 * oracle::r_op('x', 4, 6, 6));
    EXPECT_LE((assemble_four_body(config).matrix() - expected).norm(), 1e-14);
}

TEST(assemble_four_body, overlapping_pairs_rejected) {
    CouplingConfig config{.n_qubits = 6, .four_body = {{1, 3, 3, 5, AxisPair::kXX, 1.0}}};
    EXPECT_THROW(assemble_four_body(config), ConfigError);
}

TEST(collective_z, eigenvalues) {
    EXPECT_EQ(collective_z(1).matrix(), pauli(Axis::kZ));
    ComplexMatrix z3 = collective_z(3).matrix();
    for (const char* bits : {"100", "010", "001"}) {
        Eigen::VectorXcd v = oracle::basis_state(bits);
        EXPECT_EQ((z3 * v - v).norm(), 0.0) << bits;
    }
    EXPECT_EQ(z3(0, 0), std::complex<double>(3, 0));
}

TEST(GateRecipe, pulse_area_is_enforced) {
    EXPECT_THROW(GateRecipe::make(GateKind::kXZ, 0, 1, 1, {1}), ConfigError);
    EXPECT_NO_THROW(GateRecipe::make(GateKind::kZX, 0, 2, kPi / 2, {1}));
    GateRecipe d = GateRecipe::detuned(GateKind::kXZ, 0, 1, 1, {1});
    EXPECT_TRUE(d.is_detuned());
    EXPECT_GT(std::abs(d.pulse_area_error()), 0.1);
}

TEST(GateRecipe, nominal_durations) {
    EXPECT_NEAR(GateRecipe::xz(0.1, 2.0).duration(), kPi / std::sqrt(2.0) / 2, 1e-15);
    EXPECT_NEAR(GateRecipe::zx(0.1, 0.5).duration(), 2 * kPi, 1e-15);
    EXPECT_NEAR(GateRecipe::cnot().duration(), kPi / std::sqrt(2.0), 1e-15);
}

TEST(GateRecipe, block_validation) {
    EXPECT_THROW(GateRecipe::make(GateKind::kCNOT, 0, 1, kPi / std::sqrt(2.0), {1, 1}), ConfigError);
    EXPECT_THROW(GateRecipe::make(GateKind::kXZ, 0, 1, kPi / std::sqrt(2.0), {1, 2}), ConfigError);
    EXPECT_THROW(GateRecipe::make(GateKind::kXZ, 0, -1, -kPi / std::sqrt(2.0), {1}), ConfigError);
    EXPECT_THROW(recipe_hamiltonian(GateRecipe::xz(0, 1, 2), 1), IndexError);
}

TEST(recipe_hamiltonian, xz_restriction_matches_closed_form) {
    double phi = 1.234;
    HermitianOperator h = recipe_hamiltonian(GateRecipe::xz(phi, 0.7), 1);
    BasisSet b = dfs_basis(LogicalBlock(1), 3);
    EXPECT_LE((restrict(h.matrix(), b) - oracle::h1_block(phi, 0.7)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(recipe_hamiltonian, zx_matches_closed_form) {
    double phi = -0.4;
    double j = 1.5;
    oracle::Matrix expected =
        j * (oracle::r_op('y', 1, 2, 3) * std::sin(phi / 2) - oracle::r_op('x', 1, 3, 3) * std::cos(phi / 2));
    EXPECT_LE((recipe_hamiltonian(GateRecipe::zx(phi, j), 1).matrix() - expected).norm(), 1e-14);
}

TEST(recipe_hamiltonian, xz_on_second_block_uses_qubits_four_to_six) {
    double phi = 0.5;
    double c = std::cos(phi / 2);
    double s = std::sin(phi / 2);
    oracle::Matrix expected = (oracle::r_op('x', 4, 5, 6) - oracle::r_op('x', 4, 6, 6)) * c -
                              (oracle::r_op('y', 4, 5, 6) + oracle::r_op('y', 4, 6, 6)) * s;
    EXPECT_LE((recipe_hamiltonian(GateRecipe::xz(phi, 1, 2), 2).matrix() - expected).norm(), 1e-14);
}

TEST(recipe_hamiltonian, cnot_restriction_on_invariant_basis) {
    double j = 1.0;
    HermitianOperator h = recipe_hamiltonian(GateRecipe::cnot(j), 2);
    BasisSet b = cnot_invariant_basis(LogicalBlock(1), LogicalBlock(2), 6);
    ComplexMatrix r = restrict(h.matrix(), b);
    // Basis order: aa, 00, 01, 10, 11.
    EXPECT_NEAR(std::abs(r(0, 3) - j), 0, 1e-14);
    EXPECT_NEAR(std::abs(r(0, 4) + j), 0, 1e-14);
    EXPECT_EQ(r(3, 4), std::complex<double>(0, 0));
    EXPECT_EQ(r(1, 1), std::complex<double>(0, 0));
    EXPECT_EQ(r(0, 1), std::complex<double>(0, 0));
}

TEST(serialization_names, round_trip) {
    for (GateKind k : {GateKind::kXZ, GateKind::kZX, GateKind::kCNOT}) {
        EXPECT_EQ(parse_gate_kind(gate_kind_name(k)), k);
    }
    for (AxisPair p : {AxisPair::kXX, AxisPair::kXY, AxisPair::kYX, AxisPair::kYY}) {
        EXPECT_EQ(parse_axis_pair(axis_pair_name(p)), p);
    }
    EXPECT_THROW(parse_gate_kind("cz"), ConfigError);
}
