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

#include "hqcdfs/subspace.h"

#include <gtest/gtest.h>

#include <numbers>

#include "hqcdfs/model.h"
#include "oracle.h"

using namespace hqcdfs;

TEST(computational_state, bit_order) {
    StateVector v = computational_state("100");
    EXPECT_EQ(v(4), std::complex<double>(1, 0));
    EXPECT_THROW(computational_state("10a"), ConfigError);
}

TEST(BasisSet, validates_orthonormality_and_labels) {
    StateVector a = computational_state("01");
    StateVector b = computational_state("10");
    EXPECT_NO_THROW(BasisSet(2, {a, b}, {"a", "b"}));
    EXPECT_THROW(BasisSet(2, {a, a}, {"a", "b"}), ConfigError);
    EXPECT_THROW(BasisSet(2, {a, b}, {"a", "a"}), ConfigError);
    EXPECT_THROW(BasisSet(2, {a * 2.0}, {"a"}), ConfigError);
    EXPECT_THROW(BasisSet(3, {a}, {"a"}), ShapeError);
}

TEST(dfs_basis, labels_and_vectors) {
    BasisSet b = dfs_basis(LogicalBlock(1), 3);
    ASSERT_EQ(b.size(), 3);
    EXPECT_EQ(b.labels(), (std::vector<std::string>{"a", "0L", "1L"}));
    EXPECT_EQ(b.vectors()[0], oracle::basis_state("100"));
    EXPECT_EQ(b.vectors()[1], oracle::basis_state("010"));
    EXPECT_EQ(b.vectors()[2], oracle::basis_state("001"));
}

TEST(dfs_basis, spectator_blocks) {
    BasisSet zero = dfs_basis(LogicalBlock(2), 6);
    EXPECT_EQ(zero.vectors()[0], oracle::basis_state("010100"));
    BasisSet one = dfs_basis(LogicalBlock(2), 6, BlockState::kOne);
    EXPECT_EQ(one.vectors()[2], oracle::basis_state("001001"));
    EXPECT_THROW(dfs_basis(LogicalBlock(3), 6), IndexError);
}

TEST(cnot_invariant_basis, order) {
    BasisSet b = cnot_invariant_basis(LogicalBlock(1), LogicalBlock(2), 6);
    EXPECT_EQ(b.labels(), (std::vector<std::string>{"aa", "00", "01", "10", "11"}));
    EXPECT_EQ(b.vectors()[0], oracle::basis_state("100100"));
    EXPECT_EQ(b.vectors()[3], oracle::basis_state("001010"));
}

TEST(logical_basis, two_block_order) {
    std::vector<LogicalBlock> blocks = {LogicalBlock(1), LogicalBlock(2)};
    BasisSet b = logical_basis(blocks, 6);
    EXPECT_EQ(b.labels(), (std::vector<std::string>{"00", "01", "10", "11"}));
    EXPECT_EQ(b.vectors()[1], oracle::basis_state("010001"));
}

TEST(restrict, projector_and_rotation) {
    BasisSet b = dfs_basis(LogicalBlock(1), 3);
    EXPECT_EQ(restrict(b.projector(), b), ComplexMatrix::Identity(3, 3));
    ComplexMatrix x3 = ComplexMatrix::Zero(3, 3);
    x3(0, 1) = x3(1, 0) = x3(2, 2) = 1;
    BasisSet r = b.rotated(x3);
    EXPECT_EQ(r.vectors()[0], b.vectors()[1]);
}

TEST(invariance_defect, leaking_unitary) {
    BasisSet b = dfs_basis(LogicalBlock(1), 3);
    // σ^x on qubit 1 takes |100⟩ to |000⟩, outside S^D.
    EXPECT_NEAR(invariance_defect(pauli_on(Axis::kX, 1, 3).matrix(), b), std::sqrt(3.0), 1e-14);
    EXPECT_EQ(invariance_defect(ComplexMatrix::Identity(8, 8), b), 0.0);
}

TEST(leakage_profile, zero_hamiltonian) {
    std::vector<LogicalBlock> one = {LogicalBlock(1)};
    auto profile = leakage_profile(HermitianOperator::zero(8), logical_basis(one, 3), dfs_basis(LogicalBlock(1), 3),
                                   1.0, 4);
    ASSERT_EQ(profile.size(), 5u);
    for (const auto& s : profile) {
        EXPECT_EQ(s.inner, 0.0);
        EXPECT_EQ(s.outer, 0.0);
    }
}

TEST(leakage_profile, rabi_oracle) {
    double j = 1.0;
    GateRecipe r = GateRecipe::xz(0, j);
    std::vector<LogicalBlock> one = {LogicalBlock(1)};
    auto profile = leakage_profile(recipe_hamiltonian(r, 1), logical_basis(one, 3), dfs_basis(LogicalBlock(1), 3),
                                   r.duration(), 8);
    for (const auto& s : profile) {
        // Each logical state is half bright, so at most half its weight reaches |a⟩.
        double expected = 0.5 * (1 - oracle::bright_population(std::sqrt(2.0) * j, s.time));
        EXPECT_NEAR(s.inner, expected, 1e-12) << s.time;
        EXPECT_LE(s.outer, 1e-10);
    }
    EXPECT_NEAR(profile[4].inner, 0.5, 1e-12);
}

TEST(leakage_profile, requires_nesting) {
    std::vector<LogicalBlock> one = {LogicalBlock(1)};
    BasisSet other(3, {computational_state("000")}, {"vac"});
    EXPECT_THROW(leakage_profile(HermitianOperator::zero(8), logical_basis(one, 3), other, 1.0, 4), ConfigError);
}
