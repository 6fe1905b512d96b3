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

#ifndef HQCDFS_SUBSPACE_H
#define HQCDFS_SUBSPACE_H

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hqcdfs/operator_algebra.h"

namespace hqcdfs {

/// Computational-basis state from a bit string, qubit 1 leftmost: "010" is |010⟩.
StateVector computational_state(std::string_view bits);

/// Ordered orthonormal set of state vectors in a 2^n-dimensional register.
class BasisSet {
   public:
    /// Throws ConfigError unless the vectors are unit norm, pairwise orthogonal
    /// to 1e-12, labelled uniquely, and no more numerous than the ambient dimension.
    BasisSet(int n_qubits, std::vector<StateVector> vectors, std::vector<std::string> labels);

    int n_qubits() const { return n_qubits_; }
    Eigen::Index dim_ambient() const { return Eigen::Index{1} << n_qubits_; }
    Eigen::Index size() const { return static_cast<Eigen::Index>(vectors_.size()); }
    const std::vector<StateVector>& vectors() const { return vectors_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// dim_ambient × size matrix whose columns are the basis vectors.
    const ComplexMatrix& columns() const { return columns_; }
    /// Σ |b_i⟩⟨b_i|.
    ComplexMatrix projector() const;

    /// Basis vectors b'_k = Σ_l b_l V_lk for an L×L unitary V.
    BasisSet rotated(const ComplexMatrix& v) const;

   private:
    int n_qubits_;
    std::vector<StateVector> vectors_;
    std::vector<std::string> labels_;
    ComplexMatrix columns_;
};

/// One logical qubit: three contiguous physical qubits (3n−2, 3n−1, 3n).
class LogicalBlock {
   public:
    explicit LogicalBlock(int index);

    int index() const { return index_; }
    std::array<int, 3> physical_qubits() const { return {3 * index_ - 2, 3 * index_ - 1, 3 * index_}; }

    friend bool operator==(const LogicalBlock&, const LogicalBlock&) = default;

   private:
    int index_;
};

/// Three-qubit pattern a block holds: |a⟩ = |100⟩, |0⟩_L = |010⟩, |1⟩_L = |001⟩.
enum class BlockState { kAncilla, kZero, kOne };

std::string_view block_state_bits(BlockState state);
BlockState parse_block_state(std::string_view name);

/// {|a⟩, |0⟩_L, |1⟩_L} on `block`, every other block held at `spectator`.
///
/// Requires 3·block.index() ≤ n_total and n_total a multiple of 3.
BasisSet dfs_basis(LogicalBlock block, int n_total, BlockState spectator = BlockState::kZero);

/// Logical computational basis of the listed blocks, lexicographic with the
/// first listed block most significant: labels "0","1" or "00","01","10","11".
BasisSet logical_basis(std::span<const LogicalBlock> blocks, int n_total, BlockState spectator = BlockState::kZero);

/// Tensor product of the three-dimensional DFS of every listed block, 3^k vectors.
BasisSet dfs_product_basis(std::span<const LogicalBlock> blocks, int n_total,
                           BlockState spectator = BlockState::kZero);

/// {|aa⟩, |00⟩_L, |01⟩_L, |10⟩_L, |11⟩_L} on (control, target).
BasisSet cnot_invariant_basis(LogicalBlock control, LogicalBlock target, int n_total,
                              BlockState spectator = BlockState::kZero);

/// Matrix of ⟨b_i|op|b_j⟩ in basis order.
ComplexMatrix restrict(const ComplexMatrix& op, const BasisSet& basis);

/// ‖(I − P)·u·P‖_F with P the projector onto span(basis).
double invariance_defect(const ComplexMatrix& u, const BasisSet& basis);

struct LeakageSample {
    double time = 0;
    /// Largest population outside span(outer) over initial inner basis states.
    double outer = 0;
    /// Largest population outside span(inner) over initial inner basis states.
    double inner = 0;
};

/// Samples leakage on the uniform grid t_i = i·τ/steps, i = 0..steps.
///
/// Throws ConfigError when span(inner) is not contained in span(outer).
std::vector<LeakageSample> leakage_profile(const HermitianOperator& h, const BasisSet& inner,
                                           const BasisSet& outer, double tau, int steps);

}  // namespace hqcdfs

#endif  // HQCDFS_SUBSPACE_H
