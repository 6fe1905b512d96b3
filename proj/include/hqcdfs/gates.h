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

#ifndef HQCDFS_GATES_H
#define HQCDFS_GATES_H

#include <cstdint>
#include <span>
#include <vector>

#include "hqcdfs/holonomy.h"
#include "hqcdfs/model.h"
#include "hqcdfs/operator_algebra.h"
#include "hqcdfs/subspace.h"

namespace hqcdfs {

/// [[0, e^{−iφ}], [e^{iφ}, 0]] = X_L·e^{iφ Z_L}.
UnitaryOperator target_uxz(double phase);
/// [[cos φ, i sin φ], [−i sin φ, −cos φ]] = Z_L·e^{iφ X_L}.
UnitaryOperator target_uzx(double phase);
/// Flips the second logical qubit when the first is |1⟩_L.
UnitaryOperator target_cnot();
UnitaryOperator target_for(const GateRecipe& recipe);

/// The expected propagator on the recipe's invariant basis: {|a⟩, |0⟩_L, |1⟩_L} for
/// XZ/ZX (a −1 on the ancilla, the target on the logical block), and
/// {|aa⟩, |00⟩_L, |01⟩_L, |10⟩_L, |11⟩_L} for CNOT.
ComplexMatrix expected_invariant_block(const GateRecipe& recipe);

/// Number of physical-qubit blocks a recipe needs when none is given.
int default_block_count(const GateRecipe& recipe);

/// The logical basis a recipe acts on: one block for XZ/ZX, (control, target) for CNOT.
BasisSet recipe_logical_basis(const GateRecipe& recipe, int n_blocks, BlockState spectator = BlockState::kZero);
/// S^D of the gate block, or S^D ⊗ S^D of (control, target).
BasisSet recipe_dfs_basis(const GateRecipe& recipe, int n_blocks, BlockState spectator = BlockState::kZero);
/// The basis on which expected_invariant_block is quoted.
BasisSet recipe_invariant_basis(const GateRecipe& recipe, int n_blocks, BlockState spectator = BlockState::kZero);

/// Tolerance for the realized gate against its target and its invariant-basis block.
inline constexpr double kGateTolerance = 1e-10;

struct GateRealization {
    GateRecipe recipe;
    int n_blocks = 0;
    UnitaryOperator propagator;
    /// Propagator restricted to the logical basis. Unitary unless the recipe leaks.
    ComplexMatrix restricted;
    UnitaryOperator target;
    /// Phase-aligned Frobenius distance between restricted and target.
    double distance = 0;
    /// |Tr(target†·restricted)| / L.
    double fidelity = 0;
    HolonomyReport holonomy;
    /// Invariance defect of S^D (or S^D ⊗ S^D) under the propagator.
    double invariance = 0;
    ComplexMatrix invariant_block;
    ComplexMatrix expected_block;
    /// max |invariant_block − expected_block| entrywise, no phase alignment.
    double invariant_block_defect = 0;
};

/// Evolves under the recipe Hamiltonian for its duration, restricts, compares and certifies.
///
/// `steps` sets the projector-chain resolution; 0 skips the reconstruction but keeps
/// the condition defects. Detuned recipes are realized and reported, not rejected.
GateRealization realize(const GateRecipe& recipe, int n_blocks, int steps);

/// Recipes in time order realizing a rotation by `angle` about z or x:
/// z → [XZ(−θ/2), XZ(0)], x → [ZX(−θ/2), ZX(0)].
std::vector<GateRecipe> rotation_sequence(Axis axis, double angle, double strength = 1.0, int block = 1);

/// Product of the recipes' target matrices, first recipe applied first.
UnitaryOperator compose_targets(std::span<const GateRecipe> recipes);
/// Product of the realized restricted matrices, first recipe applied first.
ComplexMatrix compose_realized(std::span<const GateRecipe> recipes, int n_blocks);

/// Angles with target = e^{iδ}·Rz(alpha)·Rx(beta)·Rz(gamma).
///
/// beta ∈ [0, π]; alpha, gamma ∈ (−π, π]. When beta = 0 the z angles are merged
/// into alpha and gamma = 0; when beta = π, gamma = 0.
struct EulerAngles {
    double alpha = 0;
    double beta = 0;
    double gamma = 0;
};

EulerAngles euler_zxz(const UnitaryOperator& target);

/// Rz(θ) = e^{−iθσz/2}, Rx(θ) = e^{−iθσx/2}.
UnitaryOperator rz(double angle);
UnitaryOperator rx(double angle);

/// Recipe sequence in time order whose composed targets equal `target` up to phase.
std::vector<GateRecipe> euler_compose(const UnitaryOperator& target, double strength = 1.0, int block = 1);

struct NoGoReport {
    int trials = 0;
    std::uint64_t seed = 0;
    /// Configs whose restricted Hamiltonian vanishes.
    int trivial = 0;
    int nontrivial = 0;
    /// Configs where the three-way equivalence fails.
    int counterexamples = 0;
    /// Nontrivial configs with zero transport defect.
    int nontrivial_without_defect = 0;
    double max_invariance_defect = 0;
    double max_trivial_transport_defect = 0;
    double min_nontrivial_transport_defect = 0;
    /// {|01⟩, |10⟩} restriction of H for J_12^x = 1.
    ComplexMatrix witness_restricted;
    double witness_transport_defect = 0;
};

/// Randomized certificate that two-qubit Hamiltonians of XY/DM form cannot be both
/// nontrivial on the DFS {|01⟩, |10⟩} and parallel transporting.
NoGoReport no_go_certificate(int trials, std::uint64_t seed);

}  // namespace hqcdfs

#endif  // HQCDFS_GATES_H
