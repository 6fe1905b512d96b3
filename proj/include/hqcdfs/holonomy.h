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

#ifndef HQCDFS_HOLONOMY_H
#define HQCDFS_HOLONOMY_H

#include <optional>
#include <span>
#include <vector>

#include "hqcdfs/operator_algebra.h"
#include "hqcdfs/subspace.h"

namespace hqcdfs {

/// Cyclicity and parallel-transport defects must both be within this bound
/// before a holonomy reconstruction is attempted.
inline constexpr double kHolonomyPreconditionTolerance = 1e-8;
/// Minimum number of projector-chain slices.
inline constexpr int kMinChainSteps = 8;
/// Default number of time samples for transport_defect.
inline constexpr int kDefaultTransportSamples = 101;

/// Condition (i): ‖P(τ) − P(0)‖_F with P(t) = U(t)·P(0)·U(t)†.
double cyclicity_defect(const HermitianOperator& h, const BasisSet& basis, double tau);

/// Condition (ii): max over t on a uniform grid of `samples` points in [0, τ] and over
/// k, l of |⟨φ_k(t)|h|φ_l(t)⟩| with |φ_k(t)⟩ = exp(−iht)|b_k⟩.
double transport_defect(const HermitianOperator& h, const BasisSet& basis, double tau,
                        int samples = kDefaultTransportSamples);

/// max_kl |⟨b_k|h|b_l⟩|: the value transport_defect reduces to for a constant h,
/// which commutes with its own propagator.
double transport_defect_at_origin(const HermitianOperator& h, const BasisSet& basis);

/// The raw chained overlap ⟨b_k|P(t_N)···P(t_1)|b_l⟩ on t_j = j·τ/N, before unitarization.
///
/// Does not check preconditions.
ComplexMatrix projector_chain_overlap(const HermitianOperator& h, const BasisSet& basis, double tau, int steps);

/// Discrete parallel transport of the basis along the evolved subspace, unitarized by
/// polar decomposition. Converges to the holonomy acquired over [0, τ].
///
/// Throws PreconditionError when either condition fails by more than
/// kHolonomyPreconditionTolerance or steps < kMinChainSteps, and SingularChainError when
/// the chained overlap is rank deficient.
UnitaryOperator projector_chain_holonomy(const HermitianOperator& h, const BasisSet& basis, double tau, int steps);

struct HolonomyReport {
    double cyclicity_defect = 0;
    double transport_defect = 0;
    /// Both defects within kHolonomyPreconditionTolerance.
    bool preconditions_met = false;
    /// Present when preconditions_met and steps > 0.
    std::optional<UnitaryOperator> holonomy_matrix;
    /// Phase-aligned distance between holonomy_matrix and the restricted propagator.
    std::optional<double> reconstruction_distance;
    /// Phase-aligned Frobenius distance between the raw chained overlap and the
    /// restricted propagator; this is the discretization error of the chain.
    std::optional<double> chain_distance;
    int steps = 0;
    double tau = 0;
};

/// Computes both defects, then reconstructs the holonomy when they pass and steps > 0.
///
/// A failed precondition is reported in the result, never thrown, so that detuned
/// recipes can be certified as non-holonomic.
HolonomyReport certify(const HermitianOperator& h, const BasisSet& basis, double tau, int steps,
                       int transport_samples = kDefaultTransportSamples);

struct ConvergencePoint {
    int steps = 0;
    double reconstruction_distance = 0;
    double chain_distance = 0;
};

struct ConvergenceStudy {
    std::vector<ConvergencePoint> points;
    /// Least-squares slope of −log(chain_distance) against log(steps).
    double chain_order = 0;
};

/// Runs the projector chain at each step count. Requires the preconditions.
ConvergenceStudy convergence_study(const HermitianOperator& h, const BasisSet& basis, double tau,
                                   std::span<const int> steps);

/// Least-squares slope of −log(error) against log(steps); NaN when fewer than two
/// strictly positive errors are given.
double fitted_order(std::span<const int> steps, std::span<const double> errors);

}  // namespace hqcdfs

#endif  // HQCDFS_HOLONOMY_H
