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

#ifndef HQCDFS_NOISE_H
#define HQCDFS_NOISE_H

#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hqcdfs/model.h"
#include "hqcdfs/operator_algebra.h"
#include "hqcdfs/subspace.h"

namespace hqcdfs {

/// Distribution of the collective phase θ applied by each kick.
struct ThetaDistribution {
    enum class Kind { kUniform, kGaussian, kFixed };

    Kind kind = Kind::kUniform;
    /// Uniform: lower bound. Gaussian: mean. Fixed: θ.
    double first = 0;
    /// Uniform: upper bound. Gaussian: standard deviation. Fixed: unused.
    double second = 0;

    static ThetaDistribution uniform(double lo = 0, double hi = 2 * std::numbers::pi);
    static ThetaDistribution gaussian(double mean, double stddev);
    static ThetaDistribution fixed(double theta);
};

std::string distribution_kind_name(ThetaDistribution::Kind kind);
ThetaDistribution::Kind parse_distribution_kind(std::string_view name);

/// Classical collective-dephasing ensemble: `kick_count` random kicks
/// interleaved with each gate, `samples` independent realizations.
struct NoiseEnsemble {
    int kick_count = 1;
    ThetaDistribution distribution = ThetaDistribution::uniform();
    int samples = 1;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Kick angles for one sample; a pure function of (seed, sample).
std::vector<double> sample_kicks(const NoiseEnsemble& ensemble, int sample);

/// exp(−iθ·Σ_k σ_k^z) on `n` qubits.
UnitaryOperator collective_kick(double theta, int n);

/// Applies the gate to `states` in (kicks.size() + 1) equal segments with
/// a collective kick between consecutive segments.
///
/// `kick_positions`, when given, overrides the segment boundaries: kick i is applied
/// after a fraction kick_positions[i] ∈ [0, 1] of the gate duration (non-decreasing).
ComplexMatrix noisy_evolve_states(const GateRecipe& recipe, int n_blocks, std::span<const double> kicks,
                                  const ComplexMatrix& states, std::span<const double> kick_positions = {});

struct NoisyResult {
    double mean_fidelity = 0;
    double min_fidelity = 0;
    std::vector<double> per_sample;
};

/// Logical process fidelity |Tr(target†·restricted_noisy)| / L per sample.
NoisyResult noisy_realize(const GateRecipe& recipe, const NoiseEnsemble& ensemble, int n_blocks);

/// Single unencoded qubit: x-rotation by `theta_gate` with the same kick schedule
/// (σ^z kicks), state fidelity against the noiseless output for input |+⟩.
NoisyResult bare_baseline(double theta_gate, const NoiseEnsemble& ensemble);

}  // namespace hqcdfs

#endif  // HQCDFS_NOISE_H
