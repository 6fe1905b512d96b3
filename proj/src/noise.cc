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

#include "hqcdfs/noise.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "hqcdfs/gates.h"
#include "hqcdfs/random.h"

namespace hqcdfs {

namespace {

// Diagonal of Σσ^z for each computational-basis index.
Eigen::VectorXd collective_z_diagonal(int n) {
    Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::VectorXd d(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        d(i) = static_cast<double>(n - 2 * std::popcount(static_cast<unsigned long long>(i)));
    }
    return d;
}

void apply_kick(const Eigen::VectorXd& z, double theta, ComplexMatrix& states) {
    Eigen::VectorXcd phases = (z.cast<Complex>() * Complex(0, -theta)).array().exp();
    states = phases.asDiagonal() * states;
}

NoisyResult summarize(std::vector<double> per_sample) {
    NoisyResult r;
    r.mean_fidelity = std::accumulate(per_sample.begin(), per_sample.end(), 0.0) / per_sample.size();
    r.min_fidelity = *std::min_element(per_sample.begin(), per_sample.end());
    r.per_sample = std::move(per_sample);
    return r;
}

}  // namespace

ThetaDistribution ThetaDistribution::uniform(double lo, double hi) {
    return {Kind::kUniform, lo, hi};
}

ThetaDistribution ThetaDistribution::gaussian(double mean, double stddev) {
    return {Kind::kGaussian, mean, stddev};
}

ThetaDistribution ThetaDistribution::fixed(double theta) {
    return {Kind::kFixed, theta, 0};
}

std::string distribution_kind_name(ThetaDistribution::Kind kind) {
    switch (kind) {
        case ThetaDistribution::Kind::kUniform:
            return "uniform";
        case ThetaDistribution::Kind::kGaussian:
            return "gaussian";
        case ThetaDistribution::Kind::kFixed:
            return "fixed";
    }
    return "?";
}

ThetaDistribution::Kind parse_distribution_kind(std::string_view name) {
    if (name == "uniform") return ThetaDistribution::Kind::kUniform;
    if (name == "gaussian") return ThetaDistribution::Kind::kGaussian;
    if (name == "fixed") return ThetaDistribution::Kind::kFixed;
    throw ConfigError("unknown distribution '" + std::string(name) + "'");
}

void NoiseEnsemble::validate() const {
    if (kick_count < 0) throw ConfigError("NoiseEnsemble: kick_count must be ≥ 0");
    if (samples < 1) throw ConfigError("NoiseEnsemble: samples must be ≥ 1");
    if (!std::isfinite(distribution.first) || !std::isfinite(distribution.second)) {
        throw ConfigError("NoiseEnsemble: distribution parameters must be finite");
    }
    if (distribution.kind == ThetaDistribution::Kind::kGaussian && distribution.second < 0) {
        throw ConfigError("NoiseEnsemble: stddev must be ≥ 0");
    }
    if (distribution.kind == ThetaDistribution::Kind::kUniform && distribution.second < distribution.first) {
        throw ConfigError("NoiseEnsemble: uniform range is empty");
    }
}

std::vector<double> sample_kicks(const NoiseEnsemble& ensemble, int sample) {
    auto rng = stream_rng(ensemble.seed, static_cast<std::uint64_t>(sample));
    std::vector<double> out(static_cast<std::size_t>(ensemble.kick_count));
    const auto& d = ensemble.distribution;
    for (double& theta : out) {
        switch (d.kind) {
            case ThetaDistribution::Kind::kUniform:
                theta = uniform(rng, d.first, d.second);
                break;
            case ThetaDistribution::Kind::kGaussian:
                theta = d.first + d.second * standard_normal(rng);
                break;
            case ThetaDistribution::Kind::kFixed:
                theta = d.first;
                break;
        }
    }
    return out;
}

UnitaryOperator collective_kick(double theta, int n) {
    if (n < 1 || n > 14) {
        throw DimensionCapError("collective_kick: need 1..14 qubits");
    }
    Eigen::VectorXcd phases = (collective_z_diagonal(n).cast<Complex>() * Complex(0, -theta)).array().exp();
    return UnitaryOperator(phases.asDiagonal().toDenseMatrix());
}

ComplexMatrix noisy_evolve_states(const GateRecipe& recipe, int n_blocks, std::span<const double> kicks,
                                  const ComplexMatrix& states, std::span<const double> kick_positions) {
    if (!kick_positions.empty() && kick_positions.size() != kicks.size()) {
        throw ConfigError("noisy_evolve_states: one position per kick required");
    }
    std::vector<double> positions(kick_positions.begin(), kick_positions.end());
    if (positions.empty()) {
        for (std::size_t i = 0; i < kicks.size(); ++i) {
            positions.push_back(static_cast<double>(i + 1) / static_cast<double>(kicks.size() + 1));
        }
    }
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] < 0 || positions[i] > 1 || (i > 0 && positions[i] < positions[i - 1])) {
            throw ConfigError("noisy_evolve_states: kick positions must be non-decreasing in [0, 1]");
        }
    }
    const int n = 3 * n_blocks;
    SpectralPropagator propagator(recipe_hamiltonian(recipe, n_blocks));
    const Eigen::VectorXd z = collective_z_diagonal(n);
    ComplexMatrix out = states;
    double elapsed = 0;
    for (std::size_t i = 0; i < kicks.size(); ++i) {
        double until = positions[i] * recipe.duration();
        if (until > elapsed) out = propagator.apply(until - elapsed, out);
        elapsed = std::max(elapsed, until);
        apply_kick(z, kicks[i], out);
    }
    if (recipe.duration() > elapsed) out = propagator.apply(recipe.duration() - elapsed, out);
    return out;
}

NoisyResult noisy_realize(const GateRecipe& recipe, const NoiseEnsemble& ensemble, int n_blocks) {
    ensemble.validate();
    const BasisSet logical = recipe_logical_basis(recipe, n_blocks);
    const ComplexMatrix target_adjoint = target_for(recipe).matrix().adjoint();
    const double dim = static_cast<double>(logical.size());
    std::vector<double> fidelities(static_cast<std::size_t>(ensemble.samples));
    for (int s = 0; s < ensemble.samples; ++s) {
        std::vector<double> kicks = sample_kicks(ensemble, s);
        ComplexMatrix evolved = noisy_evolve_states(recipe, n_blocks, kicks, logical.columns());
        ComplexMatrix restricted = logical.columns().adjoint() * evolved;
        fidelities[static_cast<std::size_t>(s)] = std::abs((target_adjoint * restricted).trace()) / dim;
    }
    return summarize(std::move(fidelities));
}

NoisyResult bare_baseline(double theta_gate, const NoiseEnsemble& ensemble) {
    ensemble.validate();
    const HermitianOperator generator(pauli(Axis::kX) * 0.5);
    const SpectralPropagator propagator(generator);
    const Eigen::VectorXd z = collective_z_diagonal(1);
    StateVector plus(2);
    plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
    const StateVector ideal = propagator.apply(theta_gate, plus);
    std::vector<double> fidelities(static_cast<std::size_t>(ensemble.samples));
    for (int s = 0; s < ensemble.samples; ++s) {
        std::vector<double> kicks = sample_kicks(ensemble, s);
        const double segment = theta_gate / static_cast<double>(kicks.size() + 1);
        ComplexMatrix state = plus;
        for (double theta : kicks) {
            state = propagator.apply(segment, state);
            apply_kick(z, theta, state);
        }
        state = propagator.apply(segment, state);
        fidelities[static_cast<std::size_t>(s)] = std::norm(ideal.dot(state.col(0)));
    }
    return summarize(std::move(fidelities));
}

}  // namespace hqcdfs
