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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hqcdfs/random.h"

namespace hqcdfs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0, 1};

double wrap_angle(double a) {
    // Into (−π, π].
    a = std::remainder(a, 2 * kPi);
    if (a <= -kPi) a += 2 * kPi;
    return a;
}

std::vector<LogicalBlock> recipe_blocks(const GateRecipe& recipe) {
    std::vector<LogicalBlock> out;
    for (int b : recipe.blocks()) out.emplace_back(b);
    return out;
}

}  // namespace

UnitaryOperator target_uxz(double phase) {
    ComplexMatrix m(2, 2);
    m << 0, std::exp(-kI * phase), std::exp(kI * phase), 0;
    return UnitaryOperator(std::move(m));
}

UnitaryOperator target_uzx(double phase) {
    ComplexMatrix m(2, 2);
    m << std::cos(phase), kI * std::sin(phase), -kI * std::sin(phase), -std::cos(phase);
    return UnitaryOperator(std::move(m));
}

UnitaryOperator target_cnot() {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return UnitaryOperator(std::move(m));
}

UnitaryOperator target_for(const GateRecipe& recipe) {
    switch (recipe.kind()) {
        case GateKind::kXZ:
            return target_uxz(recipe.phase());
        case GateKind::kZX:
            return target_uzx(recipe.phase());
        case GateKind::kCNOT:
            return target_cnot();
    }
    throw ConfigError("target_for: unknown gate kind");
}

ComplexMatrix expected_invariant_block(const GateRecipe& recipe) {
    const UnitaryOperator target = target_for(recipe);
    const Eigen::Index n = target.dim() + 1;
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    m(0, 0) = -1;
    m.bottomRightCorner(n - 1, n - 1) = target.matrix();
    return m;
}

int default_block_count(const GateRecipe& recipe) {
    return recipe.max_block();
}

BasisSet recipe_logical_basis(const GateRecipe& recipe, int n_blocks, BlockState spectator) {
    return logical_basis(recipe_blocks(recipe), 3 * n_blocks, spectator);
}

BasisSet recipe_dfs_basis(const GateRecipe& recipe, int n_blocks, BlockState spectator) {
    return dfs_product_basis(recipe_blocks(recipe), 3 * n_blocks, spectator);
}

BasisSet recipe_invariant_basis(const GateRecipe& recipe, int n_blocks, BlockState spectator) {
    if (recipe.kind() == GateKind::kCNOT) {
        return cnot_invariant_basis(LogicalBlock(recipe.blocks()[0]), LogicalBlock(recipe.blocks()[1]), 3 * n_blocks,
                                    spectator);
    }
    return dfs_basis(LogicalBlock(recipe.blocks()[0]), 3 * n_blocks, spectator);
}

GateRealization realize(const GateRecipe& recipe, int n_blocks, int steps) {
    HermitianOperator h = recipe_hamiltonian(recipe, n_blocks);
    UnitaryOperator propagator = evolve(h, recipe.duration());
    BasisSet logical = recipe_logical_basis(recipe, n_blocks);
    ComplexMatrix restricted = restrict(propagator.matrix(), logical);
    UnitaryOperator target = target_for(recipe);
    double distance = phase_aligned_frobenius(restricted, target.matrix());
    double fidelity =
        std::abs((target.matrix().adjoint() * restricted).trace()) / static_cast<double>(target.dim());
    HolonomyReport holonomy = certify(h, logical, recipe.duration(), steps);
    double invariance = invariance_defect(propagator.matrix(), recipe_dfs_basis(recipe, n_blocks));
    ComplexMatrix block = restrict(propagator.matrix(), recipe_invariant_basis(recipe, n_blocks));
    ComplexMatrix expected = expected_invariant_block(recipe);
    double block_defect = (block - expected).cwiseAbs().maxCoeff();
    return GateRealization{
        .recipe = recipe,
        .n_blocks = n_blocks,
        .propagator = std::move(propagator),
        .restricted = std::move(restricted),
        .target = std::move(target),
        .distance = distance,
        .fidelity = fidelity,
        .holonomy = std::move(holonomy),
        .invariance = invariance,
        .invariant_block = std::move(block),
        .expected_block = std::move(expected),
        .invariant_block_defect = block_defect,
    };
}

std::vector<GateRecipe> rotation_sequence(Axis axis, double angle, double strength, int block) {
    switch (axis) {
        case Axis::kZ:
            return {GateRecipe::xz(-angle / 2, strength, block), GateRecipe::xz(0.0, strength, block)};
        case Axis::kX:
            return {GateRecipe::zx(-angle / 2, strength, block), GateRecipe::zx(0.0, strength, block)};
        case Axis::kY:
            break;
    }
    throw ConfigError("rotation_sequence: axis must be z or x");
}

UnitaryOperator compose_targets(std::span<const GateRecipe> recipes) {
    if (recipes.empty()) {
        throw ConfigError("compose_targets: empty sequence");
    }
    UnitaryOperator product = UnitaryOperator::identity(target_for(recipes.front()).dim());
    for (const auto& r : recipes) product = target_for(r) * product;
    return product;
}

ComplexMatrix compose_realized(std::span<const GateRecipe> recipes, int n_blocks) {
    if (recipes.empty()) {
        throw ConfigError("compose_realized: empty sequence");
    }
    ComplexMatrix product;
    for (const auto& r : recipes) {
        ComplexMatrix step = realize(r, n_blocks, 0).restricted;
        product = product.size() == 0 ? step : ComplexMatrix(step * product);
    }
    return product;
}

UnitaryOperator rz(double angle) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = std::exp(-kI * (angle / 2));
    m(1, 1) = std::exp(kI * (angle / 2));
    return UnitaryOperator(std::move(m));
}

UnitaryOperator rx(double angle) {
    ComplexMatrix m(2, 2);
    double c = std::cos(angle / 2);
    double s = std::sin(angle / 2);
    m << c, -kI * s, -kI * s, c;
    return UnitaryOperator(std::move(m));
}

EulerAngles euler_zxz(const UnitaryOperator& target) {
    if (target.dim() != 2) {
        throw ShapeError("euler_zxz: target must be 2x2");
    }
    const ComplexMatrix& u = target.matrix();
    // Rz(α)Rx(β)Rz(γ) = [[c·e^{−i(α+γ)/2}, −is·e^{−i(α−γ)/2}], [−is·e^{i(α−γ)/2}, c·e^{i(α+γ)/2}]]
    // with c = cos(β/2), s = sin(β/2). The ratios u11/u00 and u10/u01 fix α±γ mod 2π;
    // the remaining (α, γ) → (α+π, γ+π) ambiguity flips the sign of β, so both
    // branches are tried against the target.
    double beta = 2 * std::atan2(std::abs(u(1, 0)), std::abs(u(0, 0)));
    constexpr double kDegenerate = 1e-12;
    if (std::abs(u(0, 1)) <= kDegenerate) {
        // beta = 0: only α + γ is defined.
        return {wrap_angle(std::arg(u(1, 1) / u(0, 0))), 0.0, 0.0};
    }
    if (std::abs(u(0, 0)) <= kDegenerate) {
        // beta = π: only α − γ is defined.
        return {wrap_angle(std::arg(u(1, 0) / u(0, 1))), kPi, 0.0};
    }
    double sum = std::arg(u(1, 1) / u(0, 0));
    double diff = std::arg(u(1, 0) / u(0, 1));
    EulerAngles first{wrap_angle((sum + diff) / 2), beta, wrap_angle((sum - diff) / 2)};
    EulerAngles second{wrap_angle(first.alpha + kPi), beta, wrap_angle(first.gamma + kPi)};
    auto error = [&](const EulerAngles& e) {
        return phase_aligned_distance(rz(e.alpha) * rx(e.beta) * rz(e.gamma), target);
    };
    return error(first) <= error(second) ? first : second;
}

std::vector<GateRecipe> euler_compose(const UnitaryOperator& target, double strength, int block) {
    EulerAngles e = euler_zxz(target);
    std::vector<GateRecipe> out;
    auto append = [&](Axis axis, double angle) {
        auto seq = rotation_sequence(axis, angle, strength, block);
        out.insert(out.end(), seq.begin(), seq.end());
    };
    if (e.beta == 0 && e.gamma == 0) {
        append(Axis::kZ, e.alpha);
        return out;
    }
    // Time order: Rz(γ) first, Rz(α) last.
    append(Axis::kZ, e.gamma);
    append(Axis::kX, e.beta);
    append(Axis::kZ, e.alpha);
    return out;
}

NoGoReport no_go_certificate(int trials, std::uint64_t seed) {
    if (trials < 1) {
        throw ConfigError("no_go_certificate: trials must be positive");
    }
    constexpr double kZero = 1e-12;
    constexpr double kIdentity = 1e-10;
    constexpr int kTimeSamples = 8;
    constexpr double kTimeStep = 0.37;
    BasisSet dfs(2, {computational_state("01"), computational_state("10")}, {"01", "10"});
    const ComplexMatrix identity = ComplexMatrix::Identity(2, 2);

    NoGoReport report;
    report.trials = trials;
    report.seed = seed;
    report.min_nontrivial_transport_defect = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < trials; ++trial) {
        auto rng = stream_rng(seed, static_cast<std::uint64_t>(trial));
        // Each coupling is switched off with probability 1/4 so trivial configs occur.
        auto draw = [&] { return uniform01(rng) < 0.25 ? 0.0 : uniform(rng, -2.0, 2.0); };
        CouplingConfig config;
        config.n_qubits = 2;
        config.two_body = {{1, 2, Axis::kX, draw()}, {1, 2, Axis::kY, draw()}};
        HermitianOperator h = assemble_two_body(config);
        SpectralPropagator propagator(h);

        bool restricted_zero = restrict(h.matrix(), dfs).cwiseAbs().maxCoeff() <= kZero;
        double transport = transport_defect(h, dfs, kTimeStep * kTimeSamples, 2 * kTimeSamples + 1);
        bool transport_zero = transport <= kZero;
        bool identity_always = true;
        for (int j = 1; j <= kTimeSamples; ++j) {
            UnitaryOperator u = propagator.at(kTimeStep * j);
            report.max_invariance_defect = std::max(report.max_invariance_defect, invariance_defect(u.matrix(), dfs));
            if ((restrict(u.matrix(), dfs) - identity).cwiseAbs().maxCoeff() > kIdentity) identity_always = false;
        }
        if (!(restricted_zero == transport_zero && transport_zero == identity_always)) {
            ++report.counterexamples;
        }
        if (identity_always) {
            ++report.trivial;
            report.max_trivial_transport_defect = std::max(report.max_trivial_transport_defect, transport);
        } else {
            ++report.nontrivial;
            report.min_nontrivial_transport_defect = std::min(report.min_nontrivial_transport_defect, transport);
            if (transport_zero) ++report.nontrivial_without_defect;
        }
    }
    if (report.nontrivial == 0) report.min_nontrivial_transport_defect = 0;

    CouplingConfig witness;
    witness.n_qubits = 2;
    witness.two_body = {{1, 2, Axis::kX, 1.0}};
    HermitianOperator hw = assemble_two_body(witness);
    report.witness_restricted = restrict(hw.matrix(), dfs);
    report.witness_transport_defect = transport_defect(hw, dfs, kTimeStep * kTimeSamples, 2 * kTimeSamples + 1);
    return report;
}

}  // namespace hqcdfs
