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

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

namespace hqcdfs {

namespace {

void check_pair(int k, int l, int n, const char* what) {
    if (k < 1 || l > n || k >= l) {
        throw IndexError(std::string(what) + ": need 1 ≤ k < l ≤ " + std::to_string(n) + ", got (" +
                         std::to_string(k) + ", " + std::to_string(l) + ")");
    }
}

void check_in_plane(Axis axis, const char* what) {
    if (axis == Axis::kZ) {
        throw ConfigError(std::string(what) + ": axis must be x or y");
    }
}

std::pair<Axis, Axis> split(AxisPair pair) {
    switch (pair) {
        case AxisPair::kXX:
            return {Axis::kX, Axis::kX};
        case AxisPair::kXY:
            return {Axis::kX, Axis::kY};
        case AxisPair::kYX:
            return {Axis::kY, Axis::kX};
        case AxisPair::kYY:
            return {Axis::kY, Axis::kY};
    }
    return {Axis::kX, Axis::kX};
}

}  // namespace

std::string axis_pair_name(AxisPair pair) {
    auto [a, b] = split(pair);
    return {axis_name(a), axis_name(b)};
}

AxisPair parse_axis_pair(std::string_view name) {
    if (name == "xx") return AxisPair::kXX;
    if (name == "xy") return AxisPair::kXY;
    if (name == "yx") return AxisPair::kYX;
    if (name == "yy") return AxisPair::kYY;
    throw ConfigError("unknown axis pair '" + std::string(name) + "'");
}

void CouplingConfig::validate() const {
    if (n_qubits < 1) {
        throw ConfigError("CouplingConfig: n_qubits must be positive");
    }
    for (const auto& t : two_body) {
        check_pair(t.k, t.l, n_qubits, "CouplingConfig two-body term");
        check_in_plane(t.axis, "CouplingConfig two-body term");
        if (!std::isfinite(t.value)) throw ConfigError("CouplingConfig: non-finite coupling");
    }
    for (const auto& t : four_body) {
        check_pair(t.k, t.l, n_qubits, "CouplingConfig four-body term");
        check_pair(t.p, t.q, n_qubits, "CouplingConfig four-body term");
        if (t.k == t.p || t.k == t.q || t.l == t.p || t.l == t.q) {
            throw ConfigError("CouplingConfig: four-body index pairs (" + std::to_string(t.k) + "," +
                              std::to_string(t.l) + ") and (" + std::to_string(t.p) + "," + std::to_string(t.q) +
                              ") overlap");
        }
        if (!std::isfinite(t.value)) throw ConfigError("CouplingConfig: non-finite coupling");
    }
}

HermitianOperator r_op(Axis axis, int k, int l, int n) {
    check_pair(k, l, n, "r_op");
    check_in_plane(axis, "r_op");
    const ComplexMatrix xk = pauli_on(Axis::kX, k, n).matrix();
    const ComplexMatrix yk = pauli_on(Axis::kY, k, n).matrix();
    const ComplexMatrix xl = pauli_on(Axis::kX, l, n).matrix();
    const ComplexMatrix yl = pauli_on(Axis::kY, l, n).matrix();
    if (axis == Axis::kX) {
        return HermitianOperator(0.5 * (xk * xl + yk * yl));
    }
    return HermitianOperator(0.5 * (xk * yl - yk * xl));
}

HermitianOperator assemble_two_body(const CouplingConfig& config) {
    config.validate();
    Eigen::Index dim = Eigen::Index{1} << config.n_qubits;
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
    for (const auto& t : config.two_body) {
        if (t.value != 0) {
            h += t.value * r_op(t.axis, t.k, t.l, config.n_qubits).matrix();
        }
    }
    return HermitianOperator(std::move(h));
}

HermitianOperator assemble_four_body(const CouplingConfig& config) {
    config.validate();
    Eigen::Index dim = Eigen::Index{1} << config.n_qubits;
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
    for (const auto& t : config.four_body) {
        if (t.value == 0) continue;
        auto [a, b] = split(t.axes);
        // Disjoint supports, so the two factors commute and the product is Hermitian.
        h += t.value * (r_op(a, t.k, t.l, config.n_qubits).matrix() * r_op(b, t.p, t.q, config.n_qubits).matrix());
    }
    return HermitianOperator(std::move(h));
}

HermitianOperator assemble(const CouplingConfig& config) {
    return assemble_two_body(config) + assemble_four_body(config);
}

HermitianOperator collective_z(int n) {
    if (n < 1) {
        throw IndexError("collective_z: qubit count must be positive");
    }
    if (n >= 63 || (Eigen::Index{1} << n) > kMaxDimension) {
        throw DimensionCapError("collective_z: 2^" + std::to_string(n) + " exceeds dimension cap");
    }
    Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::VectorXcd diag(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        int excitations = std::popcount(static_cast<unsigned long long>(i));
        diag(i) = static_cast<double>(n - 2 * excitations);
    }
    return HermitianOperator(diag.asDiagonal().toDenseMatrix());
}

std::string gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::kXZ:
            return "XZ";
        case GateKind::kZX:
            return "ZX";
        case GateKind::kCNOT:
            return "CNOT";
    }
    return "?";
}

GateKind parse_gate_kind(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    if (upper == "XZ") return GateKind::kXZ;
    if (upper == "ZX") return GateKind::kZX;
    if (upper == "CNOT") return GateKind::kCNOT;
    throw ConfigError("unknown gate kind '" + std::string(name) + "'");
}

double nominal_pulse_area(GateKind kind) {
    switch (kind) {
        case GateKind::kXZ:
        case GateKind::kCNOT:
            return std::numbers::pi / std::numbers::sqrt2;
        case GateKind::kZX:
            return std::numbers::pi;
    }
    return 0;
}

GateRecipe::GateRecipe(GateKind kind, double phase, double strength, double duration, std::vector<int> blocks,
                       bool detuned)
    : kind_(kind),
      phase_(phase),
      strength_(strength),
      duration_(duration),
      blocks_(std::move(blocks)),
      detuned_(detuned) {
    if (!std::isfinite(phase_)) {
        throw ConfigError("GateRecipe: phase must be finite");
    }
    if (!(strength_ > 0) || !std::isfinite(strength_)) {
        throw ConfigError("GateRecipe: strength must be positive and finite");
    }
    if (!(duration_ > 0) || !std::isfinite(duration_)) {
        throw ConfigError("GateRecipe: duration must be positive and finite");
    }
    std::size_t expected = kind_ == GateKind::kCNOT ? 2 : 1;
    if (blocks_.size() != expected) {
        throw ConfigError("GateRecipe: " + gate_kind_name(kind_) + " takes " + std::to_string(expected) +
                          " block index(es), got " + std::to_string(blocks_.size()));
    }
    for (int b : blocks_) {
        if (b < 1) throw IndexError("GateRecipe: block indices are 1-based, got " + std::to_string(b));
    }
    if (kind_ == GateKind::kCNOT && blocks_[0] == blocks_[1]) {
        throw ConfigError("GateRecipe: CNOT control and target blocks must differ");
    }
    if (!detuned_ && std::abs(pulse_area_error()) > kPulseAreaTolerance) {
        throw ConfigError("GateRecipe: pulse area " + std::to_string(pulse_area()) + " differs from nominal " +
                          std::to_string(nominal_pulse_area(kind_)) + "; use a detuned recipe");
    }
}

GateRecipe GateRecipe::make(GateKind kind, double phase, double strength, double duration, std::vector<int> blocks) {
    return GateRecipe(kind, phase, strength, duration, std::move(blocks), false);
}

GateRecipe GateRecipe::detuned(GateKind kind, double phase, double strength, double duration,
                               std::vector<int> blocks) {
    return GateRecipe(kind, phase, strength, duration, std::move(blocks), true);
}

GateRecipe GateRecipe::xz(double phase, double strength, int block) {
    return make(GateKind::kXZ, phase, strength, nominal_pulse_area(GateKind::kXZ) / strength, {block});
}

GateRecipe GateRecipe::zx(double phase, double strength, int block) {
    return make(GateKind::kZX, phase, strength, nominal_pulse_area(GateKind::kZX) / strength, {block});
}

GateRecipe GateRecipe::cnot(double strength, int control, int target) {
    return make(GateKind::kCNOT, 0.0, strength, nominal_pulse_area(GateKind::kCNOT) / strength, {control, target});
}

double GateRecipe::pulse_area_error() const {
    return pulse_area() - nominal_pulse_area(kind_);
}

int GateRecipe::max_block() const {
    return *std::max_element(blocks_.begin(), blocks_.end());
}

GateRecipe GateRecipe::with_phase(double phase) const {
    return GateRecipe(kind_, phase, strength_, duration_, blocks_, detuned_);
}

CouplingConfig recipe_couplings(const GateRecipe& recipe, int n_blocks) {
    if (n_blocks < 1) {
        throw IndexError("recipe_couplings: need at least one logical block");
    }
    if (recipe.max_block() > n_blocks) {
        throw IndexError("recipe_couplings: block " + std::to_string(recipe.max_block()) + " outside 1.." +
                         std::to_string(n_blocks));
    }
    CouplingConfig config;
    config.n_qubits = 3 * n_blocks;
    const double j = recipe.strength();
    const double c = std::cos(recipe.phase() / 2);
    const double s = std::sin(recipe.phase() / 2);
    const int first = 3 * recipe.blocks()[0] - 2;
    switch (recipe.kind()) {
        case GateKind::kXZ:
            config.two_body = {
                {first, first + 1, Axis::kX, j * c},
                {first, first + 1, Axis::kY, -j * s},
                {first, first + 2, Axis::kX, -j * c},
                {first, first + 2, Axis::kY, -j * s},
            };
            break;
        case GateKind::kZX:
            config.two_body = {
                {first, first + 1, Axis::kY, j * s},
                {first, first + 2, Axis::kX, -j * c},
            };
            break;
        case GateKind::kCNOT: {
            const int target = 3 * recipe.blocks()[1] - 2;
            config.four_body = {
                {first, first + 2, target, target + 1, AxisPair::kXX, j},
                {first, first + 2, target, target + 2, AxisPair::kXX, -j},
            };
            break;
        }
    }
    return config;
}

HermitianOperator recipe_hamiltonian(const GateRecipe& recipe, int n_blocks) {
    return assemble(recipe_couplings(recipe, n_blocks));
}

}  // namespace hqcdfs
