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

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace hqcdfs {

namespace {

constexpr double kOrthonormalTolerance = 1e-12;
constexpr double kNestingTolerance = 1e-10;

void check_layout(int n_total, int block_index, const char* what) {
    if (n_total < 3 || n_total % 3 != 0) {
        throw ConfigError(std::string(what) + ": register of " + std::to_string(n_total) +
                          " qubits is not a whole number of 3-qubit blocks");
    }
    if (3 * block_index > n_total) {
        throw IndexError(std::string(what) + ": block " + std::to_string(block_index) + " does not fit in " +
                         std::to_string(n_total) + " qubits");
    }
}

void check_distinct(std::span<const LogicalBlock> blocks, const char* what) {
    std::set<int> seen;
    for (const auto& b : blocks) {
        if (!seen.insert(b.index()).second) {
            throw ConfigError(std::string(what) + ": duplicate block " + std::to_string(b.index()));
        }
    }
}

// Bit string for the full register with per-block patterns.
std::string register_bits(int n_total, const std::vector<BlockState>& states) {
    std::string bits;
    bits.reserve(static_cast<std::size_t>(n_total));
    for (BlockState s : states) bits += block_state_bits(s);
    return bits;
}

std::string logical_label(BlockState s) {
    switch (s) {
        case BlockState::kAncilla:
            return "a";
        case BlockState::kZero:
            return "0";
        case BlockState::kOne:
            return "1";
    }
    return "?";
}

}  // namespace

StateVector computational_state(std::string_view bits) {
    if (bits.empty() || bits.size() > 14) {
        throw DimensionCapError("computational_state: need 1..14 qubits, got " + std::to_string(bits.size()));
    }
    Eigen::Index index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw ConfigError("computational_state: invalid bit '" + std::string(1, c) + "'");
        }
        index = (index << 1) | (c == '1' ? 1 : 0);
    }
    StateVector v = StateVector::Zero(Eigen::Index{1} << bits.size());
    v(index) = 1;
    return v;
}

BasisSet::BasisSet(int n_qubits, std::vector<StateVector> vectors, std::vector<std::string> labels)
    : n_qubits_(n_qubits), vectors_(std::move(vectors)), labels_(std::move(labels)) {
    if (n_qubits_ < 1 || n_qubits_ > 14) {
        throw DimensionCapError("BasisSet: need 1..14 qubits, got " + std::to_string(n_qubits_));
    }
    if (vectors_.empty()) {
        throw ConfigError("BasisSet: empty basis");
    }
    if (vectors_.size() != labels_.size()) {
        throw ConfigError("BasisSet: label count differs from vector count");
    }
    if (size() > dim_ambient()) {
        throw ConfigError("BasisSet: more vectors than the ambient dimension");
    }
    if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size()) {
        throw ConfigError("BasisSet: labels must be unique");
    }
    columns_.resize(dim_ambient(), size());
    for (Eigen::Index j = 0; j < size(); ++j) {
        const auto& v = vectors_[static_cast<std::size_t>(j)];
        if (v.size() != dim_ambient()) {
            throw ShapeError("BasisSet: vector '" + labels_[static_cast<std::size_t>(j)] + "' has dimension " +
                             std::to_string(v.size()) + ", expected " + std::to_string(dim_ambient()));
        }
        if (!v.allFinite()) {
            throw ContractViolation("BasisSet: non-finite amplitude");
        }
        columns_.col(j) = v;
    }
    ComplexMatrix gram = columns_.adjoint() * columns_;
    double defect = (gram - ComplexMatrix::Identity(size(), size())).cwiseAbs().maxCoeff();
    if (defect > kOrthonormalTolerance) {
        throw ConfigError("BasisSet: vectors are not orthonormal (Gram defect " + std::to_string(defect) + ")");
    }
}

ComplexMatrix BasisSet::projector() const {
    return columns_ * columns_.adjoint();
}

BasisSet BasisSet::rotated(const ComplexMatrix& v) const {
    if (v.rows() != size() || v.cols() != size()) {
        throw ShapeError("BasisSet::rotated: frame change must be " + std::to_string(size()) + "x" +
                         std::to_string(size()));
    }
    ComplexMatrix cols = columns_ * v;
    std::vector<StateVector> out;
    out.reserve(vectors_.size());
    for (Eigen::Index j = 0; j < cols.cols(); ++j) out.emplace_back(cols.col(j));
    return BasisSet(n_qubits_, std::move(out), labels_);
}

LogicalBlock::LogicalBlock(int index) : index_(index) {
    if (index_ < 1) {
        throw IndexError("LogicalBlock: index is 1-based, got " + std::to_string(index_));
    }
}

std::string_view block_state_bits(BlockState state) {
    switch (state) {
        case BlockState::kAncilla:
            return "100";
        case BlockState::kZero:
            return "010";
        case BlockState::kOne:
            return "001";
    }
    return "000";
}

BlockState parse_block_state(std::string_view name) {
    if (name == "a" || name == "ancilla") return BlockState::kAncilla;
    if (name == "0" || name == "0L" || name == "zero") return BlockState::kZero;
    if (name == "1" || name == "1L" || name == "one") return BlockState::kOne;
    throw ConfigError("unknown block state '" + std::string(name) + "'");
}

BasisSet dfs_basis(LogicalBlock block, int n_total, BlockState spectator) {
    check_layout(n_total, block.index(), "dfs_basis");
    std::vector<BlockState> states(static_cast<std::size_t>(n_total / 3), spectator);
    std::vector<StateVector> vectors;
    std::vector<std::string> labels;
    for (BlockState s : {BlockState::kAncilla, BlockState::kZero, BlockState::kOne}) {
        states[static_cast<std::size_t>(block.index() - 1)] = s;
        vectors.push_back(computational_state(register_bits(n_total, states)));
        labels.push_back(s == BlockState::kAncilla ? "a" : logical_label(s) + "L");
    }
    return BasisSet(n_total, std::move(vectors), std::move(labels));
}

namespace {

// Enumerates assignments of `alphabet` to the listed blocks, first block most significant.
BasisSet product_basis(std::span<const LogicalBlock> blocks, int n_total, BlockState spectator,
                       const std::vector<BlockState>& alphabet, const char* what) {
    if (blocks.empty()) {
        throw ConfigError(std::string(what) + ": no blocks given");
    }
    check_distinct(blocks, what);
    for (const auto& b : blocks) check_layout(n_total, b.index(), what);
    std::vector<BlockState> states(static_cast<std::size_t>(n_total / 3), spectator);
    std::vector<StateVector> vectors;
    std::vector<std::string> labels;
    std::vector<std::size_t> digits(blocks.size(), 0);
    while (true) {
        std::string label;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            BlockState s = alphabet[digits[i]];
            states[static_cast<std::size_t>(blocks[i].index() - 1)] = s;
            label += logical_label(s);
        }
        vectors.push_back(computational_state(register_bits(n_total, states)));
        labels.push_back(label);
        std::size_t pos = blocks.size();
        while (pos > 0) {
            --pos;
            if (++digits[pos] < alphabet.size()) break;
            digits[pos] = 0;
            if (pos == 0) return BasisSet(n_total, std::move(vectors), std::move(labels));
        }
    }
}

}  // namespace

BasisSet logical_basis(std::span<const LogicalBlock> blocks, int n_total, BlockState spectator) {
    return product_basis(blocks, n_total, spectator, {BlockState::kZero, BlockState::kOne}, "logical_basis");
}

BasisSet dfs_product_basis(std::span<const LogicalBlock> blocks, int n_total, BlockState spectator) {
    return product_basis(blocks, n_total, spectator, {BlockState::kAncilla, BlockState::kZero, BlockState::kOne},
                         "dfs_product_basis");
}

BasisSet cnot_invariant_basis(LogicalBlock control, LogicalBlock target, int n_total, BlockState spectator) {
    const LogicalBlock pair[] = {control, target};
    BasisSet product = dfs_product_basis(pair, n_total, spectator);
    std::vector<StateVector> vectors;
    std::vector<std::string> labels;
    for (std::string wanted : {"aa", "00", "01", "10", "11"}) {
        auto it = std::find(product.labels().begin(), product.labels().end(), wanted);
        auto idx = static_cast<std::size_t>(it - product.labels().begin());
        vectors.push_back(product.vectors()[idx]);
        labels.push_back(wanted);
    }
    return BasisSet(n_total, std::move(vectors), std::move(labels));
}

ComplexMatrix restrict(const ComplexMatrix& op, const BasisSet& basis) {
    if (op.rows() != basis.dim_ambient() || op.cols() != basis.dim_ambient()) {
        throw ShapeError("restrict: operator is " + std::to_string(op.rows()) + "x" + std::to_string(op.cols()) +
                         ", basis lives in dimension " + std::to_string(basis.dim_ambient()));
    }
    return basis.columns().adjoint() * op * basis.columns();
}

double invariance_defect(const ComplexMatrix& u, const BasisSet& basis) {
    if (u.rows() != basis.dim_ambient() || u.cols() != basis.dim_ambient()) {
        throw ShapeError("invariance_defect: dimension mismatch");
    }
    // (I − P)·u·P = (u·B − B·(B†·u·B))·B†, and ‖X·B†‖_F = ‖X‖_F for orthonormal columns B.
    const ComplexMatrix& b = basis.columns();
    ComplexMatrix ub = u * b;
    return (ub - b * (b.adjoint() * ub)).norm();
}

std::vector<LeakageSample> leakage_profile(const HermitianOperator& h, const BasisSet& inner,
                                           const BasisSet& outer, double tau, int steps) {
    if (steps < 1) {
        throw ConfigError("leakage_profile: steps must be positive");
    }
    if (inner.dim_ambient() != h.dim() || outer.dim_ambient() != h.dim()) {
        throw ShapeError("leakage_profile: dimension mismatch");
    }
    const ComplexMatrix& bi = inner.columns();
    const ComplexMatrix& bo = outer.columns();
    double nesting = (bi - bo * (bo.adjoint() * bi)).norm();
    if (nesting > kNestingTolerance) {
        throw ConfigError("leakage_profile: inner basis is not contained in the outer span");
    }
    SpectralPropagator propagator(h);
    std::vector<LeakageSample> out;
    out.reserve(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i) {
        double t = tau * static_cast<double>(i) / static_cast<double>(steps);
        ComplexMatrix states = propagator.apply(t, bi);
        Eigen::VectorXd kept_outer = (bo.adjoint() * states).colwise().squaredNorm();
        Eigen::VectorXd kept_inner = (bi.adjoint() * states).colwise().squaredNorm();
        Eigen::VectorXd total = states.colwise().squaredNorm();
        LeakageSample s;
        s.time = t;
        s.outer = std::max(0.0, (total - kept_outer).maxCoeff());
        s.inner = std::max(0.0, (total - kept_inner).maxCoeff());
        out.push_back(s);
    }
    return out;
}

}  // namespace hqcdfs
