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

#ifndef HQCDFS_MODEL_H
#define HQCDFS_MODEL_H

#include <string>
#include <string_view>
#include <vector>

#include "hqcdfs/operator_algebra.h"

namespace hqcdfs {

/// One two-body coupling J_kl^axis multiplying R_kl^axis, axis ∈ {x, y}.
struct TwoBodyTerm {
    int k = 0;
    int l = 0;
    Axis axis = Axis::kX;
    double value = 0;
};

enum class AxisPair { kXX, kXY, kYX, kYY };

std::string axis_pair_name(AxisPair pair);
AxisPair parse_axis_pair(std::string_view name);

/// One four-body coupling multiplying R_kl^a · R_pq^b.
struct FourBodyTerm {
    int k = 0;
    int l = 0;
    int p = 0;
    int q = 0;
    AxisPair axes = AxisPair::kXX;
    double value = 0;
};

/// The controllable coupling constants of a Hamiltonian instance.
///
/// Absent terms mean zero coupling; repeated keys add.
struct CouplingConfig {
    int n_qubits = 0;
    std::vector<TwoBodyTerm> two_body;
    std::vector<FourBodyTerm> four_body;

    /// Throws IndexError for out-of-range or unordered indices, ConfigError for
    /// bad axes or overlapping four-body pairs.
    void validate() const;
};

/// R^x_kl = (σ_k^x σ_l^x + σ_k^y σ_l^y)/2 or R^y_kl = (σ_k^x σ_l^y − σ_k^y σ_l^x)/2.
HermitianOperator r_op(Axis axis, int k, int l, int n);

/// Σ J_kl^axis R_kl^axis over the two-body terms.
HermitianOperator assemble_two_body(const CouplingConfig& config);

/// Σ J · R_kl^a R_pq^b over the four-body terms.
HermitianOperator assemble_four_body(const CouplingConfig& config);

/// Two-body plus four-body parts.
HermitianOperator assemble(const CouplingConfig& config);

/// Σ_k σ_k^z on `n` qubits.
HermitianOperator collective_z(int n);

enum class GateKind { kXZ, kZX, kCNOT };

std::string gate_kind_name(GateKind kind);
GateKind parse_gate_kind(std::string_view name);

/// Pulse area strength·duration that a kind's recipe must satisfy:
/// π/√2 for XZ and CNOT, π for ZX.
double nominal_pulse_area(GateKind kind);

/// Tolerance on |strength·duration − nominal| for non-detuned recipes.
inline constexpr double kPulseAreaTolerance = 1e-12;

/// A gate pulse prescription: constant couplings of the given strength held for `duration`.
///
/// Blocks are 1-based logical-qubit indices. XZ and ZX act on one block; CNOT
/// takes (control, target).
class GateRecipe {
   public:
    /// Checked constructor: the pulse area must match nominal_pulse_area(kind).
    static GateRecipe make(GateKind kind, double phase, double strength, double duration, std::vector<int> blocks);
    /// Any positive pulse area; the recipe is flagged as detuned.
    static GateRecipe detuned(GateKind kind, double phase, double strength, double duration, std::vector<int> blocks);

    /// Duration chosen so the pulse area is nominal.
    static GateRecipe xz(double phase, double strength = 1.0, int block = 1);
    static GateRecipe zx(double phase, double strength = 1.0, int block = 1);
    static GateRecipe cnot(double strength = 1.0, int control = 1, int target = 2);

    GateKind kind() const { return kind_; }
    double phase() const { return phase_; }
    double strength() const { return strength_; }
    double duration() const { return duration_; }
    const std::vector<int>& blocks() const { return blocks_; }
    bool is_detuned() const { return detuned_; }

    double pulse_area() const { return strength_ * duration_; }
    /// pulse_area() − nominal_pulse_area(kind()).
    double pulse_area_error() const;
    /// Largest block index referenced.
    int max_block() const;

    /// Same recipe with a different phase; keeps the detuned flag.
    GateRecipe with_phase(double phase) const;

   private:
    GateRecipe(GateKind kind, double phase, double strength, double duration, std::vector<int> blocks,
               bool detuned);

    GateKind kind_;
    double phase_;
    double strength_;
    double duration_;
    std::vector<int> blocks_;
    bool detuned_;
};

/// Couplings realizing `recipe` on a register of 3·n_blocks physical qubits.
///
/// For logical block n, R_12 → R_{3n−2,3n−1} and R_13 → R_{3n−2,3n}; for CNOT
/// on (m, n), R_13 R_45 → R_{3m−2,3m} R_{3n−2,3n−1} and R_13 R_46 → R_{3m−2,3m} R_{3n−2,3n}.
CouplingConfig recipe_couplings(const GateRecipe& recipe, int n_blocks);

HermitianOperator recipe_hamiltonian(const GateRecipe& recipe, int n_blocks);

}  // namespace hqcdfs

#endif  // HQCDFS_MODEL_H
