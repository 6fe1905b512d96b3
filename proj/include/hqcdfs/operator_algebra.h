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

#ifndef HQCDFS_OPERATOR_ALGEBRA_H
#define HQCDFS_OPERATOR_ALGEBRA_H

#include <complex>

#include <Eigen/Dense>

#include "hqcdfs/errors.h"

namespace hqcdfs {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Largest row or column count any constructed operator may have.
inline constexpr Eigen::Index kMaxDimension = Eigen::Index{1} << 14;

/// Default hermiticity tolerance per unit of dimension, ‖A − A†‖_F ≤ kHermitianTolerance·dim.
inline constexpr double kHermitianTolerance = 1e-12;
/// Default unitarity tolerance per unit of dimension, ‖U†U − I‖_F ≤ kUnitaryTolerance·dim.
inline constexpr double kUnitaryTolerance = 1e-10;

enum class Axis { kX, kY, kZ };

char axis_name(Axis axis);
Axis parse_axis(char c);

/// The 2x2 Pauli matrix for `axis`.
const ComplexMatrix& pauli(Axis axis);

/// Throws ContractViolation unless every entry is finite and both dimensions are positive.
void require_finite(const ComplexMatrix& m, const char* what);

/// Square matrix with a checked hermiticity contract.
class HermitianOperator {
   public:
    explicit HermitianOperator(ComplexMatrix m);
    HermitianOperator(ComplexMatrix m, double tolerance);

    static HermitianOperator zero(Eigen::Index dim);

    const ComplexMatrix& matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }
    double tolerance() const { return tolerance_; }

    HermitianOperator operator+(const HermitianOperator& other) const;
    HermitianOperator operator-(const HermitianOperator& other) const;
    HermitianOperator operator*(double scale) const;
    HermitianOperator& operator+=(const HermitianOperator& other);

   private:
    ComplexMatrix matrix_;
    double tolerance_;
};

/// Square matrix with a checked unitarity contract.
class UnitaryOperator {
   public:
    explicit UnitaryOperator(ComplexMatrix m);
    UnitaryOperator(ComplexMatrix m, double tolerance);

    static UnitaryOperator identity(Eigen::Index dim);

    const ComplexMatrix& matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }

    UnitaryOperator adjoint() const;
    /// Operator product `*this · other`.
    UnitaryOperator operator*(const UnitaryOperator& other) const;

   private:
    ComplexMatrix matrix_;
};

/// ‖U†U − I‖_F.
double unitarity_defect(const ComplexMatrix& m);
/// ‖A − A†‖_F.
double hermiticity_defect(const ComplexMatrix& m);

/// Kronecker product a ⊗ b.
///
/// Throws DimensionCapError when either resulting dimension would exceed `cap`.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b, Eigen::Index cap = kMaxDimension);

/// I ⊗ … ⊗ σ^axis ⊗ … ⊗ I on `n` qubits with the Pauli factor at 1-based slot `k`.
///
/// Qubit 1 is the most significant bit of the computational-basis index.
HermitianOperator pauli_on(Axis axis, int k, int n);

/// Cached eigendecomposition of a time-independent Hamiltonian.
///
/// Evaluates exp(−i·h·t) for many t without repeating the diagonalization.
class SpectralPropagator {
   public:
    explicit SpectralPropagator(const HermitianOperator& h);

    Eigen::Index dim() const { return eigenvalues_.size(); }
    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

    /// exp(−i·h·t) as a dense unitary.
    UnitaryOperator at(double t) const;
    /// exp(−i·h·t)·states, without forming the full propagator.
    ComplexMatrix apply(double t, const ComplexMatrix& states) const;

   private:
    Eigen::VectorXd eigenvalues_;
    ComplexMatrix eigenvectors_;
};

/// exp(−i·h·t) with ħ = 1, by spectral decomposition.
UnitaryOperator evolve(const HermitianOperator& h, double t);

/// Unitary factor U of the polar decomposition m = U·P.
///
/// Throws SingularChainError when the smallest singular value is ≤ 1e-12.
UnitaryOperator polar_unitary(const ComplexMatrix& m);

/// min over φ of ‖u − e^{iφ}v‖_F, as sqrt(2d − 2|Tr(v†u)|).
double phase_aligned_distance(const UnitaryOperator& u, const UnitaryOperator& v);

/// min over φ of ‖a − e^{iφ}b‖_F for arbitrary same-shape matrices.
///
/// Agrees with phase_aligned_distance when both arguments are unitary; used
/// for restricted propagators that leak out of the compared subspace.
double phase_aligned_frobenius(const ComplexMatrix& a, const ComplexMatrix& b);

/// ‖[a, b]‖_F.
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace hqcdfs

#endif  // HQCDFS_OPERATOR_ALGEBRA_H
