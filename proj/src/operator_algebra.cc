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

#include "hqcdfs/operator_algebra.h"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace hqcdfs {

namespace {

double default_hermitian_tolerance(const ComplexMatrix& m) {
    return kHermitianTolerance * static_cast<double>(m.rows());
}

void require_square(const ComplexMatrix& m, const char* what) {
    if (m.rows() != m.cols()) {
        throw ShapeError(std::string(what) + ": expected a square matrix, got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
    }
}

}  // namespace

char axis_name(Axis axis) {
    switch (axis) {
        case Axis::kX:
            return 'x';
        case Axis::kY:
            return 'y';
        case Axis::kZ:
            return 'z';
    }
    return '?';
}

Axis parse_axis(char c) {
    switch (c) {
        case 'x':
        case 'X':
            return Axis::kX;
        case 'y':
        case 'Y':
            return Axis::kY;
        case 'z':
        case 'Z':
            return Axis::kZ;
        default:
            throw ConfigError(std::string("unknown axis '") + c + "'");
    }
}

const ComplexMatrix& pauli(Axis axis) {
    static const ComplexMatrix x = (ComplexMatrix(2, 2) << 0, 1, 1, 0).finished();
    static const ComplexMatrix y = (ComplexMatrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished();
    static const ComplexMatrix z = (ComplexMatrix(2, 2) << 1, 0, 0, -1).finished();
    switch (axis) {
        case Axis::kX:
            return x;
        case Axis::kY:
            return y;
        case Axis::kZ:
            return z;
    }
    return z;
}

void require_finite(const ComplexMatrix& m, const char* what) {
    if (m.rows() < 1 || m.cols() < 1) {
        throw ContractViolation(std::string(what) + ": empty matrix");
    }
    if (!m.allFinite()) {
        throw ContractViolation(std::string(what) + ": non-finite entry");
    }
}

double unitarity_defect(const ComplexMatrix& m) {
    return (m.adjoint() * m - ComplexMatrix::Identity(m.cols(), m.cols())).norm();
}

double hermiticity_defect(const ComplexMatrix& m) {
    return (m - m.adjoint()).norm();
}

HermitianOperator::HermitianOperator(ComplexMatrix m) : HermitianOperator(m, default_hermitian_tolerance(m)) {}

HermitianOperator::HermitianOperator(ComplexMatrix m, double tolerance) : matrix_(std::move(m)), tolerance_(tolerance) {
    require_finite(matrix_, "HermitianOperator");
    require_square(matrix_, "HermitianOperator");
    if (!(tolerance_ >= 0)) {
        throw ContractViolation("HermitianOperator: negative tolerance");
    }
    double defect = hermiticity_defect(matrix_);
    if (defect > tolerance_) {
        throw ContractViolation("HermitianOperator: ‖A − A†‖_F = " + std::to_string(defect) + " exceeds " +
                                std::to_string(tolerance_));
    }
}

HermitianOperator HermitianOperator::zero(Eigen::Index dim) {
    return HermitianOperator(ComplexMatrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& other) const {
    HermitianOperator result = *this;
    result += other;
    return result;
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& other) const {
    return *this + other * -1.0;
}

HermitianOperator HermitianOperator::operator*(double scale) const {
    return HermitianOperator(matrix_ * scale, std::max(tolerance_, default_hermitian_tolerance(matrix_)));
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& other) {
    if (other.dim() != dim()) {
        throw ShapeError("HermitianOperator: dimension mismatch in sum");
    }
    matrix_ += other.matrix_;
    tolerance_ = std::max(tolerance_, other.tolerance_);
    return *this;
}

UnitaryOperator::UnitaryOperator(ComplexMatrix m)
    : UnitaryOperator(m, kUnitaryTolerance * static_cast<double>(m.rows())) {}

UnitaryOperator::UnitaryOperator(ComplexMatrix m, double tolerance) : matrix_(std::move(m)) {
    require_finite(matrix_, "UnitaryOperator");
    require_square(matrix_, "UnitaryOperator");
    double defect = unitarity_defect(matrix_);
    if (defect > tolerance) {
        throw ContractViolation("UnitaryOperator: ‖U†U − I‖_F = " + std::to_string(defect) + " exceeds " +
                                std::to_string(tolerance));
    }
}

UnitaryOperator UnitaryOperator::identity(Eigen::Index dim) {
    return UnitaryOperator(ComplexMatrix::Identity(dim, dim));
}

UnitaryOperator UnitaryOperator::adjoint() const {
    return UnitaryOperator(matrix_.adjoint());
}

UnitaryOperator UnitaryOperator::operator*(const UnitaryOperator& other) const {
    if (other.dim() != dim()) {
        throw ShapeError("UnitaryOperator: dimension mismatch in product");
    }
    return UnitaryOperator(matrix_ * other.matrix_);
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b, Eigen::Index cap) {
    if (a.rows() > cap / b.rows() || a.cols() > cap / b.cols()) {
        throw DimensionCapError("tensor_product: result " + std::to_string(a.rows()) + "·" + std::to_string(b.rows()) +
                                " x " + std::to_string(a.cols()) + "·" + std::to_string(b.cols()) +
                                " exceeds dimension cap " + std::to_string(cap));
    }
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

HermitianOperator pauli_on(Axis axis, int k, int n) {
    if (n < 1) {
        throw IndexError("pauli_on: qubit count must be positive, got " + std::to_string(n));
    }
    if (k < 1 || k > n) {
        throw IndexError("pauli_on: qubit " + std::to_string(k) + " outside 1.." + std::to_string(n));
    }
    if (n >= 63 || (Eigen::Index{1} << n) > kMaxDimension) {
        throw DimensionCapError("pauli_on: 2^" + std::to_string(n) + " exceeds dimension cap");
    }
    // Slot 1 is the leftmost factor, which makes qubit 1 the most significant bit.
    ComplexMatrix left = ComplexMatrix::Identity(Eigen::Index{1} << (k - 1), Eigen::Index{1} << (k - 1));
    ComplexMatrix right = ComplexMatrix::Identity(Eigen::Index{1} << (n - k), Eigen::Index{1} << (n - k));
    return HermitianOperator(tensor_product(tensor_product(left, pauli(axis)), right));
}

SpectralPropagator::SpectralPropagator(const HermitianOperator& h) {
    // Symmetrize so the solver sees an exactly self-adjoint input.
    ComplexMatrix sym = 0.5 * (h.matrix() + h.matrix().adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw ContractViolation("SpectralPropagator: eigendecomposition failed");
    }
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();
}

UnitaryOperator SpectralPropagator::at(double t) const {
    Eigen::VectorXcd phases = (eigenvalues_.cast<Complex>() * Complex(0, -t)).array().exp();
    return UnitaryOperator(eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint());
}

ComplexMatrix SpectralPropagator::apply(double t, const ComplexMatrix& states) const {
    if (states.rows() != dim()) {
        throw ShapeError("SpectralPropagator::apply: state dimension mismatch");
    }
    Eigen::VectorXcd phases = (eigenvalues_.cast<Complex>() * Complex(0, -t)).array().exp();
    return eigenvectors_ * (phases.asDiagonal() * (eigenvectors_.adjoint() * states));
}

UnitaryOperator evolve(const HermitianOperator& h, double t) {
    if (t == 0) {
        return UnitaryOperator::identity(h.dim());
    }
    return SpectralPropagator(h).at(t);
}

UnitaryOperator polar_unitary(const ComplexMatrix& m) {
    require_finite(m, "polar_unitary");
    require_square(m, "polar_unitary");
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    double smallest = svd.singularValues().minCoeff();
    if (!(smallest > 1e-12)) {
        throw SingularChainError("polar_unitary: smallest singular value " + std::to_string(smallest) +
                                 " ≤ 1e-12 (rank-deficient overlap)");
    }
    return UnitaryOperator(svd.matrixU() * svd.matrixV().adjoint());
}

double phase_aligned_distance(const UnitaryOperator& u, const UnitaryOperator& v) {
    if (u.dim() != v.dim()) {
        throw ShapeError("phase_aligned_distance: dimension mismatch");
    }
    return phase_aligned_frobenius(u.matrix(), v.matrix());
}

double phase_aligned_frobenius(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("phase_aligned_frobenius: shape mismatch");
    }
    // Evaluated as ‖a − e^{iα} b‖ at the optimal α rather than through the
    // expanded square, which loses half the digits near zero.
    std::complex<double> overlap = (b.adjoint() * a).trace();
    std::complex<double> phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : 1.0;
    return (a - phase * b).norm();
}

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
        throw ShapeError("commutator_norm: shape mismatch");
    }
    return (a * b - b * a).norm();
}

}  // namespace hqcdfs
