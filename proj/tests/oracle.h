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

// Test-side reference constructions that do not go through the library's
// Kronecker or Pauli code paths.

#ifndef HQCDFS_TESTS_ORACLE_H
#define HQCDFS_TESTS_ORACLE_H

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <Eigen/Dense>

namespace oracle {

using Matrix = Eigen::MatrixXcd;
using cd = std::complex<double>;
inline constexpr cd kI{0, 1};

// Single-qubit Pauli on qubit k of n by acting on basis indices bit by bit.
// Qubit 1 is the most significant bit. axis: 'x', 'y' or 'z'.
inline Matrix pauli(char axis, int k, int n) {
    const long dim = 1L << n;
    const long mask = 1L << (n - k);
    Matrix m = Matrix::Zero(dim, dim);
    for (long col = 0; col < dim; ++col) {
        bool one = (col & mask) != 0;
        switch (axis) {
            case 'x': m(col ^ mask, col) = 1; break;
            case 'y': m(col ^ mask, col) = one ? -kI : kI; break;
            default: m(col, col) = one ? -1 : 1; break;
        }
    }
    return m;
}

// Element formula (A⊗B)[i·rb + k, j·cb + l] = A[i, j]·B[k, l].
inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < out.rows(); ++i) {
        for (long j = 0; j < out.cols(); ++j) {
            out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
        }
    }
    return out;
}

// Exchange operators by their action on basis states: R^x swaps 01 ↔ 10 on (k, l),
// R^y maps |1_k 0_l⟩ → i|0_k 1_l⟩ and |0_k 1_l⟩ → −i|1_k 0_l⟩.
inline Matrix r_op(char axis, int k, int l, int n) {
    const long dim = 1L << n;
    const long mk = 1L << (n - k);
    const long ml = 1L << (n - l);
    Matrix m = Matrix::Zero(dim, dim);
    for (long col = 0; col < dim; ++col) {
        bool bk = col & mk;
        bool bl = col & ml;
        if (bk == bl) continue;
        long row = col ^ mk ^ ml;
        if (axis == 'x') {
            m(row, col) = 1;
        } else {
            m(row, col) = bk ? kI : -kI;
        }
    }
    return m;
}

inline Eigen::VectorXcd basis_state(const char* bits) {
    int n = static_cast<int>(std::char_traits<char>::length(bits));
    long index = 0;
    for (int i = 0; i < n; ++i) index = 2 * index + (bits[i] == '1');
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(1L << n);
    v(index) = 1;
    return v;
}

// Restriction of H1 to {a, 0L, 1L}.
inline Matrix h1_block(double phase, double strength) {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 1) = strength * std::exp(kI * (phase / 2));
    m(0, 2) = -strength * std::exp(-kI * (phase / 2));
    m(1, 0) = std::conj(m(0, 1));
    m(2, 0) = std::conj(m(0, 2));
    return m;
}

// U1 at the nominal pulse area on {a, 0L, 1L}.
inline Matrix u1_block(double phase) {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 0) = -1;
    m(1, 2) = std::exp(-kI * phase);
    m(2, 1) = std::exp(kI * phase);
    return m;
}

// U2 at the nominal pulse area on {a, 0L, 1L}.
inline Matrix u2_block(double phase) {
    Matrix m = Matrix::Zero(3, 3);
    m(0, 0) = -1;
    m(1, 1) = std::cos(phase);
    m(1, 2) = kI * std::sin(phase);
    m(2, 1) = -kI * std::sin(phase);
    m(2, 2) = -std::cos(phase);
    return m;
}

// U3 at the nominal pulse area on {aa, 00, 01, 10, 11}.
inline Matrix u3_block() {
    Matrix m = Matrix::Zero(5, 5);
    m(0, 0) = -1;
    m(1, 1) = 1;
    m(2, 2) = 1;
    m(3, 4) = 1;
    m(4, 3) = 1;
    return m;
}

// Three-level Λ system with one bright state coupled at rate g: population of
// the initial bright state that remains after time t is cos²(g t).
inline double bright_population(double g, double t) { return std::pow(std::cos(g * t), 2); }

// Deficit of the raw projector chain for a bright state that rotates by π/2 per
// half period and returns with sign −1: 1 − cos^N(π/N).
inline double chain_deficit(int steps) { return 1.0 - std::pow(std::cos(std::numbers::pi / steps), steps); }

inline Matrix random_unitary(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> g;
    Matrix z(dim, dim);
    for (long i = 0; i < z.size(); ++i) z(i) = cd(g(rng), g(rng));
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) q.col(i) *= std::polar(1.0, std::arg(r(i, i)));
    return q;
}

inline Matrix random_hermitian(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> g;
    Matrix z(dim, dim);
    for (long i = 0; i < z.size(); ++i) z(i) = cd(g(rng), g(rng));
    return (z + z.adjoint()) / 2.0;
}

// Phase-aligned Frobenius distance by brute-force scan refinement over the phase.
inline double brute_phase_distance(const Matrix& a, const Matrix& b) {
    double best = 1e300;
    double center = 0;
    double width = std::numbers::pi;
    for (int round = 0; round < 6; ++round) {
        double step = width / 50;
        double arg_best = center;
        for (int i = -50; i <= 50; ++i) {
            double phi = center + i * step;
            double d = (a - std::polar(1.0, phi) * b).norm();
            if (d < best) {
                best = d;
                arg_best = phi;
            }
        }
        center = arg_best;
        width = 2 * step;
    }
    return best;
}

}  // namespace oracle

#endif  // HQCDFS_TESTS_ORACLE_H
