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

#include "hqcdfs/holonomy.h"

#include <cmath>
#include <limits>
#include <string>

namespace hqcdfs {

namespace {

void check_dims(const HermitianOperator& h, const BasisSet& basis, const char* what) {
    if (h.dim() != basis.dim_ambient()) {
        throw ShapeError(std::string(what) + ": Hamiltonian dimension " + std::to_string(h.dim()) +
                         " differs from basis ambient dimension " + std::to_string(basis.dim_ambient()));
    }
}

double transport_at(const ComplexMatrix& h, const ComplexMatrix& evolved) {
    return (evolved.adjoint() * h * evolved).cwiseAbs().maxCoeff();
}

ComplexMatrix chain_overlap(const SpectralPropagator& propagator, const BasisSet& basis, double tau, int steps) {
    const ComplexMatrix& b = basis.columns();
    ComplexMatrix transported = b;
    for (int j = 1; j <= steps; ++j) {
        double t = tau * static_cast<double>(j) / static_cast<double>(steps);
        // P(t)·x = Φ(t)·(Φ(t)†·x) with Φ(t) the evolved basis columns.
        ComplexMatrix evolved = propagator.apply(t, b);
        transported = evolved * (evolved.adjoint() * transported);
    }
    return b.adjoint() * transported;
}

}  // namespace

double cyclicity_defect(const HermitianOperator& h, const BasisSet& basis, double tau) {
    check_dims(h, basis, "cyclicity_defect");
    ComplexMatrix evolved = SpectralPropagator(h).apply(tau, basis.columns());
    return (evolved * evolved.adjoint() - basis.projector()).norm();
}

double transport_defect(const HermitianOperator& h, const BasisSet& basis, double tau, int samples) {
    check_dims(h, basis, "transport_defect");
    if (samples < 2) {
        throw ConfigError("transport_defect: need at least 2 time samples");
    }
    SpectralPropagator propagator(h);
    double worst = 0;
    for (int i = 0; i < samples; ++i) {
        double t = tau * static_cast<double>(i) / static_cast<double>(samples - 1);
        worst = std::max(worst, transport_at(h.matrix(), propagator.apply(t, basis.columns())));
    }
    return worst;
}

double transport_defect_at_origin(const HermitianOperator& h, const BasisSet& basis) {
    check_dims(h, basis, "transport_defect_at_origin");
    return transport_at(h.matrix(), basis.columns());
}

ComplexMatrix projector_chain_overlap(const HermitianOperator& h, const BasisSet& basis, double tau, int steps) {
    check_dims(h, basis, "projector_chain_overlap");
    if (steps < 1) {
        throw ConfigError("projector_chain_overlap: steps must be positive");
    }
    return chain_overlap(SpectralPropagator(h), basis, tau, steps);
}

UnitaryOperator projector_chain_holonomy(const HermitianOperator& h, const BasisSet& basis, double tau, int steps) {
    check_dims(h, basis, "projector_chain_holonomy");
    if (steps < kMinChainSteps) {
        throw PreconditionError("projector_chain_holonomy: need at least " + std::to_string(kMinChainSteps) +
                                " steps, got " + std::to_string(steps));
    }
    double cyclic = cyclicity_defect(h, basis, tau);
    double transport = transport_defect(h, basis, tau);
    if (cyclic > kHolonomyPreconditionTolerance || transport > kHolonomyPreconditionTolerance) {
        throw PreconditionError("projector_chain_holonomy: cyclicity defect " + std::to_string(cyclic) +
                                ", transport defect " + std::to_string(transport) + " exceed " +
                                std::to_string(kHolonomyPreconditionTolerance));
    }
    return polar_unitary(projector_chain_overlap(h, basis, tau, steps));
}

HolonomyReport certify(const HermitianOperator& h, const BasisSet& basis, double tau, int steps,
                       int transport_samples) {
    check_dims(h, basis, "certify");
    HolonomyReport report;
    report.steps = steps;
    report.tau = tau;
    SpectralPropagator propagator(h);
    const ComplexMatrix& b = basis.columns();
    ComplexMatrix final_states = propagator.apply(tau, b);
    report.cyclicity_defect = (final_states * final_states.adjoint() - basis.projector()).norm();
    report.transport_defect = transport_defect(h, basis, tau, transport_samples);
    report.preconditions_met = report.cyclicity_defect <= kHolonomyPreconditionTolerance &&
                               report.transport_defect <= kHolonomyPreconditionTolerance;
    if (!report.preconditions_met || steps <= 0) {
        return report;
    }
    if (steps < kMinChainSteps) {
        throw PreconditionError("certify: need at least " + std::to_string(kMinChainSteps) + " chain steps");
    }
    ComplexMatrix restricted = b.adjoint() * final_states;
    ComplexMatrix overlap = chain_overlap(propagator, basis, tau, steps);
    UnitaryOperator holonomy = polar_unitary(overlap);
    // Cyclic evolution makes the restricted propagator unitary up to the cyclicity defect.
    report.reconstruction_distance =
        phase_aligned_distance(holonomy, UnitaryOperator(restricted, kHolonomyPreconditionTolerance * 10));
    report.chain_distance = phase_aligned_frobenius(overlap, restricted);
    report.holonomy_matrix = std::move(holonomy);
    return report;
}

double fitted_order(std::span<const int> steps, std::span<const double> errors) {
    if (steps.size() != errors.size()) {
        throw ShapeError("fitted_order: length mismatch");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (!(errors[i] > 0) || steps[i] <= 0) continue;
        double x = std::log(static_cast<double>(steps[i]));
        double y = -std::log(errors[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return (n * sxy - sx * sy) / denom;
}

ConvergenceStudy convergence_study(const HermitianOperator& h, const BasisSet& basis, double tau,
                                   std::span<const int> steps) {
    ConvergenceStudy study;
    std::vector<int> counts;
    std::vector<double> chain;
    for (int n : steps) {
        HolonomyReport r = certify(h, basis, tau, n);
        if (!r.preconditions_met) {
            throw PreconditionError("convergence_study: holonomy preconditions fail (cyclicity " +
                                    std::to_string(r.cyclicity_defect) + ", transport " +
                                    std::to_string(r.transport_defect) + ")");
        }
        study.points.push_back({n, *r.reconstruction_distance, *r.chain_distance});
        counts.push_back(n);
        chain.push_back(*r.chain_distance);
    }
    study.chain_order = fitted_order(counts, chain);
    return study;
}

}  // namespace hqcdfs
