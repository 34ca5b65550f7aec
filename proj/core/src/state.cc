// Copyright 2026 The qcap Authors
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

#include "qcap/state.h"

#include <cmath>
#include <numeric>
#include <string>

namespace qcap {

namespace {

void check_distribution(const std::vector<double> &probs, const char *what) {
    if (probs.empty()) {
        throw Error(ErrorKind::InvalidState, std::string(what) + ": empty distribution");
    }
    double total = 0;
    for (double p : probs) {
        if (!std::isfinite(p) || p < 0) {
            throw Error(ErrorKind::InvalidState, std::string(what) + ": negative or non-finite probability");
        }
        total += p;
    }
    if (std::abs(total - 1) > 1e-10) {
        throw Error(ErrorKind::InvalidState, std::string(what) + ": probabilities sum to " + std::to_string(total));
    }
}

}  // namespace

QuantumState::QuantumState(CMatrix matrix, double tol) : matrix_(std::move(matrix)) {
    if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
        throw Error(ErrorKind::InvalidState, "density matrix must be square and non-empty");
    }
    if (!all_finite(matrix_)) {
        throw Error(ErrorKind::InvalidState, "density matrix has non-finite entries");
    }
    double defect = hermiticity_defect(matrix_);
    if (defect > tol) {
        throw Error(ErrorKind::InvalidState, "density matrix not Hermitian, defect " + std::to_string(defect));
    }
    matrix_ = hermitian_part(matrix_);
    double trace = matrix_.trace().real();
    if (std::abs(trace - 1) > tol) {
        throw Error(ErrorKind::InvalidState, "density matrix trace is " + std::to_string(trace));
    }
    double min_eig = herm_eigenvalues(matrix_)(0);
    if (min_eig < -tol) {
        throw Error(ErrorKind::InvalidState, "density matrix has eigenvalue " + std::to_string(min_eig));
    }
}

QuantumState QuantumState::pure(const CVector &ket) {
    double norm = ket.norm();
    if (!(norm > 0) || !std::isfinite(norm)) {
        throw Error(ErrorKind::InvalidState, "cannot normalize a zero or non-finite ket");
    }
    CVector psi = ket / norm;
    return QuantumState(psi * psi.adjoint());
}

QuantumState QuantumState::basis(size_t dim, size_t index) {
    CVector ket = CVector::Zero(static_cast<Eigen::Index>(dim));
    ket(static_cast<Eigen::Index>(index)) = 1;
    return pure(ket);
}

QuantumState QuantumState::maximally_mixed(size_t dim) {
    auto d = static_cast<Eigen::Index>(dim);
    return QuantumState(CMatrix::Identity(d, d) / static_cast<double>(dim));
}

double QuantumState::purity() const {
    return (matrix_ * matrix_).trace().real();
}

double von_neumann_entropy(const QuantumState &rho) {
    return matrix_entropy(rho.matrix());
}

Ensemble::Ensemble(std::vector<double> probs, std::vector<QuantumState> states)
    : probs_(std::move(probs)), states_(std::move(states)) {
    check_distribution(probs_, "Ensemble");
    if (probs_.size() != states_.size()) {
        throw Error(ErrorKind::InvalidState, "Ensemble: probability and state counts differ");
    }
    for (const auto &s : states_) {
        if (s.dim() != states_.front().dim()) {
            throw Error(ErrorKind::DimensionMismatch, "Ensemble: states have different dimensions");
        }
    }
}

CMatrix Ensemble::average() const {
    auto d = static_cast<Eigen::Index>(dim());
    CMatrix avg = CMatrix::Zero(d, d);
    for (size_t i = 0; i < probs_.size(); i++) {
        avg += probs_[i] * states_[i].matrix();
    }
    return avg;
}

HierarchicalEnsemble::HierarchicalEnsemble(std::vector<double> outer_probs, std::vector<Ensemble> inner)
    : outer_probs_(std::move(outer_probs)), inner_(std::move(inner)) {
    check_distribution(outer_probs_, "HierarchicalEnsemble");
    if (outer_probs_.size() != inner_.size()) {
        throw Error(ErrorKind::InvalidState, "HierarchicalEnsemble: outer size differs from inner count");
    }
    for (const auto &ens : inner_) {
        if (ens.dim() != inner_.front().dim()) {
            throw Error(ErrorKind::DimensionMismatch, "HierarchicalEnsemble: inner ensembles differ in dimension");
        }
        for (const auto &s : ens.states()) {
            if (herm_eigenvalues(s.matrix())(s.matrix().rows() - 1) < 1 - 1e-8) {
                throw Error(ErrorKind::InvalidState, "HierarchicalEnsemble: inner states must be pure");
            }
        }
    }
}

Ensemble HierarchicalEnsemble::coarse() const {
    std::vector<QuantumState> states;
    states.reserve(inner_.size());
    for (const auto &ens : inner_) {
        states.emplace_back(ens.average());
    }
    return Ensemble(outer_probs_, std::move(states));
}

Ensemble HierarchicalEnsemble::flatten() const {
    std::vector<double> probs;
    std::vector<QuantumState> states;
    for (size_t j = 0; j < inner_.size(); j++) {
        for (size_t x = 0; x < inner_[j].size(); x++) {
            probs.push_back(outer_probs_[j] * inner_[j].probs()[x]);
            states.push_back(inner_[j].states()[x]);
        }
    }
    // Products of normalized distributions can drift by an ulp per term.
    double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    for (double &p : probs) {
        p /= total;
    }
    return Ensemble(std::move(probs), std::move(states));
}

CMatrix HierarchicalEnsemble::average() const {
    auto d = static_cast<Eigen::Index>(dim());
    CMatrix avg = CMatrix::Zero(d, d);
    for (size_t j = 0; j < inner_.size(); j++) {
        avg += outer_probs_[j] * inner_[j].average();
    }
    return avg;
}

HierarchicalEnsemble HierarchicalEnsemble::from_spectral(const QuantumState &rho) {
    HermitianEig eig = herm_eig(rho.matrix());
    std::vector<double> probs;
    std::vector<Ensemble> inner;
    for (Eigen::Index k = eig.eigenvalues.size() - 1; k >= 0; k--) {
        double lambda = eig.eigenvalues(k);
        if (lambda <= 1e-14) {
            continue;
        }
        probs.push_back(lambda);
        inner.emplace_back(std::vector<double>{1.0}, std::vector<QuantumState>{QuantumState::pure(eig.eigenvectors.col(k))});
    }
    double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    for (double &p : probs) {
        p /= total;
    }
    return HierarchicalEnsemble(std::move(probs), std::move(inner));
}

}  // namespace qcap
