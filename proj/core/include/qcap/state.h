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

#ifndef QCAP_STATE_H
#define QCAP_STATE_H

#include <vector>

#include "qcap/linalg.h"

namespace qcap {

/// A density matrix: Hermitian, unit trace, PSD (each within 1e-10 by default).
class QuantumState {
   public:
    explicit QuantumState(CMatrix matrix, double tol = 1e-10);

    static QuantumState pure(const CVector &ket);
    static QuantumState basis(size_t dim, size_t index);
    static QuantumState maximally_mixed(size_t dim);

    size_t dim() const {
        return static_cast<size_t>(matrix_.rows());
    }
    const CMatrix &matrix() const {
        return matrix_;
    }
    double purity() const;

   private:
    CMatrix matrix_;
};

double von_neumann_entropy(const QuantumState &rho);

/// {p_i, ρ_i}.
class Ensemble {
   public:
    Ensemble(std::vector<double> probs, std::vector<QuantumState> states);

    size_t size() const {
        return probs_.size();
    }
    size_t dim() const {
        return states_.front().dim();
    }
    const std::vector<double> &probs() const {
        return probs_;
    }
    const std::vector<QuantumState> &states() const {
        return states_;
    }
    /// Σ p_i ρ_i.
    CMatrix average() const;

   private:
    std::vector<double> probs_;
    std::vector<QuantumState> states_;
};

/// Two-level input: outer symbol x' with p(x'), and for each x' an ensemble of
/// pure states {p(x|x'), |ψ_{x,x'}⟩}. The coarse state at x' is
/// ρ^{x'} = Σ_x p(x|x') |ψ_{x,x'}⟩⟨ψ_{x,x'}|.
class HierarchicalEnsemble {
   public:
    HierarchicalEnsemble(std::vector<double> outer_probs, std::vector<Ensemble> inner);

    size_t outer_size() const {
        return outer_probs_.size();
    }
    size_t dim() const {
        return inner_.front().dim();
    }
    const std::vector<double> &outer_probs() const {
        return outer_probs_;
    }
    const std::vector<Ensemble> &inner() const {
        return inner_;
    }

    /// {p(x'), ρ^{x'}}.
    Ensemble coarse() const;
    /// Joint {p(x')p(x|x'), |ψ_{x,x'}⟩}.
    Ensemble flatten() const;
    CMatrix average() const;

    /// Outer ensemble = spectral decomposition of ρ, each inner ensemble a single
    /// eigenvector. Eigenvalues below 1e-14 are dropped.
    static HierarchicalEnsemble from_spectral(const QuantumState &rho);

   private:
    std::vector<double> outer_probs_;
    std::vector<Ensemble> inner_;
};

}  // namespace qcap

#endif
