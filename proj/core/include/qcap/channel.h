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

#ifndef QCAP_CHANNEL_H
#define QCAP_CHANNEL_H

#include <vector>

#include "qcap/linalg.h"
#include "qcap/state.h"

namespace qcap {

/// Trace-preserving map in Kraus form, ρ ↦ Σ K ρ K†. Each operator is
/// d_out × d_in. The Kraus index doubles as the environment basis of the
/// associated Stinespring dilation.
class KrausChannel {
   public:
    /// Throws InvalidChannel if ‖Σ K†K − I‖_F > tol.
    KrausChannel(size_t d_in, size_t d_out, std::vector<CMatrix> operators, double tol = 1e-8);

    size_t d_in() const {
        return d_in_;
    }
    size_t d_out() const {
        return d_out_;
    }
    size_t kraus_count() const {
        return ops_.size();
    }
    const std::vector<CMatrix> &operators() const {
        return ops_;
    }

    /// Action on an arbitrary d_in × d_in operator.
    CMatrix apply(const CMatrix &x) const;
    /// Heisenberg-picture adjoint Σ K† Y K.
    CMatrix apply_adjoint(const CMatrix &y) const;

    /// ‖Σ K†K − I‖_F.
    double tp_residual() const;

   private:
    size_t d_in_;
    size_t d_out_;
    std::vector<CMatrix> ops_;
};

/// Unnormalized Choi matrix J(N) = Σ_ij |i⟩⟨j| ⊗ N(|i⟩⟨j|), ordered
/// input ⊗ output.
class ChoiMatrix {
   public:
    /// Throws NotCP if the minimum eigenvalue is below −tol, NotTP if
    /// ‖Tr_out J − I‖_F > tol.
    ChoiMatrix(size_t d_in, size_t d_out, CMatrix matrix, double tol = 1e-8);

    size_t d_in() const {
        return d_in_;
    }
    size_t d_out() const {
        return d_out_;
    }
    const CMatrix &matrix() const {
        return matrix_;
    }
    Dims dims() const {
        return {d_in_, d_out_};
    }

   private:
    size_t d_in_;
    size_t d_out_;
    CMatrix matrix_;
};

/// Isometry V: H_in → H_out ⊗ H_env with V|ψ⟩ = Σ_k K_k|ψ⟩ ⊗ |k⟩.
struct StinespringIsometry {
    size_t d_in;
    size_t d_out;
    size_t d_env;
    CMatrix v;  // (d_out·d_env) × d_in
};

/// Minimum eigenvalue and TP residual of a candidate Choi matrix.
struct ChoiDefects {
    double min_eigenvalue;
    double tp_residual;
};
ChoiDefects choi_defects(size_t d_in, size_t d_out, const CMatrix &j);

ChoiMatrix kraus_to_choi(const KrausChannel &n);
/// Kraus operators from the eigendecomposition of J, descending eigenvalue
/// order, each scaled so its first non-negligible entry is real positive.
KrausChannel choi_to_kraus(const ChoiMatrix &j);
StinespringIsometry kraus_to_stinespring(const KrausChannel &n);

/// Reduces a Kraus list to its Choi rank, keeping the given operators when
/// they are already linearly independent.
KrausChannel minimal_kraus(const KrausChannel &n);

/// Channel to the environment, ρ ↦ Tr_out(VρV†). The environment has one level
/// per Kraus operator of minimal_kraus(n).
KrausChannel complementary_channel(const KrausChannel &n);

QuantumState apply(const KrausChannel &n, const QuantumState &rho);

/// second ∘ first.
KrausChannel compose(const KrausChannel &second, const KrausChannel &first);
KrausChannel tensor(const KrausChannel &a, const KrausChannel &b);
KrausChannel tensor_power(const KrausChannel &n, size_t copies);

/// Trace norm of the difference of Choi matrices; channels are equal iff this
/// vanishes.
double choi_distance(const KrausChannel &a, const KrausChannel &b);

/// Pair of channels from one sender to a legitimate receiver and to an
/// eavesdropper. Built either from a channel and its complementary, or with
/// the eavesdropper's output further degraded.
struct WiretapChannel {
    KrausChannel main;
    KrausChannel eve;

    static WiretapChannel of(const KrausChannel &n);
    /// (N, D ∘ N_c).
    static WiretapChannel degraded(const KrausChannel &n, const KrausChannel &degradation);
};

}  // namespace qcap

#endif
