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

#ifndef QCAP_LINALG_H
#define QCAP_LINALG_H

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "qcap/error.h"

namespace qcap {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Bipartite dimensions of a composite system A⊗B. Row index of a composite
/// operator is a·dim_b + b.
struct Dims {
    size_t a;
    size_t b;
    size_t total() const {
        return a * b;
    }
};

enum class Subsystem { A, B };

struct HermitianEig {
    RVector eigenvalues;  // ascending
    CMatrix eigenvectors;  // columns
};

/// Eigenvalues below this contribute nothing to entropies (0·log 0 := 0).
inline constexpr double kEntropyClamp = 1e-12;

/// Decomposes a Hermitian matrix. The input is symmetrized before solving, so
/// asymmetry up to 1e-8·max(1, ‖M‖_F) is tolerated.
HermitianEig herm_eig(const CMatrix &m);

/// Eigenvalues only (ascending). Same preconditions as herm_eig.
RVector herm_eigenvalues(const CMatrix &m);

/// -Σ λ log₂ λ over a spectrum, skipping λ ≤ kEntropyClamp.
double spectrum_entropy(const RVector &eigenvalues);

/// Entropy in bits of a Hermitian PSD matrix, no state validation.
double matrix_entropy(const CMatrix &m);

/// log₂ of a PSD matrix with eigenvalues floored at `floor`.
CMatrix log2_psd(const CMatrix &m, double floor = kEntropyClamp);

CMatrix partial_trace(const CMatrix &m, Dims dims, Subsystem keep);
CMatrix partial_transpose(const CMatrix &m, Dims dims, Subsystem on);
CMatrix kron(const CMatrix &a, const CMatrix &b);

double frobenius_norm(const CMatrix &m);
/// Sum of singular values.
double trace_norm(const CMatrix &m);
/// ‖M − M†‖_F.
double hermiticity_defect(const CMatrix &m);
CMatrix hermitian_part(const CMatrix &m);
bool all_finite(const CMatrix &m);

/// Projects a Hermitian matrix onto the PSD cone by eigenvalue clipping.
CMatrix project_psd(const CMatrix &m);

}  // namespace qcap

#endif
