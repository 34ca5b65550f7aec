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

#ifndef QCAP_ENTANGLEMENT_H
#define QCAP_ENTANGLEMENT_H

#include <string_view>

#include "qcap/channel.h"

namespace qcap {

struct PptResult {
    bool ppt;
    double min_eigenvalue;
};

/// Positivity of the partial transpose on B: PPT iff the minimum eigenvalue is
/// at least −tol.
PptResult is_ppt(const CMatrix &m, Dims dims, double tol = 1e-9);

/// Realigned matrix R[(i,j),(k,l)] = M[(i,k),(j,l)], shape dA² × dB².
CMatrix realign(const CMatrix &m, Dims dims);

/// Trace norm of the realigned state. Above 1 certifies entanglement; at most 1
/// decides nothing.
double realignment_value(const CMatrix &rho, Dims dims);

/// Rank-4 PPT entangled state on 3⊗3 built from the five-member "tiles"
/// unextendible product basis: (I − Σ|ψ_i⟩⟨ψ_i|)/4.
CMatrix tiles_state();

enum class ComplementaryClass { Npt, PptEntangled, PptUndetected };

std::string_view complementary_class_name(ComplementaryClass c);

struct ComplementaryClassification {
    ComplementaryClass verdict;
    double min_pt_eigenvalue;
    double realignment;
};

/// Classifies the trace-normalized Choi state of N_c across the input |
/// environment cut. PptEntangled is evidence that N_c is entanglement binding;
/// separability is never certified.
ComplementaryClassification classify_complementary(const KrausChannel &n, double tol = 1e-9);

}  // namespace qcap

#endif
