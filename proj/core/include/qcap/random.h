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

#ifndef QCAP_RANDOM_H
#define QCAP_RANDOM_H

#include <cstdint>
#include <random>

#include "qcap/channel.h"
#include "qcap/state.h"

namespace qcap {

using Rng = std::mt19937_64;

CVector random_ket(size_t dim, Rng &rng);
/// Ginibre-distributed density matrix of full rank.
QuantumState random_state(size_t dim, Rng &rng);
CMatrix random_unitary(size_t dim, Rng &rng);
/// Haar-like random isometry split into `kraus_count` Kraus blocks. Requires
/// d_out·kraus_count ≥ d_in.
KrausChannel random_channel(size_t d_in, size_t d_out, size_t kraus_count, Rng &rng);
/// Probabilities from normalized exponentials (flat Dirichlet).
std::vector<double> random_distribution(size_t n, Rng &rng);
Ensemble random_pure_ensemble(size_t dim, size_t size, Rng &rng);
HierarchicalEnsemble random_hierarchical(size_t dim, size_t outer, size_t inner, Rng &rng);

/// Number of worker threads for restarts: $QCAP_THREADS, default 1.
size_t worker_threads();

}  // namespace qcap

#endif
