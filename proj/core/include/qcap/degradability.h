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

#ifndef QCAP_DEGRADABILITY_H
#define QCAP_DEGRADABILITY_H

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcap/channel.h"

namespace qcap {

enum class Verdict { Degradable, AntiDegradable, PdFeasible, InfeasibleAtTolerance };

std::string_view verdict_name(Verdict v);

struct SolverOptions {
    /// Frobenius residual of unnormalized Choi matrices below which a map counts
    /// as found.
    double tol = 1e-6;
    size_t max_iters = 20000;
    /// Starting Choi matrix for the connecting map. Defaults to the completely
    /// depolarizing map.
    std::optional<CMatrix> initial;
};

/// Best CPTP map M found for min ‖Choi(M ∘ source) − Choi(target)‖_F.
struct ConnectingMap {
    ChoiMatrix map;
    double residual;
    size_t iterations;
    /// False when max_iters ran out before the stopping rule fired.
    bool converged;
    /// Residual after each iteration; non-increasing.
    std::vector<double> history;
};

/// Solves the convex least-squares problem over Choi(M) by monotone accelerated
/// projected gradient with step 1/L. Projection onto CPTP maps alternates
/// between eigenvalue clipping and the trace-preserving affine correction
/// (Dykstra). Deterministic for fixed inputs.
ConnectingMap find_connecting_map(const KrausChannel &source, const KrausChannel &target, const SolverOptions &opts = {});

struct DegradabilityCertificate {
    Verdict verdict;
    ChoiMatrix connecting_map;
    std::optional<ChoiMatrix> degradation_map;
    double residual;
    size_t iterations;
    double tolerance;
};

/// D with D ∘ N = N_c.
DegradabilityCertificate is_degradable(const KrausChannel &n, const SolverOptions &opts = {});
/// A with A ∘ N_c = N.
DegradabilityCertificate is_antidegradable(const KrausChannel &n, const SolverOptions &opts = {});
/// T with T ∘ N = D ∘ N_c for the given degradation map D on the environment.
DegradabilityCertificate is_partially_degradable(
    const KrausChannel &n, const KrausChannel &degradation, const SolverOptions &opts = {});

struct SearchOptions {
    size_t degraded_env_dim = 2;
    double tol = 1e-6;
    size_t restarts = 8;
    size_t max_iters = 20000;
    /// Alternations between the T-step and the D-step per restart.
    size_t rounds = 20;
    uint64_t seed = 1;
};

/// Alternating search over the bilinear pair (T, D). Restart k draws its initial
/// D from seed + k; restart 0 starts from D = identity when the degraded
/// environment has the same dimension as the environment. An infeasible verdict
/// means nothing was found, not that no pair exists.
DegradabilityCertificate search_degradation_map(const KrausChannel &n, const SearchOptions &opts = {});

nlohmann::json certificate_to_json(const DegradabilityCertificate &cert);

}  // namespace qcap

#endif
