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

#ifndef QCAP_CAPACITIES_H
#define QCAP_CAPACITIES_H

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcap/channel.h"
#include "qcap/state.h"

namespace qcap {

// ---------------------------------------------------------------------------
// Information quantities at a fixed input. All values are in bits.
// ---------------------------------------------------------------------------

/// S(N(ρ)) − S(N_c(ρ)).
double coherent_information(const KrausChannel &n, const QuantumState &rho);

/// S(N(ρ̄)) − Σ p_i S(N(ρ_i)).
double holevo_information(const KrausChannel &n, const Ensemble &ens);

/// I(A':B) − I(A':E) on the coarse ensemble {p(x'), ρ^{x'}}, with B and E the
/// two outputs of the wiretap pair. May be negative.
double private_information_value(const WiretapChannel &pair, const HierarchicalEnsemble &h);
double private_information_value(const KrausChannel &n, const HierarchicalEnsemble &h);

enum class Side { B, E };

/// Σ_{x'} p(x') χ(inner ensemble at x') through N (side B) or N_c (side E).
double conditional_holevo(const KrausChannel &n, const HierarchicalEnsemble &h, Side side);

/// I(A:B|A') − I(A:E|A').
double eta_value(const KrausChannel &n, const HierarchicalEnsemble &h);

// ---------------------------------------------------------------------------
// Maximization. Every optimum is a best-found lower bound, not a certificate.
// ---------------------------------------------------------------------------

struct OptimizerConfig {
    size_t restarts = 8;
    size_t max_iters = 500;
    /// Gradient-norm stopping tolerance of each local ascent.
    double tol = 1e-9;
    uint64_t seed = 1;
    /// Outer ensemble size m'; 0 selects d².
    size_t outer_size = 0;
    /// Inner ensemble size m; 0 selects min(d², 36 / m').
    size_t inner_size = 0;

    /// Fills in automatic sizes for input dimension d and validates:
    /// restarts ≥ 1, m, m' ≥ 1, m·m' ≤ 4d².
    OptimizerConfig resolved(size_t d) const;
};

struct RestartRecord {
    /// Seed of a random restart; absent for restarts started from a supplied
    /// ensemble.
    std::optional<uint64_t> seed;
    double value;
    size_t iterations;
    bool converged;
};

struct StateOptimum {
    double value;
    QuantumState argmax;
    std::vector<RestartRecord> restarts;
    /// Every restart failed its first line search.
    bool all_failed;
};

struct EnsembleOptimum {
    double value;
    HierarchicalEnsemble argmax;
    std::vector<RestartRecord> restarts;
    bool all_failed;
};

/// Multi-restart ascent of I_coh over ρ = GG†/Tr(GG†), G a complex d×d factor.
StateOptimum maximize_coherent_information(const KrausChannel &n, const OptimizerConfig &cfg = {});

/// Multi-restart ascent of I(A':B) − I(A':E) over hierarchical ensembles of the
/// configured size. Each ensemble in `seeds` is evaluated as given and also used
/// as the starting point of one extra local ascent.
EnsembleOptimum maximize_private_information(
    const WiretapChannel &pair, const OptimizerConfig &cfg = {}, const std::vector<HierarchicalEnsemble> &seeds = {});

/// P⁽¹⁾ of a channel. The spectral decomposition of the best I_coh input is
/// always among the candidates, so the result is never below q1_input's value.
EnsembleOptimum maximize_private_information(
    const KrausChannel &n, const OptimizerConfig &cfg, const StateOptimum &q1_input);
EnsembleOptimum maximize_private_information(const KrausChannel &n, const OptimizerConfig &cfg = {});

EnsembleOptimum maximize_eta(const KrausChannel &n, const OptimizerConfig &cfg = {});

/// max over ensembles of χ(eve_a) − χ(eve_b) for two channels with one input.
EnsembleOptimum maximize_holevo_gap(
    const KrausChannel &a, const KrausChannel &b, const OptimizerConfig &cfg = {},
    const std::vector<HierarchicalEnsemble> &seeds = {});

struct DeltaReport {
    /// max_e [χ(E of the degradable pair) − χ(E' of the PD pair)], shared ensemble.
    double delta_holevo;
    /// P(PD pair) − P(degradable pair), both maximized independently.
    double delta_capacity;
    double p_degradable;
    double p_pd;
    /// χ of each eavesdropper output at the Δ-optimal ensemble.
    double chi_eve_degradable_at_opt;
    double chi_eve_pd_at_opt;
    HierarchicalEnsemble argmax;
    /// |delta_capacity − delta_holevo|.
    double gap() const;
};

/// The degradable pair's P optimum seeds the PD search, and both optima seed
/// the Δ search, alongside any caller-supplied seeds.
DeltaReport compute_delta(
    const WiretapChannel &degradable, const WiretapChannel &pd, const OptimizerConfig &cfg = {},
    std::vector<HierarchicalEnsemble> seeds = {});
DeltaReport compute_delta(const KrausChannel &n_d, const KrausChannel &n_pd, const OptimizerConfig &cfg = {});

/// max I_coh(N^⊗n) / n for n ≤ 2 with d_inⁿ ≤ 16.
double q1_multicopy(const KrausChannel &n, size_t copies, const OptimizerConfig &cfg = {});

struct CapacityReport {
    double q1;
    double p1;
    /// η at the P⁽¹⁾-optimal ensemble.
    double eta_at_p_opt;
    /// η maximized on its own.
    std::optional<double> eta_max;
    std::optional<DeltaReport> delta;
    StateOptimum q1_opt;
    EnsembleOptimum p1_opt;
};

CapacityReport capacity_report(const KrausChannel &n, const OptimizerConfig &cfg = {}, bool with_eta_max = true);

nlohmann::json state_to_json(const QuantumState &rho);
nlohmann::json ensemble_to_json(const HierarchicalEnsemble &h);
nlohmann::json restarts_to_json(const std::vector<RestartRecord> &records);

}  // namespace qcap

#endif
