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

#ifndef QCAP_THEOREMS_H
#define QCAP_THEOREMS_H

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcap/capacities.h"

namespace qcap {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view check_status_name(CheckStatus s);

/// One numerical claim. Equality checks pass when |lhs − rhs| ≤ tolerance;
/// inequality checks when lhs ≥ rhs − tolerance.
struct TheoremCheck {
    std::string name;
    CheckStatus status;
    double lhs;
    double rhs;
    double tolerance;
    std::string notes;
};

TheoremCheck equality_check(std::string name, double lhs, double rhs, double tol, std::string notes = {});
TheoremCheck inequality_check(std::string name, double lhs, double rhs, double tol, std::string notes = {});

struct CheckTolerances {
    /// Agreement of two independently maximized quantities.
    double equality = 5e-3;
    double inequality = 1e-3;
    /// Algebraic identities at a fixed input.
    double identity = 1e-9;
};

struct Theorem1Report {
    std::vector<TheoremCheck> checks;
    CapacityReport capacities;
};

/// Maximizes Q⁽¹⁾ and P⁽¹⁾ and checks P⁽¹⁾ ≥ Q⁽¹⁾ (ineq-12), P⁽¹⁾ ≤ Q⁽¹⁾
/// (ineq-24) and their equality (theorem1-eq26), plus I_coh = χ_B − χ_E on
/// sampled pure-state ensembles (eq5-identity).
Theorem1Report verify_theorem1(
    const KrausChannel &n, const OptimizerConfig &cfg = {}, const CheckTolerances &tol = {});

struct Theorem2Report {
    std::vector<TheoremCheck> checks;
    DeltaReport delta;
};

/// Compares the channel with itself under a degraded environment D ∘ N_c:
/// Δ ≥ 0 (delta-nonneg-41) and P_PD = P_D + Δ (theorem2-eq43), Δ read as the
/// shared-ensemble Holevo gap.
Theorem2Report verify_theorem2(
    const KrausChannel &n_d, const KrausChannel &degradation, const OptimizerConfig &cfg = {},
    const CheckTolerances &tol = {});

/// |Q⁽¹⁾(N⊗N)/2 − Q⁽¹⁾(N)| ≤ tol.equality (additivity-n2).
TheoremCheck additivity_check(const KrausChannel &n, const OptimizerConfig &cfg = {}, const CheckTolerances &tol = {});

nlohmann::json check_to_json(const TheoremCheck &c);
bool all_pass(const std::vector<TheoremCheck> &checks);

}  // namespace qcap

#endif
