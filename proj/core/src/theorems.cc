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

#include "qcap/theorems.h"

#include <cmath>
#include <sstream>

#include "qcap/channel_io.h"
#include "qcap/random.h"

namespace qcap {

std::string_view check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass:
            return "pass";
        case CheckStatus::Fail:
            return "fail";
        case CheckStatus::Skipped:
            return "skipped";
    }
    return "unknown";
}

TheoremCheck equality_check(std::string name, double lhs, double rhs, double tol, std::string notes) {
    CheckStatus s = std::abs(lhs - rhs) <= tol ? CheckStatus::Pass : CheckStatus::Fail;
    return {std::move(name), s, lhs, rhs, tol, std::move(notes)};
}

TheoremCheck inequality_check(std::string name, double lhs, double rhs, double tol, std::string notes) {
    CheckStatus s = lhs >= rhs - tol ? CheckStatus::Pass : CheckStatus::Fail;
    return {std::move(name), s, lhs, rhs, tol, std::move(notes)};
}

Theorem1Report verify_theorem1(const KrausChannel &n, const OptimizerConfig &cfg, const CheckTolerances &tol) {
    std::vector<TheoremCheck> checks;

    // I_coh(ρ̄) against χ_B − χ_E on random pure ensembles; keep the worst case.
    {
        Rng rng(cfg.seed);
        KrausChannel env = complementary_channel(n);
        double worst = -1, worst_lhs = 0, worst_rhs = 0;
        for (int s = 0; s < 20; s++) {
            Ensemble ens = random_pure_ensemble(n.d_in(), 2 + s % 4, rng);
            double lhs = coherent_information(n, QuantumState(ens.average()));
            double rhs = holevo_information(n, ens) - holevo_information(env, ens);
            if (std::abs(lhs - rhs) > worst) {
                worst = std::abs(lhs - rhs);
                worst_lhs = lhs;
                worst_rhs = rhs;
            }
        }
        checks.push_back(equality_check("eq5-identity", worst_lhs, worst_rhs, tol.identity, "worst of 20 random pure ensembles"));
    }

    CapacityReport caps = capacity_report(n, cfg, false);
    checks.push_back(inequality_check("ineq-12", caps.p1, caps.q1, tol.inequality, "p1 >= q1"));
    checks.push_back(inequality_check("ineq-24", caps.q1, caps.p1, tol.inequality, "p1 <= q1"));
    std::ostringstream note;
    note.precision(12);
    note << "p1 = q1; eta at p1 optimum = " << report_number(caps.eta_at_p_opt)
         << "; values are best-found lower bounds";
    checks.push_back(equality_check("theorem1-eq26", caps.p1, caps.q1, tol.equality, note.str()));
    return {std::move(checks), std::move(caps)};
}

Theorem2Report verify_theorem2(
    const KrausChannel &n_d, const KrausChannel &degradation, const OptimizerConfig &cfg, const CheckTolerances &tol) {
    WiretapChannel deg = WiretapChannel::of(n_d);
    WiretapChannel pd = WiretapChannel::degraded(n_d, degradation);
    StateOptimum q = maximize_coherent_information(n_d, cfg);
    DeltaReport delta = compute_delta(deg, pd, cfg, {HierarchicalEnsemble::from_spectral(q.argmax)});

    std::vector<TheoremCheck> checks;
    std::ostringstream nonneg;
    nonneg.precision(12);
    nonneg << "delta >= 0; rate improvement interval [0, " << report_number(std::max(0.0, delta.delta_holevo)) << "]";
    checks.push_back(inequality_check("delta-nonneg-41", delta.delta_holevo, 0.0, tol.inequality, nonneg.str()));
    std::ostringstream eq43;
    eq43.precision(12);
    eq43 << "P_PD = P_D + delta; P_D = " << report_number(delta.p_degradable)
         << ", capacity-difference reading = " << report_number(delta.delta_capacity)
         << ", gap between readings = " << report_number(delta.gap());
    checks.push_back(equality_check(
        "theorem2-eq43", delta.p_pd, delta.p_degradable + delta.delta_holevo, tol.equality, eq43.str()));
    return {std::move(checks), std::move(delta)};
}

TheoremCheck additivity_check(const KrausChannel &n, const OptimizerConfig &cfg, const CheckTolerances &tol) {
    if (n.d_in() > 4) {
        throw Error(ErrorKind::DimensionTooLarge, "additivity check needs d_in <= 4");
    }
    double single = q1_multicopy(n, 1, cfg);
    double two = q1_multicopy(n, 2, cfg);
    return equality_check("additivity-n2", two, single, tol.equality, "Q1(N x N)/2 = Q1(N)");
}

nlohmann::json check_to_json(const TheoremCheck &c) {
    return {
        {"name", c.name},
        {"status", check_status_name(c.status)},
        {"lhs", report_number(c.lhs)},
        {"rhs", report_number(c.rhs)},
        {"tolerance", c.tolerance},
        {"notes", c.notes},
    };
}

bool all_pass(const std::vector<TheoremCheck> &checks) {
    for (const auto &c : checks) {
        if (c.status == CheckStatus::Fail) {
            return false;
        }
    }
    return true;
}

}  // namespace qcap
