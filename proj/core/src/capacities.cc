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

#include "qcap/capacities.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "qcap/channel_io.h"
#include "qcap/local_ascent.h"
#include "qcap/objectives.h"
#include "qcap/parallel.h"
#include "qcap/random.h"

namespace qcap {

namespace {

void require_input_dim(const KrausChannel &n, size_t d, const char *op) {
    if (n.d_in() != d) {
        throw Error(
            ErrorKind::DimensionMismatch,
            std::string(op) + ": channel accepts " + std::to_string(n.d_in()) + " levels, input has " +
                std::to_string(d));
    }
}

std::vector<double> gaussian_params(size_t n, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> x(n);
    for (double &v : x) {
        v = normal(rng);
    }
    return x;
}

RestartRecord record_of(std::optional<uint64_t> seed, const AscentResult &r) {
    return {seed, r.value, r.iterations, r.converged};
}

// Runs the random restarts plus one ascent per starting point in `starts`.
std::vector<AscentResult> run_restarts(
    const ValueAndGradient &fn, size_t parameter_count, const OptimizerConfig &cfg,
    const std::vector<std::vector<double>> &starts) {
    const size_t total = cfg.restarts + starts.size();
    return parallel_map(total, worker_threads(), [&](size_t k) {
        std::vector<double> x0;
        if (k < cfg.restarts) {
            Rng rng(cfg.seed + k);
            x0 = gaussian_params(parameter_count, rng);
        } else {
            x0 = starts[k - cfg.restarts];
        }
        return maximize_local(fn, std::move(x0), cfg.max_iters, cfg.tol);
    });
}

EnsembleOptimum optimize_ensemble(
    const EnsembleObjective &obj, const OptimizerConfig &cfg, const std::vector<HierarchicalEnsemble> &seeds,
    const std::function<double(const HierarchicalEnsemble &)> &evaluate) {
    std::vector<std::vector<double>> starts;
    for (const auto &h : seeds) {
        std::vector<double> x = obj.encode(h);
        if (!x.empty()) {
            starts.push_back(std::move(x));
        }
    }
    ValueAndGradient fn = [&obj](const std::vector<double> &x, std::vector<double> &g) { return obj(x, g); };
    std::vector<AscentResult> runs = run_restarts(fn, obj.parameter_count(), cfg, starts);

    std::vector<RestartRecord> records;
    std::optional<HierarchicalEnsemble> best;
    double best_value = -std::numeric_limits<double>::infinity();
    bool all_failed = true;
    for (size_t k = 0; k < runs.size(); k++) {
        std::optional<uint64_t> seed;
        if (k < cfg.restarts) {
            seed = cfg.seed + k;
        }
        records.push_back(record_of(seed, runs[k]));
        all_failed = all_failed && runs[k].line_search_failed;
        HierarchicalEnsemble h = obj.decode(runs[k].x);
        double v = evaluate(h);
        if (v > best_value) {
            best_value = v;
            best = std::move(h);
        }
    }
    for (const auto &h : seeds) {
        double v = evaluate(h);
        records.push_back({std::nullopt, v, 0, true});
        if (v > best_value) {
            best_value = v;
            best = h;
        }
    }
    return {best_value, std::move(*best), std::move(records), all_failed};
}

size_t ipow(size_t base, size_t exp) {
    size_t out = 1;
    for (size_t i = 0; i < exp; i++) {
        out *= base;
    }
    return out;
}

}  // namespace

double coherent_information(const KrausChannel &n, const QuantumState &rho) {
    require_input_dim(n, rho.dim(), "coherent_information");
    KrausChannel env = complementary_channel(n);
    return matrix_entropy(n.apply(rho.matrix())) - matrix_entropy(env.apply(rho.matrix()));
}

double holevo_information(const KrausChannel &n, const Ensemble &ens) {
    require_input_dim(n, ens.dim(), "holevo_information");
    double value = matrix_entropy(n.apply(ens.average()));
    for (size_t i = 0; i < ens.size(); i++) {
        value -= ens.probs()[i] * matrix_entropy(n.apply(ens.states()[i].matrix()));
    }
    return value;
}

double private_information_value(const WiretapChannel &pair, const HierarchicalEnsemble &h) {
    Ensemble coarse = h.coarse();
    return holevo_information(pair.main, coarse) - holevo_information(pair.eve, coarse);
}

double private_information_value(const KrausChannel &n, const HierarchicalEnsemble &h) {
    return private_information_value(WiretapChannel::of(n), h);
}

double conditional_holevo(const KrausChannel &n, const HierarchicalEnsemble &h, Side side) {
    KrausChannel channel = side == Side::B ? n : complementary_channel(n);
    double value = 0;
    for (size_t j = 0; j < h.outer_size(); j++) {
        value += h.outer_probs()[j] * holevo_information(channel, h.inner()[j]);
    }
    return value;
}

double eta_value(const KrausChannel &n, const HierarchicalEnsemble &h) {
    return conditional_holevo(n, h, Side::B) - conditional_holevo(n, h, Side::E);
}

OptimizerConfig OptimizerConfig::resolved(size_t d) const {
    OptimizerConfig out = *this;
    const size_t d2 = d * d;
    if (out.outer_size == 0) {
        out.outer_size = d2;
    }
    if (out.inner_size == 0) {
        out.inner_size = std::max<size_t>(1, std::min(d2, 36 / out.outer_size));
    }
    if (out.restarts == 0) {
        throw Error(ErrorKind::InvalidParams, "optimizer needs at least one restart");
    }
    if (out.outer_size * out.inner_size > 4 * d2) {
        throw Error(
            ErrorKind::InvalidParams, "ensemble size m·m' = " + std::to_string(out.outer_size * out.inner_size) +
                                          " exceeds 4d² = " + std::to_string(4 * d2));
    }
    return out;
}

StateOptimum maximize_coherent_information(const KrausChannel &n, const OptimizerConfig &config) {
    const OptimizerConfig cfg = config.resolved(n.d_in());
    CoherentObjective obj(n);
    ValueAndGradient fn = [&obj](const std::vector<double> &x, std::vector<double> &g) { return obj(x, g); };
    std::vector<AscentResult> runs = run_restarts(fn, obj.parameter_count(), cfg, {});

    std::vector<RestartRecord> records;
    std::optional<QuantumState> best;
    double best_value = -std::numeric_limits<double>::infinity();
    bool all_failed = true;
    for (size_t k = 0; k < runs.size(); k++) {
        records.push_back(record_of(cfg.seed + k, runs[k]));
        all_failed = all_failed && runs[k].line_search_failed;
        QuantumState rho(obj.decode(runs[k].x));
        double v = coherent_information(n, rho);
        if (v > best_value) {
            best_value = v;
            best = std::move(rho);
        }
    }
    // A pure input always achieves 0; keep it as a floor so rank-deficient
    // optima are not lost to a slowly converging ascent.
    QuantumState anchor = QuantumState::basis(n.d_in(), 0);
    double anchor_value = coherent_information(n, anchor);
    if (anchor_value > best_value) {
        best_value = anchor_value;
        best = anchor;
    }
    return {best_value, std::move(*best), std::move(records), all_failed};
}

EnsembleOptimum maximize_private_information(
    const WiretapChannel &pair, const OptimizerConfig &config, const std::vector<HierarchicalEnsemble> &seeds) {
    const OptimizerConfig cfg = config.resolved(pair.main.d_in());
    EnsembleObjective obj(pair, cfg.outer_size, cfg.inner_size, EnsembleObjective::Kind::Private);
    return optimize_ensemble(
        obj, cfg, seeds, [&pair](const HierarchicalEnsemble &h) { return private_information_value(pair, h); });
}

EnsembleOptimum maximize_private_information(
    const KrausChannel &n, const OptimizerConfig &cfg, const StateOptimum &q1_input) {
    return maximize_private_information(
        WiretapChannel::of(n), cfg, {HierarchicalEnsemble::from_spectral(q1_input.argmax)});
}

EnsembleOptimum maximize_private_information(const KrausChannel &n, const OptimizerConfig &cfg) {
    return maximize_private_information(n, cfg, maximize_coherent_information(n, cfg));
}

EnsembleOptimum maximize_eta(const KrausChannel &n, const OptimizerConfig &config) {
    const OptimizerConfig cfg = config.resolved(n.d_in());
    EnsembleObjective obj(WiretapChannel::of(n), cfg.outer_size, cfg.inner_size, EnsembleObjective::Kind::Eta);
    return optimize_ensemble(obj, cfg, {}, [&n](const HierarchicalEnsemble &h) { return eta_value(n, h); });
}

EnsembleOptimum maximize_holevo_gap(
    const KrausChannel &a, const KrausChannel &b, const OptimizerConfig &cfg,
    const std::vector<HierarchicalEnsemble> &seeds) {
    return maximize_private_information(WiretapChannel{a, b}, cfg, seeds);
}

double DeltaReport::gap() const {
    return std::abs(delta_capacity - delta_holevo);
}

DeltaReport compute_delta(
    const WiretapChannel &degradable, const WiretapChannel &pd, const OptimizerConfig &cfg,
    std::vector<HierarchicalEnsemble> seeds) {
    if (degradable.main.d_in() != pd.main.d_in()) {
        throw Error(ErrorKind::DimensionMismatch, "compute_delta: channels have different input dimensions");
    }
    EnsembleOptimum p_d = maximize_private_information(degradable, cfg, seeds);
    seeds.push_back(p_d.argmax);
    EnsembleOptimum p_pd = maximize_private_information(pd, cfg, seeds);
    seeds.push_back(p_pd.argmax);
    EnsembleOptimum delta = maximize_holevo_gap(degradable.eve, pd.eve, cfg, seeds);
    Ensemble coarse = delta.argmax.coarse();
    return {
        delta.value,
        p_pd.value - p_d.value,
        p_d.value,
        p_pd.value,
        holevo_information(degradable.eve, coarse),
        holevo_information(pd.eve, coarse),
        delta.argmax,
    };
}

DeltaReport compute_delta(const KrausChannel &n_d, const KrausChannel &n_pd, const OptimizerConfig &cfg) {
    StateOptimum q = maximize_coherent_information(n_d, cfg);
    return compute_delta(
        WiretapChannel::of(n_d), WiretapChannel::of(n_pd), cfg, {HierarchicalEnsemble::from_spectral(q.argmax)});
}

double q1_multicopy(const KrausChannel &n, size_t copies, const OptimizerConfig &cfg) {
    if (copies == 0 || copies > 2) {
        throw Error(ErrorKind::InvalidParams, "q1_multicopy supports 1 or 2 copies");
    }
    if (ipow(n.d_in(), copies) > 16) {
        throw Error(
            ErrorKind::DimensionTooLarge,
            "q1_multicopy: input dimension " + std::to_string(n.d_in()) + "^" + std::to_string(copies) + " exceeds 16");
    }
    return maximize_coherent_information(tensor_power(n, copies), cfg).value / static_cast<double>(copies);
}

CapacityReport capacity_report(const KrausChannel &n, const OptimizerConfig &cfg, bool with_eta_max) {
    StateOptimum q = maximize_coherent_information(n, cfg);
    EnsembleOptimum p = maximize_private_information(n, cfg, q);
    double eta = eta_value(n, p.argmax);
    std::optional<double> eta_max;
    if (with_eta_max) {
        eta_max = maximize_eta(n, cfg).value;
    }
    return {q.value, p.value, eta, eta_max, std::nullopt, std::move(q), std::move(p)};
}

nlohmann::json state_to_json(const QuantumState &rho) {
    return matrix_to_json(rho.matrix());
}

nlohmann::json ensemble_to_json(const HierarchicalEnsemble &h) {
    nlohmann::json inner = nlohmann::json::array();
    for (const auto &ens : h.inner()) {
        nlohmann::json probs = nlohmann::json::array();
        nlohmann::json kets = nlohmann::json::array();
        for (size_t i = 0; i < ens.size(); i++) {
            probs.push_back(report_number(ens.probs()[i]));
            HermitianEig eig = herm_eig(ens.states()[i].matrix());
            CVector ket = eig.eigenvectors.col(eig.eigenvectors.cols() - 1);
            Eigen::Index lead = 0;
            ket.cwiseAbs().maxCoeff(&lead);
            ket *= std::conj(ket(lead)) / std::abs(ket(lead));
            nlohmann::json k = nlohmann::json::array();
            for (Eigen::Index c = 0; c < ket.size(); c++) {
                k.push_back({report_number(ket(c).real()), report_number(ket(c).imag())});
            }
            kets.push_back(std::move(k));
        }
        inner.push_back({{"probs", std::move(probs)}, {"kets", std::move(kets)}});
    }
    nlohmann::json outer = nlohmann::json::array();
    for (double p : h.outer_probs()) {
        outer.push_back(report_number(p));
    }
    return {{"outer_probs", std::move(outer)}, {"inner", std::move(inner)}};
}

nlohmann::json restarts_to_json(const std::vector<RestartRecord> &records) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &r : records) {
        nlohmann::json j = {
            {"value", report_number(r.value)}, {"iterations", r.iterations}, {"converged", r.converged}};
        j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
        out.push_back(std::move(j));
    }
    return out;
}

}  // namespace qcap
