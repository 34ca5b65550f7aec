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

#include "qcap/degradability.h"

#include <algorithm>
#include <cmath>

#include "qcap/channel_io.h"
#include "qcap/parallel.h"
#include "qcap/random.h"

namespace qcap {

namespace {

using Index = Eigen::Index;

Index idx(size_t n) {
    return static_cast<Index>(n);
}

// Linear map J_M ↦ Choi(M ∘ S) for a fixed source channel S: in → mid, with M:
// mid → out. Entry-wise, out[(i,o),(j,o')] = Σ_{m,m'} J_S[(i,m),(j,m')] J_M[(m,o),(m',o')].
class ComposedChoiMap {
   public:
    ComposedChoiMap(const KrausChannel &source, size_t d_out)
        : d_in_(source.d_in()), d_mid_(source.d_out()), d_out_(d_out), js_(kraus_to_choi(source).matrix()) {
    }

    CMatrix forward(const CMatrix &jm) const {
        const Index o = idx(d_out_), m = idx(d_mid_);
        CMatrix out = CMatrix::Zero(idx(d_in_) * o, idx(d_in_) * o);
        for (Index i = 0; i < idx(d_in_); i++) {
            for (Index j = 0; j < idx(d_in_); j++) {
                auto block = out.block(i * o, j * o, o, o);
                for (Index a = 0; a < m; a++) {
                    for (Index b = 0; b < m; b++) {
                        Complex s = js_(i * m + a, j * m + b);
                        if (s != Complex(0)) {
                            block += s * jm.block(a * o, b * o, o, o);
                        }
                    }
                }
            }
        }
        return out;
    }

    CMatrix adjoint(const CMatrix &y) const {
        const Index o = idx(d_out_), m = idx(d_mid_);
        CMatrix out = CMatrix::Zero(m * o, m * o);
        for (Index a = 0; a < m; a++) {
            for (Index b = 0; b < m; b++) {
                auto block = out.block(a * o, b * o, o, o);
                for (Index i = 0; i < idx(d_in_); i++) {
                    for (Index j = 0; j < idx(d_in_); j++) {
                        Complex s = js_(i * m + a, j * m + b);
                        if (s != Complex(0)) {
                            block += std::conj(s) * y.block(i * o, j * o, o, o);
                        }
                    }
                }
            }
        }
        return out;
    }

    // Largest eigenvalue of L*L by power iteration from a fixed start.
    double lipschitz() const {
        const Index n = idx(d_mid_ * d_out_);
        CMatrix x = CMatrix::Identity(n, n) + CMatrix::Constant(n, n, Complex(0.5, 0.0));
        x /= x.norm();
        double lambda = 0;
        for (int it = 0; it < 200; it++) {
            CMatrix y = adjoint(forward(x));
            double norm = y.norm();
            if (norm == 0) {
                return 1;
            }
            double next = norm;
            x = y / norm;
            if (it > 10 && std::abs(next - lambda) <= 1e-10 * next) {
                lambda = next;
                break;
            }
            lambda = next;
        }
        return std::max(lambda * 1.01, 1e-12);
    }

   private:
    size_t d_in_;
    size_t d_mid_;
    size_t d_out_;
    CMatrix js_;
};

CMatrix project_tp(const CMatrix &j, size_t d_mid, size_t d_out) {
    CMatrix excess = partial_trace(j, {d_mid, d_out}, Subsystem::A) - CMatrix::Identity(idx(d_mid), idx(d_mid));
    return j - kron(excess, CMatrix::Identity(idx(d_out), idx(d_out))) / static_cast<double>(d_out);
}

// Dykstra's alternating projections onto PSD ∩ {Tr_out J = I}.
CMatrix project_cptp(const CMatrix &y, size_t d_mid, size_t d_out) {
    CMatrix x = hermitian_part(y);
    CMatrix p = CMatrix::Zero(x.rows(), x.cols());
    CMatrix q = CMatrix::Zero(x.rows(), x.cols());
    for (int it = 0; it < 1000; it++) {
        CMatrix a = project_psd(x + p);
        p = x + p - a;
        CMatrix b = project_tp(a + q, d_mid, d_out);
        q = a + q - b;
        double change = (b - x).norm();
        x = std::move(b);
        if (change <= 1e-13 * std::max(1.0, x.norm())) {
            break;
        }
    }
    return x;
}

// Exact CPTP point near j: clip to PSD, then rescale by (Tr_out J)^{-1/2} on
// the input factor.
CMatrix finalize_cptp(const CMatrix &j, size_t d_mid, size_t d_out) {
    CMatrix psd = project_psd(j);
    CMatrix marginal = partial_trace(psd, {d_mid, d_out}, Subsystem::A);
    HermitianEig eig = herm_eig(marginal);
    if (eig.eigenvalues(0) < 1e-12) {
        return project_tp(psd, d_mid, d_out);
    }
    RVector inv_sqrt = eig.eigenvalues.cwiseSqrt().cwiseInverse();
    CMatrix f = eig.eigenvectors * inv_sqrt.asDiagonal() * eig.eigenvectors.adjoint();
    CMatrix filter = kron(f, CMatrix::Identity(idx(d_out), idx(d_out)));
    return hermitian_part(filter * psd * filter.adjoint());
}

}  // namespace

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Degradable:
            return "degradable";
        case Verdict::AntiDegradable:
            return "anti-degradable";
        case Verdict::PdFeasible:
            return "pd-feasible";
        case Verdict::InfeasibleAtTolerance:
            return "infeasible-at-tolerance";
    }
    return "unknown";
}

ConnectingMap find_connecting_map(const KrausChannel &source, const KrausChannel &target, const SolverOptions &opts) {
    if (source.d_in() != target.d_in()) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "find_connecting_map: source accepts " + std::to_string(source.d_in()) + " levels, target " +
                std::to_string(target.d_in()));
    }
    const size_t d_mid = source.d_out();
    const size_t d_out = target.d_out();
    const Index n = idx(d_mid * d_out);
    ComposedChoiMap op(source, d_out);
    const CMatrix goal = kraus_to_choi(target).matrix();
    const double step = 1.0 / op.lipschitz();

    auto residual_of = [&](const CMatrix &j) { return (op.forward(j) - goal).norm(); };

    CMatrix x0 = opts.initial.value_or(CMatrix::Identity(n, n) / static_cast<double>(d_out));
    if (x0.rows() != n || x0.cols() != n) {
        throw Error(ErrorKind::DimensionMismatch, "find_connecting_map: initial Choi matrix has the wrong size");
    }
    CMatrix x = project_cptp(x0, d_mid, d_out);
    double fx = residual_of(x);
    CMatrix x_prev = x;
    CMatrix y = x;
    double t = 1;

    const double stop_residual = std::max(1e-12, 1e-6 * opts.tol);
    constexpr size_t kWindow = 200;
    std::vector<double> history;
    bool converged = false;
    size_t iter = 0;
    for (; iter < opts.max_iters; iter++) {
        if (fx <= stop_residual) {
            converged = true;
            break;
        }
        if (history.size() >= kWindow) {
            double before = history[history.size() - kWindow];
            if (before - fx <= 1e-9 * fx + 1e-15) {
                converged = true;
                break;
            }
        }
        CMatrix grad = op.adjoint(op.forward(y) - goal);
        CMatrix z = project_cptp(y - step * grad, d_mid, d_out);
        double fz = residual_of(z);
        x_prev = x;
        if (fz <= fx) {
            x = z;
            fx = fz;
        }
        double t_next = 0.5 * (1 + std::sqrt(1 + 4 * t * t));
        y = x + (t / t_next) * (z - x) + ((t - 1) / t_next) * (x - x_prev);
        t = t_next;
        history.push_back(fx);
    }

    CMatrix final_map = finalize_cptp(x, d_mid, d_out);
    double final_residual = residual_of(final_map);
    if (final_residual > fx) {
        // Clipping moved us; keep the Dykstra point if it is CPTP at 1e-7.
        ChoiDefects d = choi_defects(d_mid, d_out, x);
        if (d.min_eigenvalue >= -1e-9 && d.tp_residual <= 1e-9) {
            final_map = x;
            final_residual = fx;
        }
    }
    return {ChoiMatrix(d_mid, d_out, std::move(final_map), 1e-7), final_residual, iter, converged, std::move(history)};
}

namespace {

DegradabilityCertificate certify(ConnectingMap found, Verdict on_success, double tol) {
    Verdict v = found.residual <= tol ? on_success : Verdict::InfeasibleAtTolerance;
    return {v, std::move(found.map), std::nullopt, found.residual, found.iterations, tol};
}

}  // namespace

DegradabilityCertificate is_degradable(const KrausChannel &n, const SolverOptions &opts) {
    KrausChannel env = complementary_channel(n);
    return certify(find_connecting_map(n, env, opts), Verdict::Degradable, opts.tol);
}

DegradabilityCertificate is_antidegradable(const KrausChannel &n, const SolverOptions &opts) {
    KrausChannel env = complementary_channel(n);
    return certify(find_connecting_map(env, n, opts), Verdict::AntiDegradable, opts.tol);
}

DegradabilityCertificate is_partially_degradable(
    const KrausChannel &n, const KrausChannel &degradation, const SolverOptions &opts) {
    WiretapChannel pair = WiretapChannel::degraded(n, degradation);
    DegradabilityCertificate cert = certify(find_connecting_map(pair.main, pair.eve, opts), Verdict::PdFeasible, opts.tol);
    cert.degradation_map = kraus_to_choi(degradation);
    return cert;
}

DegradabilityCertificate search_degradation_map(const KrausChannel &n, const SearchOptions &opts) {
    if (opts.degraded_env_dim == 0 || opts.restarts == 0) {
        throw Error(ErrorKind::InvalidParams, "search_degradation_map: degraded environment and restarts must be positive");
    }
    const KrausChannel env = complementary_channel(n);
    const size_t d_env = env.d_out();
    const size_t d_deg = opts.degraded_env_dim;

    struct Attempt {
        ChoiMatrix t;
        ChoiMatrix d;
        double residual;
        size_t iterations;
    };

    auto run = [&](size_t k) -> Attempt {
        Rng rng(opts.seed + k);
        KrausChannel d = (k == 0 && d_deg == d_env)
                             ? KrausChannel(d_env, d_env, {CMatrix::Identity(idx(d_env), idx(d_env))})
                             : random_channel(d_env, d_deg, d_env * d_deg, rng);
        SolverOptions inner{opts.tol, opts.max_iters, std::nullopt};
        ConnectingMap t = find_connecting_map(n, compose(d, env), inner);
        Attempt best{t.map, kraus_to_choi(d), t.residual, t.iterations};
        for (size_t round = 0; round < opts.rounds && best.residual > opts.tol; round++) {
            KrausChannel t_channel = choi_to_kraus(t.map);
            inner.initial = kraus_to_choi(d).matrix();
            ConnectingMap d_step = find_connecting_map(env, compose(t_channel, n), inner);
            d = choi_to_kraus(d_step.map);
            inner.initial = t.map.matrix();
            t = find_connecting_map(n, compose(d, env), inner);
            best.iterations += d_step.iterations + t.iterations;
            if (t.residual < best.residual) {
                best.t = t.map;
                best.d = kraus_to_choi(d);
                best.residual = t.residual;
            }
        }
        return best;
    };

    std::vector<Attempt> attempts = parallel_map(opts.restarts, worker_threads(), run);
    size_t best = 0;
    size_t total_iters = 0;
    for (size_t k = 0; k < attempts.size(); k++) {
        total_iters += attempts[k].iterations;
        if (attempts[k].residual < attempts[best].residual) {
            best = k;
        }
    }
    Attempt &a = attempts[best];
    Verdict v = a.residual <= opts.tol ? Verdict::PdFeasible : Verdict::InfeasibleAtTolerance;
    return {v, std::move(a.t), std::move(a.d), a.residual, total_iters, opts.tol};
}

nlohmann::json certificate_to_json(const DegradabilityCertificate &cert) {
    nlohmann::json j = {
        {"verdict", verdict_name(cert.verdict)},
        {"residual", report_number(cert.residual)},
        {"iterations", cert.iterations},
        {"tolerance", cert.tolerance},
        {"connecting_map", choi_to_json(cert.connecting_map)},
    };
    if (cert.degradation_map) {
        j["degradation_map"] = choi_to_json(*cert.degradation_map);
    }
    return j;
}

}  // namespace qcap
