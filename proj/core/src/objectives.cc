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

#include "qcap/objectives.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qcap {

namespace {

using Index = Eigen::Index;

struct EntropyAndLog {
    double entropy;
    CMatrix log2;
};

EntropyAndLog entropy_and_log(const CMatrix &m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(m));
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::ConvergenceFailure, "entropy gradient: eigensolver did not converge");
    }
    const RVector &ev = solver.eigenvalues();
    RVector logs = ev.unaryExpr([](double x) { return std::log2(std::max(x, kEntropyClamp)); });
    const CMatrix &v = solver.eigenvectors();
    return {spectrum_entropy(ev), v * logs.asDiagonal() * v.adjoint()};
}

std::vector<double> softmax(const double *logits, size_t n) {
    double top = *std::max_element(logits, logits + n);
    std::vector<double> p(n);
    double total = 0;
    for (size_t i = 0; i < n; i++) {
        p[i] = std::exp(logits[i] - top);
        total += p[i];
    }
    for (double &x : p) {
        x /= total;
    }
    return p;
}

// Chain rule through softmax: ∂/∂a_k = p_k (g_k − Σ p_l g_l).
void softmax_backward(const std::vector<double> &p, const std::vector<double> &dp, double *out) {
    double mean = 0;
    for (size_t i = 0; i < p.size(); i++) {
        mean += p[i] * dp[i];
    }
    for (size_t i = 0; i < p.size(); i++) {
        out[i] = p[i] * (dp[i] - mean);
    }
}

double logit_of(double p) {
    return std::max(std::log(std::max(p, 1e-300)), -40.0);
}

}  // namespace

EntropyGap::EntropyGap(KrausChannel main, KrausChannel eve) : main_(std::move(main)), eve_(std::move(eve)) {
    if (main_.d_in() != eve_.d_in()) {
        throw Error(ErrorKind::DimensionMismatch, "wiretap pair channels must share the input dimension");
    }
}

double EntropyGap::value(const CMatrix &sigma) const {
    return matrix_entropy(hermitian_part(main_.apply(sigma))) - matrix_entropy(hermitian_part(eve_.apply(sigma)));
}

double EntropyGap::value_and_gradient(const CMatrix &sigma, CMatrix &gradient) const {
    EntropyAndLog b = entropy_and_log(main_.apply(sigma));
    EntropyAndLog e = entropy_and_log(eve_.apply(sigma));
    gradient = eve_.apply_adjoint(e.log2) - main_.apply_adjoint(b.log2);
    return b.entropy - e.entropy;
}

CoherentObjective::CoherentObjective(const KrausChannel &n) : gap_(n, complementary_channel(n)), dim_(n.d_in()) {
}

CMatrix CoherentObjective::decode(const std::vector<double> &x) const {
    const Index d = static_cast<Index>(dim_);
    CMatrix g(d, d);
    for (Index k = 0; k < d * d; k++) {
        g(k % d, k / d) = Complex(x[static_cast<size_t>(k)], x[static_cast<size_t>(k + d * d)]);
    }
    CMatrix rho = g * g.adjoint();
    return hermitian_part(rho / rho.trace().real());
}

std::vector<double> CoherentObjective::encode(const CMatrix &factor) const {
    const Index d = static_cast<Index>(dim_);
    std::vector<double> x(parameter_count());
    for (Index k = 0; k < d * d; k++) {
        Complex z = factor(k % d, k / d);
        x[static_cast<size_t>(k)] = z.real();
        x[static_cast<size_t>(k + d * d)] = z.imag();
    }
    return x;
}

double CoherentObjective::operator()(const std::vector<double> &x, std::vector<double> &grad) const {
    const Index d = static_cast<Index>(dim_);
    CMatrix g(d, d);
    for (Index k = 0; k < d * d; k++) {
        g(k % d, k / d) = Complex(x[static_cast<size_t>(k)], x[static_cast<size_t>(k + d * d)]);
    }
    CMatrix gg = g * g.adjoint();
    double t = gg.trace().real();
    CMatrix rho = hermitian_part(gg / t);
    CMatrix w;
    double value = gap_.value_and_gradient(rho, w);
    double mean = (w * rho).trace().real();
    CMatrix a = (2.0 / t) * (w * g - mean * g);
    for (Index k = 0; k < d * d; k++) {
        grad[static_cast<size_t>(k)] = a(k % d, k / d).real();
        grad[static_cast<size_t>(k + d * d)] = a(k % d, k / d).imag();
    }
    return value;
}

EnsembleObjective::EnsembleObjective(WiretapChannel pair, size_t outer, size_t inner, Kind kind)
    : gap_(std::move(pair.main), std::move(pair.eve)), dim_(gap_.dim()), outer_(outer), inner_(inner), kind_(kind) {
    if (outer == 0 || inner == 0) {
        throw Error(ErrorKind::InvalidParams, "ensemble sizes must be positive");
    }
}

size_t EnsembleObjective::parameter_count() const {
    return outer_ + outer_ * inner_ + 2 * outer_ * inner_ * dim_;
}

EnsembleObjective::Decoded EnsembleObjective::unpack(const std::vector<double> &x) const {
    Decoded out;
    out.outer = softmax(x.data(), outer_);
    const size_t ket_base = outer_ + outer_ * inner_;
    for (size_t j = 0; j < outer_; j++) {
        out.inner.push_back(softmax(x.data() + outer_ + j * inner_, inner_));
        std::vector<CVector> kets;
        std::vector<double> norms;
        for (size_t i = 0; i < inner_; i++) {
            const double *raw = x.data() + ket_base + 2 * dim_ * (j * inner_ + i);
            CVector v(static_cast<Index>(dim_));
            for (size_t c = 0; c < dim_; c++) {
                v(static_cast<Index>(c)) = Complex(raw[2 * c], raw[2 * c + 1]);
            }
            double norm = v.norm();
            if (!(norm > 1e-300)) {
                v = CVector::Unit(static_cast<Index>(dim_), 0);
                norm = 1;
            }
            kets.push_back(v / norm);
            norms.push_back(norm);
        }
        out.kets.push_back(std::move(kets));
        out.norms.push_back(std::move(norms));
    }
    return out;
}

HierarchicalEnsemble EnsembleObjective::decode(const std::vector<double> &x) const {
    Decoded dec = unpack(x);
    std::vector<Ensemble> inner;
    for (size_t j = 0; j < outer_; j++) {
        std::vector<QuantumState> states;
        for (const auto &ket : dec.kets[j]) {
            states.push_back(QuantumState::pure(ket));
        }
        inner.emplace_back(dec.inner[j], std::move(states));
    }
    return HierarchicalEnsemble(dec.outer, std::move(inner));
}

std::vector<double> EnsembleObjective::encode(const HierarchicalEnsemble &h) const {
    if (h.dim() != dim_ || h.outer_size() > outer_) {
        return {};
    }
    for (const auto &ens : h.inner()) {
        if (ens.size() > inner_) {
            return {};
        }
    }
    std::vector<double> x(parameter_count(), 0.0);
    const size_t ket_base = outer_ + outer_ * inner_;
    for (size_t j = 0; j < outer_; j++) {
        const size_t src = j < h.outer_size() ? j : 0;
        x[j] = j < h.outer_size() ? logit_of(h.outer_probs()[j]) : -40.0;
        const Ensemble &ens = h.inner()[src];
        for (size_t i = 0; i < inner_; i++) {
            const size_t member = i < ens.size() ? i : 0;
            x[outer_ + j * inner_ + i] = i < ens.size() ? logit_of(ens.probs()[i]) : -40.0;
            HermitianEig eig = herm_eig(ens.states()[member].matrix());
            CVector ket = eig.eigenvectors.col(eig.eigenvectors.cols() - 1);
            double *raw = x.data() + ket_base + 2 * dim_ * (j * inner_ + i);
            for (size_t c = 0; c < dim_; c++) {
                raw[2 * c] = ket(static_cast<Index>(c)).real();
                raw[2 * c + 1] = ket(static_cast<Index>(c)).imag();
            }
        }
    }
    return x;
}

double EnsembleObjective::operator()(const std::vector<double> &x, std::vector<double> &grad) const {
    Decoded dec = unpack(x);
    const Index d = static_cast<Index>(dim_);
    std::vector<CMatrix> rho(outer_, CMatrix::Zero(d, d));
    CMatrix avg = CMatrix::Zero(d, d);
    for (size_t j = 0; j < outer_; j++) {
        for (size_t i = 0; i < inner_; i++) {
            rho[j].noalias() += dec.inner[j][i] * dec.kets[j][i] * dec.kets[j][i].adjoint();
        }
        avg += dec.outer[j] * rho[j];
    }

    std::vector<double> g(outer_);
    std::vector<CMatrix> w(outer_);
    for (size_t j = 0; j < outer_; j++) {
        g[j] = gap_.value_and_gradient(rho[j], w[j]);
    }

    double value = 0;
    std::vector<double> d_outer(outer_);
    std::vector<CMatrix> m(outer_);
    std::vector<std::vector<double>> pure_gap(outer_, std::vector<double>(inner_, 0.0));
    if (kind_ == Kind::Private) {
        CMatrix w_avg;
        value = gap_.value_and_gradient(avg, w_avg);
        for (size_t j = 0; j < outer_; j++) {
            value -= dec.outer[j] * g[j];
            d_outer[j] = (w_avg * rho[j]).trace().real() - g[j];
            m[j] = dec.outer[j] * (w_avg - w[j]);
        }
    } else {
        for (size_t j = 0; j < outer_; j++) {
            double inner_sum = 0;
            for (size_t i = 0; i < inner_; i++) {
                pure_gap[j][i] = gap_.value(dec.kets[j][i] * dec.kets[j][i].adjoint());
                inner_sum += dec.inner[j][i] * pure_gap[j][i];
            }
            value += dec.outer[j] * (g[j] - inner_sum);
            d_outer[j] = g[j] - inner_sum;
            m[j] = dec.outer[j] * w[j];
        }
    }

    softmax_backward(dec.outer, d_outer, grad.data());
    const size_t ket_base = outer_ + outer_ * inner_;
    for (size_t j = 0; j < outer_; j++) {
        std::vector<double> d_inner(inner_);
        for (size_t i = 0; i < inner_; i++) {
            const CVector &psi = dec.kets[j][i];
            CVector m_psi = m[j] * psi;
            double expectation = psi.dot(m_psi).real();
            d_inner[i] = expectation - dec.outer[j] * pure_gap[j][i];
            // Gradient w.r.t. the unnormalized ket, projected off the radial direction.
            CVector c = 2.0 * dec.inner[j][i] * (m_psi - expectation * psi) / dec.norms[j][i];
            double *out = grad.data() + ket_base + 2 * dim_ * (j * inner_ + i);
            for (size_t k = 0; k < dim_; k++) {
                out[2 * k] = c(static_cast<Index>(k)).real();
                out[2 * k + 1] = c(static_cast<Index>(k)).imag();
            }
        }
        softmax_backward(dec.inner[j], d_inner, grad.data() + outer_ + j * inner_);
    }
    return value;
}

}  // namespace qcap
