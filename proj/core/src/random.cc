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

#include "qcap/random.h"

#include <cmath>
#include <cstdlib>
#include <string>

#include "qcap/error.h"

namespace qcap {

namespace {

CMatrix gaussian_matrix(size_t rows, size_t cols, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index c = 0; c < m.cols(); c++) {
        for (Eigen::Index r = 0; r < m.rows(); r++) {
            double re = normal(rng);
            double im = normal(rng);
            m(r, c) = Complex(re, im);
        }
    }
    return m;
}

}  // namespace

CVector random_ket(size_t dim, Rng &rng) {
    CVector v = gaussian_matrix(dim, 1, rng).col(0);
    return v / v.norm();
}

QuantumState random_state(size_t dim, Rng &rng) {
    CMatrix g = gaussian_matrix(dim, dim, rng);
    CMatrix rho = g * g.adjoint();
    return QuantumState(rho / rho.trace().real());
}

CMatrix random_unitary(size_t dim, Rng &rng) {
    CMatrix g = gaussian_matrix(dim, dim, rng);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < q.cols(); i++) {
        Complex d = r(i, i);
        q.col(i) *= d / std::abs(d);
    }
    return q;
}

KrausChannel random_channel(size_t d_in, size_t d_out, size_t kraus_count, Rng &rng) {
    if (d_in == 0 || d_out * kraus_count < d_in) {
        throw Error(ErrorKind::InvalidParams, "random_channel: need d_out·kraus_count >= d_in > 0");
    }
    CMatrix a = gaussian_matrix(d_out * kraus_count, d_in, rng);
    // V = A (A†A)^{-1/2} is an isometry.
    HermitianEig eig = herm_eig(a.adjoint() * a);
    RVector inv_sqrt = eig.eigenvalues.cwiseSqrt().cwiseInverse();
    CMatrix v = a * eig.eigenvectors * inv_sqrt.asDiagonal() * eig.eigenvectors.adjoint();
    std::vector<CMatrix> ops;
    for (size_t k = 0; k < kraus_count; k++) {
        ops.push_back(v.block(static_cast<Eigen::Index>(k * d_out), 0, static_cast<Eigen::Index>(d_out), v.cols()));
    }
    return KrausChannel(d_in, d_out, std::move(ops));
}

std::vector<double> random_distribution(size_t n, Rng &rng) {
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> p(n);
    double total = 0;
    for (auto &x : p) {
        x = expo(rng);
        total += x;
    }
    for (auto &x : p) {
        x /= total;
    }
    return p;
}

Ensemble random_pure_ensemble(size_t dim, size_t size, Rng &rng) {
    std::vector<double> probs = random_distribution(size, rng);
    std::vector<QuantumState> states;
    for (size_t i = 0; i < size; i++) {
        states.push_back(QuantumState::pure(random_ket(dim, rng)));
    }
    return Ensemble(std::move(probs), std::move(states));
}

HierarchicalEnsemble random_hierarchical(size_t dim, size_t outer, size_t inner, Rng &rng) {
    std::vector<double> probs = random_distribution(outer, rng);
    std::vector<Ensemble> ensembles;
    for (size_t j = 0; j < outer; j++) {
        ensembles.push_back(random_pure_ensemble(dim, inner, rng));
    }
    return HierarchicalEnsemble(std::move(probs), std::move(ensembles));
}

size_t worker_threads() {
    const char *env = std::getenv("QCAP_THREADS");
    if (env == nullptr) {
        return 1;
    }
    char *end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end == env || n < 1) {
        return 1;
    }
    return static_cast<size_t>(n);
}

}  // namespace qcap
