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

#include "qcap/channel.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace qcap {

namespace {

using Index = Eigen::Index;

Index idx(size_t n) {
    return static_cast<Index>(n);
}

CMatrix identity(size_t d) {
    return CMatrix::Identity(idx(d), idx(d));
}

// Column vector with entry (i·d_out + a) = K(a, i).
CVector vectorize_io(const CMatrix &k) {
    CVector v(k.size());
    for (Index i = 0; i < k.cols(); i++) {
        for (Index a = 0; a < k.rows(); a++) {
            v(i * k.rows() + a) = k(a, i);
        }
    }
    return v;
}

CMatrix unvectorize_io(const CVector &v, size_t d_in, size_t d_out) {
    CMatrix k(idx(d_out), idx(d_in));
    for (Index i = 0; i < idx(d_in); i++) {
        for (Index a = 0; a < idx(d_out); a++) {
            k(a, i) = v(i * idx(d_out) + a);
        }
    }
    return k;
}

void canonicalize_phase(CMatrix &k) {
    double scale = k.cwiseAbs().maxCoeff();
    for (Index i = 0; i < k.cols(); i++) {
        for (Index a = 0; a < k.rows(); a++) {
            // Column-major scan matches the vectorization order.
            Complex z = k(a, i);
            if (std::abs(z) > 1e-8 * scale) {
                k *= std::conj(z) / std::abs(z);
                return;
            }
        }
    }
}

}  // namespace

KrausChannel::KrausChannel(size_t d_in, size_t d_out, std::vector<CMatrix> operators, double tol)
    : d_in_(d_in), d_out_(d_out), ops_(std::move(operators)) {
    if (d_in == 0 || d_out == 0) {
        throw Error(ErrorKind::InvalidChannel, "channel dimensions must be positive");
    }
    if (ops_.empty()) {
        throw Error(ErrorKind::InvalidChannel, "channel needs at least one Kraus operator");
    }
    for (const auto &k : ops_) {
        if (k.rows() != idx(d_out) || k.cols() != idx(d_in)) {
            throw Error(
                ErrorKind::InvalidChannel,
                "Kraus operator is " + std::to_string(k.rows()) + "x" + std::to_string(k.cols()) + ", expected " +
                    std::to_string(d_out) + "x" + std::to_string(d_in));
        }
        if (!all_finite(k)) {
            throw Error(ErrorKind::InvalidChannel, "Kraus operator has non-finite entries");
        }
    }
    double residual = tp_residual();
    if (!(residual <= tol)) {
        throw Error(ErrorKind::InvalidChannel, "not trace preserving, ‖Σ K†K − I‖_F = " + std::to_string(residual));
    }
}

CMatrix KrausChannel::apply(const CMatrix &x) const {
    if (x.rows() != idx(d_in_) || x.cols() != idx(d_in_)) {
        throw Error(ErrorKind::DimensionMismatch, "channel input is " + std::to_string(d_in_) + "-dimensional");
    }
    CMatrix out = CMatrix::Zero(idx(d_out_), idx(d_out_));
    for (const auto &k : ops_) {
        out.noalias() += k * x * k.adjoint();
    }
    return out;
}

CMatrix KrausChannel::apply_adjoint(const CMatrix &y) const {
    if (y.rows() != idx(d_out_) || y.cols() != idx(d_out_)) {
        throw Error(ErrorKind::DimensionMismatch, "channel output is " + std::to_string(d_out_) + "-dimensional");
    }
    CMatrix out = CMatrix::Zero(idx(d_in_), idx(d_in_));
    for (const auto &k : ops_) {
        out.noalias() += k.adjoint() * y * k;
    }
    return out;
}

double KrausChannel::tp_residual() const {
    CMatrix sum = CMatrix::Zero(idx(d_in_), idx(d_in_));
    for (const auto &k : ops_) {
        sum.noalias() += k.adjoint() * k;
    }
    return (sum - identity(d_in_)).norm();
}

ChoiDefects choi_defects(size_t d_in, size_t d_out, const CMatrix &j) {
    if (j.rows() != idx(d_in * d_out) || j.cols() != j.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "Choi matrix size does not match d_in·d_out");
    }
    double min_eig = herm_eigenvalues(hermitian_part(j))(0);
    double tp = (partial_trace(j, {d_in, d_out}, Subsystem::A) - identity(d_in)).norm();
    return {min_eig, tp};
}

ChoiMatrix::ChoiMatrix(size_t d_in, size_t d_out, CMatrix matrix, double tol)
    : d_in_(d_in), d_out_(d_out), matrix_(std::move(matrix)) {
    if (d_in == 0 || d_out == 0) {
        throw Error(ErrorKind::InvalidChannel, "channel dimensions must be positive");
    }
    if (!all_finite(matrix_)) {
        throw Error(ErrorKind::InvalidChannel, "Choi matrix has non-finite entries");
    }
    if (matrix_.rows() != idx(d_in * d_out) || matrix_.cols() != matrix_.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "Choi matrix size does not match d_in·d_out");
    }
    double defect = hermiticity_defect(matrix_);
    if (defect > tol) {
        throw Error(ErrorKind::NotCP, "Choi matrix is not Hermitian, defect " + std::to_string(defect));
    }
    matrix_ = hermitian_part(matrix_);
    ChoiDefects d = choi_defects(d_in, d_out, matrix_);
    if (d.min_eigenvalue < -tol) {
        throw Error(ErrorKind::NotCP, "Choi matrix has eigenvalue " + std::to_string(d.min_eigenvalue));
    }
    if (d.tp_residual > tol) {
        throw Error(ErrorKind::NotTP, "‖Tr_out J − I‖_F = " + std::to_string(d.tp_residual));
    }
}

ChoiMatrix kraus_to_choi(const KrausChannel &n) {
    auto size = idx(n.d_in() * n.d_out());
    CMatrix j = CMatrix::Zero(size, size);
    for (const auto &k : n.operators()) {
        CVector v = vectorize_io(k);
        j.noalias() += v * v.adjoint();
    }
    // Tr_out J = (Σ K†K)ᵀ, so J inherits the channel's own TP residual.
    return ChoiMatrix(n.d_in(), n.d_out(), std::move(j), std::max(1e-8, 1.01 * n.tp_residual()));
}

KrausChannel choi_to_kraus(const ChoiMatrix &j) {
    HermitianEig eig = herm_eig(j.matrix());
    std::vector<CMatrix> ops;
    for (Index k = eig.eigenvalues.size() - 1; k >= 0; k--) {
        double lambda = eig.eigenvalues(k);
        if (lambda <= 1e-10) {
            break;
        }
        CMatrix op = unvectorize_io(std::sqrt(lambda) * eig.eigenvectors.col(k), j.d_in(), j.d_out());
        canonicalize_phase(op);
        ops.push_back(std::move(op));
    }
    double tp = choi_defects(j.d_in(), j.d_out(), j.matrix()).tp_residual;
    return KrausChannel(j.d_in(), j.d_out(), std::move(ops), std::max(1e-8, 1.01 * tp + 1e-12));
}

StinespringIsometry kraus_to_stinespring(const KrausChannel &n) {
    size_t d_env = n.kraus_count();
    CMatrix v = CMatrix::Zero(idx(n.d_out() * d_env), idx(n.d_in()));
    for (size_t k = 0; k < d_env; k++) {
        const CMatrix &op = n.operators()[k];
        for (Index a = 0; a < op.rows(); a++) {
            v.row(a * idx(d_env) + idx(k)) = op.row(a);
        }
    }
    return {n.d_in(), n.d_out(), d_env, std::move(v)};
}

KrausChannel minimal_kraus(const KrausChannel &n) {
    size_t count = n.kraus_count();
    CMatrix gram(idx(count), idx(count));
    for (size_t i = 0; i < count; i++) {
        for (size_t k = 0; k < count; k++) {
            gram(idx(i), idx(k)) = (n.operators()[i].adjoint() * n.operators()[k]).trace();
        }
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(gram), Eigen::EigenvaluesOnly);
    RVector ev = solver.eigenvalues();
    if (ev(0) > 1e-10 * std::max(1.0, ev(ev.size() - 1))) {
        return n;
    }
    return choi_to_kraus(kraus_to_choi(n));
}

KrausChannel complementary_channel(const KrausChannel &n) {
    KrausChannel reduced = minimal_kraus(n);
    size_t d_env = reduced.kraus_count();
    std::vector<CMatrix> ops;
    ops.reserve(reduced.d_out());
    for (size_t a = 0; a < reduced.d_out(); a++) {
        CMatrix f(idx(d_env), idx(reduced.d_in()));
        for (size_t k = 0; k < d_env; k++) {
            f.row(idx(k)) = reduced.operators()[k].row(idx(a));
        }
        ops.push_back(std::move(f));
    }
    return KrausChannel(reduced.d_in(), d_env, std::move(ops));
}

QuantumState apply(const KrausChannel &n, const QuantumState &rho) {
    return QuantumState(n.apply(rho.matrix()), 1e-9);
}

KrausChannel compose(const KrausChannel &second, const KrausChannel &first) {
    if (first.d_out() != second.d_in()) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "compose: first channel outputs " + std::to_string(first.d_out()) + " levels, second accepts " +
                std::to_string(second.d_in()));
    }
    std::vector<CMatrix> ops;
    ops.reserve(first.kraus_count() * second.kraus_count());
    for (const auto &k1 : first.operators()) {
        for (const auto &k2 : second.operators()) {
            ops.push_back(k2 * k1);
        }
    }
    return KrausChannel(first.d_in(), second.d_out(), std::move(ops));
}

KrausChannel tensor(const KrausChannel &a, const KrausChannel &b) {
    std::vector<CMatrix> ops;
    ops.reserve(a.kraus_count() * b.kraus_count());
    for (const auto &ka : a.operators()) {
        for (const auto &kb : b.operators()) {
            ops.push_back(kron(ka, kb));
        }
    }
    return KrausChannel(a.d_in() * b.d_in(), a.d_out() * b.d_out(), std::move(ops));
}

KrausChannel tensor_power(const KrausChannel &n, size_t copies) {
    if (copies == 0) {
        throw Error(ErrorKind::InvalidParams, "tensor_power needs at least one copy");
    }
    KrausChannel out = n;
    for (size_t c = 1; c < copies; c++) {
        out = tensor(out, n);
    }
    return out;
}

double choi_distance(const KrausChannel &a, const KrausChannel &b) {
    if (a.d_in() != b.d_in() || a.d_out() != b.d_out()) {
        throw Error(ErrorKind::DimensionMismatch, "choi_distance: channels have different shapes");
    }
    return trace_norm(kraus_to_choi(a).matrix() - kraus_to_choi(b).matrix());
}

WiretapChannel WiretapChannel::of(const KrausChannel &n) {
    return {n, complementary_channel(n)};
}

WiretapChannel WiretapChannel::degraded(const KrausChannel &n, const KrausChannel &degradation) {
    KrausChannel env = complementary_channel(n);
    if (degradation.d_in() != env.d_out()) {
        throw Error(
            ErrorKind::DimensionMismatch,
            "degradation map accepts " + std::to_string(degradation.d_in()) + " levels but the environment has " +
                std::to_string(env.d_out()));
    }
    return {n, compose(degradation, env)};
}

}  // namespace qcap
