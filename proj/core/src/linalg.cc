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

#include "qcap/linalg.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace qcap {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonSquare:
            return "NonSquare";
        case ErrorKind::NotHermitian:
            return "NotHermitian";
        case ErrorKind::ConvergenceFailure:
            return "ConvergenceFailure";
        case ErrorKind::InvalidState:
            return "InvalidState";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::InvalidChannel:
            return "InvalidChannel";
        case ErrorKind::NotCP:
            return "NotCP";
        case ErrorKind::NotTP:
            return "NotTP";
        case ErrorKind::DimensionTooLarge:
            return "DimensionTooLarge";
        case ErrorKind::UnknownChannel:
            return "UnknownChannel";
        case ErrorKind::InvalidParams:
            return "InvalidParams";
        case ErrorKind::ConstructionFailed:
            return "ConstructionFailed";
        case ErrorKind::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

namespace {

void require_square(const CMatrix &m, const char *op) {
    if (m.rows() != m.cols()) {
        throw Error(
            ErrorKind::NonSquare,
            std::string(op) + ": matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

void require_hermitian(const CMatrix &m, const char *op) {
    require_square(m, op);
    double defect = hermiticity_defect(m);
    double scale = std::max(1.0, frobenius_norm(m));
    if (!(defect <= 1e-8 * scale)) {
        throw Error(ErrorKind::NotHermitian, std::string(op) + ": ‖M − M†‖_F = " + std::to_string(defect));
    }
}

void require_bipartite(const CMatrix &m, Dims dims, const char *op) {
    size_t n = dims.total();
    if (static_cast<size_t>(m.rows()) != n || static_cast<size_t>(m.cols()) != n) {
        throw Error(
            ErrorKind::DimensionMismatch,
            std::string(op) + ": expected " + std::to_string(n) + "x" + std::to_string(n) + ", got " +
                std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

}  // namespace

HermitianEig herm_eig(const CMatrix &m) {
    require_hermitian(m, "herm_eig");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(m));
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::ConvergenceFailure, "herm_eig: eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

RVector herm_eigenvalues(const CMatrix &m) {
    require_hermitian(m, "herm_eigenvalues");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(m), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::ConvergenceFailure, "herm_eigenvalues: eigensolver did not converge");
    }
    return solver.eigenvalues();
}

double spectrum_entropy(const RVector &eigenvalues) {
    double s = 0;
    for (double lambda : eigenvalues) {
        if (lambda > kEntropyClamp) {
            s -= lambda * std::log2(lambda);
        }
    }
    return s;
}

double matrix_entropy(const CMatrix &m) {
    return spectrum_entropy(herm_eigenvalues(m));
}

CMatrix log2_psd(const CMatrix &m, double floor) {
    HermitianEig eig = herm_eig(m);
    RVector logs = eig.eigenvalues.unaryExpr([floor](double x) { return std::log2(std::max(x, floor)); });
    return eig.eigenvectors * logs.asDiagonal() * eig.eigenvectors.adjoint();
}

CMatrix partial_trace(const CMatrix &m, Dims dims, Subsystem keep) {
    require_bipartite(m, dims, "partial_trace");
    const auto da = static_cast<Eigen::Index>(dims.a);
    const auto db = static_cast<Eigen::Index>(dims.b);
    if (keep == Subsystem::A) {
        CMatrix out = CMatrix::Zero(da, da);
        for (Eigen::Index i = 0; i < da; i++) {
            for (Eigen::Index j = 0; j < da; j++) {
                out(i, j) = m.block(i * db, j * db, db, db).trace();
            }
        }
        return out;
    }
    CMatrix out = CMatrix::Zero(db, db);
    for (Eigen::Index i = 0; i < da; i++) {
        out += m.block(i * db, i * db, db, db);
    }
    return out;
}

CMatrix partial_transpose(const CMatrix &m, Dims dims, Subsystem on) {
    require_bipartite(m, dims, "partial_transpose");
    const auto da = static_cast<Eigen::Index>(dims.a);
    const auto db = static_cast<Eigen::Index>(dims.b);
    CMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < da; i++) {
        for (Eigen::Index j = 0; j < da; j++) {
            if (on == Subsystem::B) {
                out.block(i * db, j * db, db, db) = m.block(i * db, j * db, db, db).transpose();
            } else {
                out.block(i * db, j * db, db, db) = m.block(j * db, i * db, db, db);
            }
        }
    }
    return out;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

double frobenius_norm(const CMatrix &m) {
    return m.norm();
}

double trace_norm(const CMatrix &m) {
    if (m.size() == 0) {
        return 0;
    }
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues().sum();
}

double hermiticity_defect(const CMatrix &m) {
    return (m - m.adjoint()).norm();
}

CMatrix hermitian_part(const CMatrix &m) {
    return (m + m.adjoint()) * 0.5;
}

bool all_finite(const CMatrix &m) {
    return m.allFinite();
}

CMatrix project_psd(const CMatrix &m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(m));
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::ConvergenceFailure, "project_psd: eigensolver did not converge");
    }
    RVector clipped = solver.eigenvalues().cwiseMax(0.0);
    return solver.eigenvectors() * clipped.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace qcap
