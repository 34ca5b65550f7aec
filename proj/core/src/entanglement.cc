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

#include "qcap/entanglement.h"

#include <cmath>

namespace qcap {

PptResult is_ppt(const CMatrix &m, Dims dims, double tol) {
    double min_eig = herm_eigenvalues(partial_transpose(m, dims, Subsystem::B))(0);
    return {min_eig >= -tol, min_eig};
}

CMatrix realign(const CMatrix &m, Dims dims) {
    if (static_cast<size_t>(m.rows()) != dims.total() || m.cols() != m.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "realign: matrix does not match the given dimensions");
    }
    const auto da = static_cast<Eigen::Index>(dims.a);
    const auto db = static_cast<Eigen::Index>(dims.b);
    CMatrix r(da * da, db * db);
    for (Eigen::Index i = 0; i < da; i++) {
        for (Eigen::Index j = 0; j < da; j++) {
            for (Eigen::Index k = 0; k < db; k++) {
                for (Eigen::Index l = 0; l < db; l++) {
                    r(i * da + j, k * db + l) = m(i * db + k, j * db + l);
                }
            }
        }
    }
    return r;
}

double realignment_value(const CMatrix &rho, Dims dims) {
    return trace_norm(realign(rho, dims));
}

CMatrix tiles_state() {
    auto ket = [](double a, double b, double c) {
        CVector v(3);
        v << a, b, c;
        return v;
    };
    const double r2 = 1 / std::sqrt(2.0);
    const double r3 = 1 / std::sqrt(3.0);
    CVector e0 = ket(1, 0, 0), e2 = ket(0, 0, 1);
    CVector m01 = ket(r2, -r2, 0), m12 = ket(0, r2, -r2), s = ket(r3, r3, r3);
    auto product = [](const CVector &a, const CVector &b) {
        CVector out(9);
        for (int i = 0; i < 3; i++) {
            out.segment(3 * i, 3) = a(i) * b;
        }
        return out;
    };
    CVector members[] = {product(e0, m01), product(m01, e2), product(e2, m12), product(m12, e0), product(s, s)};
    CMatrix rho = CMatrix::Identity(9, 9);
    for (const auto &psi : members) {
        rho -= psi * psi.adjoint();
    }
    return rho / 4.0;
}

std::string_view complementary_class_name(ComplementaryClass c) {
    switch (c) {
        case ComplementaryClass::Npt:
            return "npt";
        case ComplementaryClass::PptEntangled:
            return "ppt-entangled";
        case ComplementaryClass::PptUndetected:
            return "ppt-undetected";
    }
    return "unknown";
}

ComplementaryClassification classify_complementary(const KrausChannel &n, double tol) {
    KrausChannel env = complementary_channel(n);
    ChoiMatrix j = kraus_to_choi(env);
    CMatrix state = j.matrix() / static_cast<double>(env.d_in());
    PptResult ppt = is_ppt(state, j.dims(), tol);
    double value = realignment_value(state, j.dims());
    ComplementaryClass verdict = !ppt.ppt            ? ComplementaryClass::Npt
                                 : value > 1 + tol ? ComplementaryClass::PptEntangled
                                                   : ComplementaryClass::PptUndetected;
    return {verdict, ppt.min_eigenvalue, value};
}

}  // namespace qcap
