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

#include <cmath>

#include "gtest/gtest.h"

#include "qcap/error.h"
#include "qcap/random.h"
#include "test_util.h"

using namespace qcap;
using qcap::testing::pauli_x;
using qcap::testing::pauli_z;

TEST(linalg, herm_eig_pauli_x) {
    HermitianEig e = herm_eig(pauli_x());
    ASSERT_EQ(e.eigenvalues.size(), 2);
    ASSERT_NEAR(e.eigenvalues[0], -1, 1e-12);
    ASSERT_NEAR(e.eigenvalues[1], 1, 1e-12);
    // Eigenvectors are (|0⟩ ∓ |1⟩)/√2 up to phase.
    for (int k = 0; k < 2; k++) {
        CVector v = e.eigenvectors.col(k);
        CVector xv = pauli_x() * v;
        ASSERT_LT((xv - e.eigenvalues[k] * v).norm(), 1e-12);
        ASSERT_NEAR(std::abs(v(0)), 1 / std::sqrt(2.0), 1e-12);
        ASSERT_NEAR(std::abs(v(1)), 1 / std::sqrt(2.0), 1e-12);
    }
}

TEST(linalg, herm_eig_rejects_bad_input) {
    CMatrix rect = CMatrix::Zero(2, 3);
    try {
        herm_eig(rect);
        FAIL() << "expected NonSquare";
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::NonSquare);
    }
    CMatrix skew = CMatrix::Zero(2, 2);
    skew(0, 1) = 1;
    try {
        herm_eig(skew);
        FAIL() << "expected NotHermitian";
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::NotHermitian);
    }
}

TEST(linalg, herm_eig_reconstructs_random) {
    Rng rng(11);
    for (int t = 0; t < 200; t++) {
        size_t d = 1 + t % 6;
        CMatrix u = random_unitary(d, rng);
        CMatrix a = CMatrix::Random(d, d);
        CMatrix h = a + a.adjoint();
        h = u * h * u.adjoint();
        HermitianEig e = herm_eig(h);
        CMatrix back = e.eigenvectors * e.eigenvalues.cast<Complex>().asDiagonal() * e.eigenvectors.adjoint();
        ASSERT_LT((back - h).norm(), 1e-10 * std::max(1.0, h.norm()));
        for (Eigen::Index k = 1; k < e.eigenvalues.size(); k++) {
            ASSERT_LE(e.eigenvalues[k - 1], e.eigenvalues[k]);
        }
    }
}

TEST(linalg, entropy_values) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = 0.9;
    m(1, 1) = 0.1;
    ASSERT_NEAR(matrix_entropy(m), 0.468996, 1e-6);
    ASSERT_NEAR(matrix_entropy(m), qcap::testing::binary_entropy(0.1), 1e-12);
    ASSERT_NEAR(matrix_entropy(CMatrix::Identity(4, 4) / 4.0), 2, 1e-12);
    CMatrix pure = CMatrix::Zero(3, 3);
    pure(1, 1) = 1;
    ASSERT_EQ(matrix_entropy(pure), 0);
}

TEST(linalg, entropy_ignores_tiny_negative_eigenvalues) {
    RVector ev(3);
    ev << -1e-14, 0.5, 0.5;
    ASSERT_NEAR(spectrum_entropy(ev), 1, 1e-12);
}

TEST(linalg, entropy_additive_on_products) {
    Rng rng(5);
    for (int t = 0; t < 50; t++) {
        QuantumState a = random_state(2, rng);
        QuantumState b = random_state(3, rng);
        double lhs = matrix_entropy(kron(a.matrix(), b.matrix()));
        ASSERT_NEAR(lhs, matrix_entropy(a.matrix()) + matrix_entropy(b.matrix()), 1e-10);
    }
}

TEST(linalg, kron_matches_elementwise_definition) {
    CMatrix x = pauli_x();
    CMatrix z = pauli_z();
    CMatrix k = kron(x, z);
    ASSERT_EQ(k.rows(), 4);
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            for (int a = 0; a < 2; a++) {
                for (int b = 0; b < 2; b++) {
                    ASSERT_EQ(k(i * 2 + a, j * 2 + b), x(i, j) * z(a, b));
                }
            }
        }
    }
}

namespace {

// Direct quadruple-loop partial traces.
CMatrix trace_out_b(const CMatrix &m, size_t da, size_t db) {
    CMatrix r = CMatrix::Zero(da, da);
    for (size_t i = 0; i < da; i++) {
        for (size_t j = 0; j < da; j++) {
            for (size_t k = 0; k < db; k++) {
                r(i, j) += m(i * db + k, j * db + k);
            }
        }
    }
    return r;
}

CMatrix trace_out_a(const CMatrix &m, size_t da, size_t db) {
    CMatrix r = CMatrix::Zero(db, db);
    for (size_t i = 0; i < db; i++) {
        for (size_t j = 0; j < db; j++) {
            for (size_t k = 0; k < da; k++) {
                r(i, j) += m(k * db + i, k * db + j);
            }
        }
    }
    return r;
}

}  // namespace

TEST(linalg, partial_trace_matches_loops) {
    Rng rng(7);
    for (size_t da = 1; da <= 3; da++) {
        for (size_t db = 1; db <= 4; db++) {
            CMatrix m = CMatrix::Random(da * db, da * db);
            ASSERT_LT((partial_trace(m, {da, db}, Subsystem::A) - trace_out_b(m, da, db)).norm(), 1e-13);
            ASSERT_LT((partial_trace(m, {da, db}, Subsystem::B) - trace_out_a(m, da, db)).norm(), 1e-13);
        }
    }
}

TEST(linalg, partial_trace_dimension_mismatch) {
    CMatrix m = CMatrix::Identity(5, 5);
    try {
        partial_trace(m, {2, 2}, Subsystem::A);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
}

TEST(linalg, partial_transpose_bell) {
    RVector ev = herm_eigenvalues(partial_transpose(qcap::testing::bell_state(), {2, 2}, Subsystem::B));
    ASSERT_NEAR(ev[0], -0.5, 1e-12);
    ASSERT_NEAR(ev[1], 0.5, 1e-12);
    ASSERT_NEAR(ev[2], 0.5, 1e-12);
    ASSERT_NEAR(ev[3], 0.5, 1e-12);
}

TEST(linalg, partial_transpose_involution_and_full_transpose) {
    CMatrix m = CMatrix::Random(6, 6);
    Dims d{2, 3};
    CMatrix ta = partial_transpose(m, d, Subsystem::A);
    CMatrix tb = partial_transpose(m, d, Subsystem::B);
    ASSERT_LT((partial_transpose(ta, d, Subsystem::A) - m).norm(), 1e-14);
    ASSERT_LT((partial_transpose(ta, d, Subsystem::B) - m.transpose()).norm(), 1e-14);
    ASSERT_LT((partial_transpose(tb, d, Subsystem::A) - m.transpose()).norm(), 1e-14);
}

TEST(linalg, norms) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = 3;
    m(1, 1) = -4;
    ASSERT_NEAR(frobenius_norm(m), 5, 1e-14);
    ASSERT_NEAR(trace_norm(m), 7, 1e-12);
    ASSERT_EQ(hermiticity_defect(m), 0);
    CMatrix p = project_psd(m);
    ASSERT_NEAR(p(0, 0).real(), 3, 1e-12);
    ASSERT_NEAR(p(1, 1).real(), 0, 1e-12);
}

TEST(linalg, log2_psd_is_matrix_log) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = 0.25;
    m(1, 1) = 0.5;
    CMatrix l = log2_psd(m);
    ASSERT_NEAR(l(0, 0).real(), -2, 1e-12);
    ASSERT_NEAR(l(1, 1).real(), -1, 1e-12);
}
