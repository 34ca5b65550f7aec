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

#include "gtest/gtest.h"

#include "qcap/error.h"
#include "qcap/random.h"
#include "qcap/zoo.h"
#include "test_util.h"

using namespace qcap;

namespace {

// J = Σ_ij |i⟩⟨j| ⊗ N(|i⟩⟨j|), evaluated one matrix unit at a time.
CMatrix choi_by_definition(const KrausChannel &n) {
    size_t di = n.d_in();
    size_t dout = n.d_out();
    CMatrix j = CMatrix::Zero(di * dout, di * dout);
    for (size_t a = 0; a < di; a++) {
        for (size_t b = 0; b < di; b++) {
            CMatrix e = CMatrix::Zero(di, di);
            e(a, b) = 1;
            CMatrix out = n.apply(e);
            j.block(a * dout, b * dout, dout, dout) = out;
        }
    }
    return j;
}

}  // namespace

TEST(channel, kraus_validation) {
    CMatrix half = CMatrix::Identity(2, 2) * 0.5;
    try {
        KrausChannel bad(2, 2, {half});
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::InvalidChannel);
        ASSERT_NE(std::string(e.what()).find("1.06"), std::string::npos) << e.what();
    }
    ASSERT_THROW(KrausChannel(2, 2, {}), Error);
    ASSERT_THROW(KrausChannel(2, 2, {CMatrix::Identity(3, 2)}), Error);
    Rng rng(1);
    ASSERT_THROW(random_channel(3, 1, 2, rng), Error);
}

TEST(channel, choi_of_replace_channel) {
    ChoiMatrix j = kraus_to_choi(replace_channel(2, 2));
    CMatrix expect = CMatrix::Zero(4, 4);
    expect(0, 0) = 1;
    expect(2, 2) = 1;
    ASSERT_LT((j.matrix() - expect).norm(), 1e-14);
}

TEST(channel, choi_matches_definition_on_random_channels) {
    Rng rng(21);
    for (int t = 0; t < 20; t++) {
        size_t di = 1 + t % 3;
        size_t dout = 1 + (t / 3) % 3;
        size_t k = 1 + t % 4;
        KrausChannel n = random_channel(di, dout, k, rng);
        ASSERT_LT((kraus_to_choi(n).matrix() - choi_by_definition(n)).norm(), 1e-12);
    }
}

TEST(channel, choi_to_kraus_dephasing) {
    KrausChannel n = choi_to_kraus(kraus_to_choi(dephasing(0.1)));
    ASSERT_EQ(n.kraus_count(), 2);
    // Normalized Hilbert-Schmidt weights Tr(K†K)/d.
    double w0 = (n.operators()[0].adjoint() * n.operators()[0]).trace().real() / 2;
    double w1 = (n.operators()[1].adjoint() * n.operators()[1]).trace().real() / 2;
    ASSERT_NEAR(w0, 0.9, 1e-12);
    ASSERT_NEAR(w1, 0.1, 1e-12);
}

TEST(channel, choi_validation) {
    CMatrix j = kraus_to_choi(dephasing(0.1)).matrix();
    CMatrix neg = j;
    neg(0, 0) -= 2.0;
    neg(3, 3) += 2.0;
    try {
        ChoiMatrix bad(2, 2, neg);
        FAIL();
    } catch (const Error &e) {
        ASSERT_TRUE(e.kind() == ErrorKind::NotCP || e.kind() == ErrorKind::NotTP);
    }
    try {
        ChoiMatrix bad(2, 2, j * 1.5);
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.kind(), ErrorKind::NotTP);
    }
}

TEST(channel, kraus_choi_round_trip) {
    Rng rng(4);
    for (int t = 0; t < 30; t++) {
        size_t di = 1 + t % 3;
        size_t dout = 1 + (t / 2) % 3;
        size_t k = std::max<size_t>(1 + t % 5, (di + dout - 1) / dout);
        KrausChannel n = random_channel(di, dout, k, rng);
        KrausChannel back = choi_to_kraus(kraus_to_choi(n));
        ASSERT_LT((kraus_to_choi(back).matrix() - kraus_to_choi(n).matrix()).norm(), 1e-10);
        ASSERT_LE(back.kraus_count(), di * dout);
    }
}

TEST(channel, dephasing_half_on_plus_is_maximally_mixed) {
    CVector plus(2);
    plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
    QuantumState out = apply(dephasing(0.5), QuantumState::pure(plus));
    ASSERT_LT((out.matrix() - CMatrix::Identity(2, 2) / 2.0).norm(), 1e-14);
}

TEST(channel, apply_adjoint_is_dual) {
    Rng rng(8);
    KrausChannel n = random_channel(3, 2, 3, rng);
    for (int t = 0; t < 10; t++) {
        CMatrix x = CMatrix::Random(3, 3);
        CMatrix y = CMatrix::Random(2, 2);
        Complex lhs = (y.adjoint() * n.apply(x)).trace();
        Complex rhs = (n.apply_adjoint(y).adjoint() * x).trace();
        ASSERT_LT(std::abs(lhs - rhs), 1e-12);
    }
}

TEST(channel, stinespring_is_isometry_and_reproduces_channel) {
    Rng rng(9);
    KrausChannel n = random_channel(2, 3, 4, rng);
    StinespringIsometry v = kraus_to_stinespring(n);
    ASSERT_LT((v.v.adjoint() * v.v - CMatrix::Identity(2, 2)).norm(), 1e-12);
    QuantumState rho = random_state(2, rng);
    CMatrix big = v.v * rho.matrix() * v.v.adjoint();
    CMatrix out = partial_trace(big, {3, v.d_env}, Subsystem::A);
    ASSERT_LT((out - n.apply(rho.matrix())).norm(), 1e-12);
}

TEST(channel, complementary_output_entropy_on_pure_inputs) {
    Rng rng(10);
    for (int t = 0; t < 20; t++) {
        KrausChannel n = random_channel(2 + t % 2, 2 + t % 3, 1 + t % 4, rng);
        KrausChannel nc = complementary_channel(n);
        ASSERT_EQ(nc.d_in(), n.d_in());
        QuantumState psi = QuantumState::pure(random_ket(n.d_in(), rng));
        ASSERT_NEAR(von_neumann_entropy(apply(n, psi)), von_neumann_entropy(apply(nc, psi)), 1e-9);
    }
}

TEST(channel, complementary_of_complementary_is_isometric_to_channel) {
    Rng rng(12);
    KrausChannel n = random_channel(2, 2, 2, rng);
    KrausChannel ncc = complementary_channel(complementary_channel(n));
    for (int t = 0; t < 5; t++) {
        QuantumState rho = random_state(2, rng);
        ASSERT_NEAR(von_neumann_entropy(apply(ncc, rho)), von_neumann_entropy(apply(n, rho)), 1e-9);
    }
}

TEST(channel, minimal_kraus_merges_dependent_operators) {
    CMatrix i = CMatrix::Identity(2, 2);
    KrausChannel redundant(2, 2, {i * std::sqrt(0.5), i * std::sqrt(0.5)});
    KrausChannel m = minimal_kraus(redundant);
    ASSERT_EQ(m.kraus_count(), 1);
    ASSERT_LT(choi_distance(m, identity_channel(2)), 1e-12);
}

TEST(channel, compose_dephasing) {
    double p = 0.1;
    double q = 0.3;
    KrausChannel c = compose(dephasing(q), dephasing(p));
    ASSERT_LT(choi_distance(c, dephasing(p + q - 2 * p * q)), 1e-12);
}

TEST(channel, compose_dimension_mismatch) {
    ASSERT_THROW(compose(dephasing(0.1), erasure(0.5, 2)), Error);
}

TEST(channel, tensor_acts_on_products) {
    Rng rng(13);
    KrausChannel a = random_channel(2, 2, 2, rng);
    KrausChannel b = random_channel(2, 3, 2, rng);
    KrausChannel ab = tensor(a, b);
    QuantumState r = random_state(2, rng);
    QuantumState s = random_state(2, rng);
    CMatrix lhs = ab.apply(kron(r.matrix(), s.matrix()));
    CMatrix rhs = kron(a.apply(r.matrix()), b.apply(s.matrix()));
    ASSERT_LT((lhs - rhs).norm(), 1e-12);
    ASSERT_EQ(tensor_power(a, 2).d_in(), 4);
}

TEST(channel, depolarizing_matches_formula) {
    Rng rng(14);
    for (size_t d : {2, 3}) {
        double p = 0.37;
        KrausChannel n = depolarizing(d, p);
        for (int t = 0; t < 5; t++) {
            CMatrix x = CMatrix::Random(d, d);
            CMatrix expect = (1 - p) * x + p * x.trace() * CMatrix::Identity(d, d) / static_cast<double>(d);
            ASSERT_LT((n.apply(x) - expect).norm(), 1e-12);
        }
    }
}

TEST(channel, wiretap_pairs) {
    KrausChannel n = amplitude_damping(0.3);
    WiretapChannel w = WiretapChannel::of(n);
    ASSERT_LT(choi_distance(w.eve, complementary_channel(n)), 1e-14);
    WiretapChannel r = WiretapChannel::degraded(n, replace_channel(2, 2));
    ASSERT_LT(choi_distance(r.eve, replace_channel(2, 2)), 1e-12);
}
