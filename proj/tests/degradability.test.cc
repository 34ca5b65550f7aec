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

#include "gtest/gtest.h"

#include "qcap/error.h"
#include "qcap/random.h"
#include "qcap/zoo.h"

using namespace qcap;

namespace {

double choi_gap(const ChoiMatrix &a, const KrausChannel &b) {
    return frobenius_norm(a.matrix() - kraus_to_choi(b).matrix());
}

}  // namespace

TEST(degradability, closed_form_amplitude_damping_maps) {
    // AD(b) ∘ AD(a) = AD(1 − (1−a)(1−b)) and the complement of AD(γ) is AD(1−γ).
    for (double g : {0.1, 0.25, 0.4}) {
        KrausChannel d = amplitude_damping((1 - 2 * g) / (1 - g));
        ASSERT_LT(choi_distance(compose(d, amplitude_damping(g)), complementary_channel(amplitude_damping(g))), 1e-12);
    }
    for (double g : {0.6, 0.75, 0.9}) {
        KrausChannel a = amplitude_damping((2 * g - 1) / g);
        ASSERT_LT(choi_distance(compose(a, complementary_channel(amplitude_damping(g))), amplitude_damping(g)), 1e-12);
    }
}

TEST(degradability, amplitude_damping_degradable) {
    for (double g : {0.1, 0.25, 0.4}) {
        DegradabilityCertificate c = is_degradable(amplitude_damping(g));
        ASSERT_EQ(c.verdict, Verdict::Degradable) << g;
        ASSERT_LE(c.residual, 1e-6);
        // The output of AD spans all 2×2 matrices, so the degrading map is unique.
        ASSERT_LT(choi_gap(c.connecting_map, amplitude_damping((1 - 2 * g) / (1 - g))), 1e-5);
        ASSERT_EQ(is_antidegradable(amplitude_damping(g)).verdict, Verdict::InfeasibleAtTolerance);
    }
}

TEST(degradability, amplitude_damping_antidegradable) {
    for (double g : {0.6, 0.75}) {
        DegradabilityCertificate c = is_antidegradable(amplitude_damping(g));
        ASSERT_EQ(c.verdict, Verdict::AntiDegradable) << g;
        ASSERT_LT(choi_gap(c.connecting_map, amplitude_damping((2 * g - 1) / g)), 1e-5);
        ASSERT_EQ(is_degradable(amplitude_damping(g)).verdict, Verdict::InfeasibleAtTolerance);
    }
}

TEST(degradability, half_erasure_is_both) {
    KrausChannel n = erasure(0.5, 2);
    ASSERT_EQ(is_degradable(n).verdict, Verdict::Degradable);
    ASSERT_EQ(is_antidegradable(n).verdict, Verdict::AntiDegradable);
}

TEST(degradability, history_non_increasing) {
    Rng rng(31);
    for (int t = 0; t < 5; t++) {
        KrausChannel n = random_channel(2, 2, 2, rng);
        ConnectingMap m = find_connecting_map(n, complementary_channel(n));
        ASSERT_EQ(m.history.size(), m.iterations);
        for (size_t k = 10; k + 1 < m.history.size(); k++) {
            ASSERT_LE(m.history[k + 1], m.history[k] + 1e-12) << k;
        }
    }
}

TEST(degradability, starting_point_does_not_change_optimum) {
    KrausChannel n = amplitude_damping(0.6);
    KrausChannel env = complementary_channel(n);
    Rng rng(41);
    std::vector<double> residuals;
    for (int t = 0; t < 5; t++) {
        SolverOptions opts;
        opts.initial = kraus_to_choi(random_channel(2, 2, 4, rng)).matrix();
        residuals.push_back(find_connecting_map(n, env, opts).residual);
    }
    for (double r : residuals) {
        ASSERT_NEAR(r, residuals[0], 1e-5);
        ASSERT_GT(r, 1e-3);
    }
}

TEST(degradability, deterministic) {
    KrausChannel n = amplitude_damping(0.3);
    ConnectingMap a = find_connecting_map(n, complementary_channel(n));
    ConnectingMap b = find_connecting_map(n, complementary_channel(n));
    ASSERT_EQ(a.residual, b.residual);
    ASSERT_EQ(a.iterations, b.iterations);
}

TEST(degradability, identity_degradation_reduces_to_degradable) {
    Rng rng(51);
    std::vector<KrausChannel> corpus = {
        amplitude_damping(0.2), amplitude_damping(0.7), dephasing(0.1), erasure(0.3, 2), erasure(0.7, 2),
        depolarizing(2, 0.3),
    };
    for (int t = 0; t < 4; t++) {
        corpus.push_back(random_channel(2, 2, 2, rng));
    }
    for (const auto &n : corpus) {
        size_t d_env = complementary_channel(n).d_out();
        DegradabilityCertificate pd = is_partially_degradable(n, identity_channel(d_env));
        DegradabilityCertificate deg = is_degradable(n);
        ASSERT_EQ(pd.verdict == Verdict::PdFeasible, deg.verdict == Verdict::Degradable);
        ASSERT_NEAR(pd.residual, deg.residual, 1e-6);
    }
}

TEST(degradability, replace_degradation_is_always_feasible) {
    Rng rng(61);
    for (int t = 0; t < 5; t++) {
        KrausChannel n = random_channel(2, 3, 3, rng);
        size_t d_env = complementary_channel(n).d_out();
        DegradabilityCertificate c = is_partially_degradable(n, replace_channel(d_env, 2));
        ASSERT_EQ(c.verdict, Verdict::PdFeasible);
        ASSERT_TRUE(c.degradation_map.has_value());
    }
}

TEST(degradability, degradation_dimension_mismatch) {
    ASSERT_THROW(is_partially_degradable(amplitude_damping(0.2), identity_channel(3)), Error);
}

TEST(degradability, search_one_dimensional_environment) {
    SearchOptions opts;
    opts.degraded_env_dim = 1;
    opts.restarts = 2;
    DegradabilityCertificate c = search_degradation_map(depolarizing(2, 0.9), opts);
    ASSERT_EQ(c.verdict, Verdict::PdFeasible);
    ASSERT_EQ(c.degradation_map->d_out(), 1);
}

TEST(degradability, search_certificate_is_self_consistent) {
    KrausChannel n = amplitude_damping(0.3);
    SearchOptions opts;
    opts.restarts = 3;
    DegradabilityCertificate c = search_degradation_map(n, opts);
    ASSERT_EQ(c.verdict, Verdict::PdFeasible);
    KrausChannel t = choi_to_kraus(c.connecting_map);
    KrausChannel d = choi_to_kraus(*c.degradation_map);
    double residual =
        frobenius_norm(kraus_to_choi(compose(t, n)).matrix() - kraus_to_choi(compose(d, complementary_channel(n))).matrix());
    ASSERT_NEAR(residual, c.residual, 1e-7);
    ASSERT_LE(residual, 1e-6);
}

TEST(degradability, search_rejects_bad_options) {
    SearchOptions opts;
    opts.restarts = 0;
    ASSERT_THROW(search_degradation_map(dephasing(0.1), opts), Error);
}

TEST(degradability, certificate_json) {
    nlohmann::json j = certificate_to_json(is_partially_degradable(dephasing(0.1), replace_channel(2, 2)));
    ASSERT_EQ(j["verdict"], "pd-feasible");
    ASSERT_TRUE(j.contains("degradation_map"));
    ASSERT_EQ(j["connecting_map"]["kind"], "choi");
}
