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


// Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails. Runtime budgets are part of each criterion.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qcap/capacities.h"
#include "qcap/channel_io.h"
#include "qcap/degradability.h"
#include "qcap/entanglement.h"
#include "qcap/error.h"
#include "qcap/random.h"
#include "qcap/theorems.h"
#include "qcap/zoo.h"
#include "test_util.h"

using namespace qcap;
using qcap::testing::binary_entropy;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int number;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
};

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

class Tracker {
   public:
    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass_ = false;
            if (failures_++ < 5) {
                failed_ << " [failed: " << what << "]";
            }
        }
    }
    void worst(double v) {
        worst_ = std::max(worst_, v);
    }
    double worst() const {
        return worst_;
    }
    Outcome outcome(const std::string &summary) const {
        return {pass_, summary + failed_.str()};
    }

   private:
    bool pass_ = true;
    int failures_ = 0;
    double worst_ = 0;
    std::ostringstream failed_;
};

OptimizerConfig default_config() {
    return OptimizerConfig{};
}

Outcome eq5_identity() {
    Rng rng(1001);
    Tracker t;
    size_t cases = 0;
    for (int c = 0; c < 50; c++) {
        size_t d = 1 + c % 3;
        size_t d_out = 2 + (c / 3) % 3;
        size_t kraus = std::max<size_t>(1 + c % 4, (d + d_out - 1) / d_out);
        KrausChannel n = random_channel(d, d_out, kraus, rng);
        KrausChannel env = complementary_channel(n);
        for (int e = 0; e < 5; e++) {
            Ensemble ens = random_pure_ensemble(d, 1 + (c + e) % 6, rng);
            double lhs = coherent_information(n, QuantumState(ens.average()));
            double rhs = holevo_information(n, ens) - holevo_information(env, ens);
            t.worst(std::abs(lhs - rhs));
            cases++;
        }
    }
    t.require(t.worst() <= 1e-9, "identity residual above 1e-9");
    return t.outcome("worst |I_coh - (chi_B - chi_E)| = " + sci(t.worst()) + " over " + std::to_string(cases) + " cases");
}

Outcome chain_rule() {
    Rng rng(1002);
    Tracker t;
    for (int c = 0; c < 50; c++) {
        size_t d = 2 + c % 2;
        KrausChannel n = random_channel(d, 2 + c % 3, 2 + c % 2, rng);
        KrausChannel env = complementary_channel(n);
        HierarchicalEnsemble h = random_hierarchical(d, 1 + c % 4, 1 + (c / 4) % 4, rng);
        // I(AA':X) = I(A':X) + I(A:X|A') on both outputs.
        double b = holevo_information(n, h.flatten()) - holevo_information(n, h.coarse()) -
                   conditional_holevo(n, h, Side::B);
        double e = holevo_information(env, h.flatten()) - holevo_information(env, h.coarse()) -
                   conditional_holevo(n, h, Side::E);
        // P-value = Q-value − η at this input.
        double p = private_information_value(n, h) -
                   (coherent_information(n, QuantumState(h.average())) - eta_value(n, h));
        t.worst(std::max({std::abs(b), std::abs(e), std::abs(p)}));
    }
    t.require(t.worst() <= 1e-9, "identity residual above 1e-9");
    return t.outcome("worst chain-rule / P = Q - eta residual = " + sci(t.worst()) + " over 50 ensembles");
}

struct KnownChannel {
    std::string label;
    KrausChannel channel;
    double oracle;
    double tol;
    bool check_p1;
};

std::vector<KnownChannel> known_channels() {
    std::vector<KnownChannel> out;
    for (double p : {0.05, 0.1, 0.2}) {
        out.push_back({"dephasing(" + sci(p) + ")", dephasing(p), 1 - binary_entropy(p), 2e-3, true});
    }
    for (double g : {0.1, 0.25, 0.4}) {
        out.push_back(
            {"amplitude_damping(" + sci(g) + ")", amplitude_damping(g), qcap::testing::amplitude_damping_q1_oracle(g),
             1e-3, false});
    }
    for (double p : {0.25, 0.5, 0.75}) {
        out.push_back({"erasure(" + sci(p) + ")", erasure(p, 2), std::max(0.0, 1 - 2 * p), 1e-3, false});
    }
    return out;
}

Outcome known_capacities() {
    Tracker t;
    for (const auto &k : known_channels()) {
        StateOptimum q = maximize_coherent_information(k.channel, default_config());
        double err = std::abs(q.value - k.oracle);
        t.worst(err);
        t.require(err <= k.tol, k.label + " q1 off by " + sci(err));
        if (k.check_p1) {
            EnsembleOptimum p = maximize_private_information(k.channel, default_config(), q);
            double perr = std::abs(p.value - k.oracle);
            t.worst(perr);
            t.require(perr <= k.tol, k.label + " p1 off by " + sci(perr));
        }
    }
    return t.outcome("worst distance to analytic or grid oracle = " + sci(t.worst()) + " over 9 channels");
}

Outcome theorem1_equality() {
    Tracker t;
    std::vector<std::pair<std::string, KrausChannel>> channels;
    for (const auto &k : known_channels()) {
        channels.emplace_back(k.label, k.channel);
    }
    // A certified PD channel: degradable (D = identity) with a PPT entangled
    // complementary.
    KrausChannel tiles = tiles_complement();
    DegradabilityCertificate cert = is_degradable(tiles);
    t.require(cert.verdict == Verdict::Degradable, "tiles_complement not certified");
    channels.emplace_back("tiles_complement", tiles);
    for (const auto &[label, n] : channels) {
        StateOptimum q = maximize_coherent_information(n, default_config());
        EnsembleOptimum p = maximize_private_information(n, default_config(), q);
        double gap = std::abs(p.value - q.value);
        t.worst(gap);
        t.require(gap <= 5e-3, label + " |p1 - q1| = " + sci(gap));
    }
    return t.outcome(
        "worst |p1 - q1| = " + sci(t.worst()) + " over " + std::to_string(channels.size()) +
        " channels incl. certified tiles_complement");
}

Outcome theorem2_suite() {
    Tracker t;
    std::vector<std::pair<std::string, KrausChannel>> degradable;
    for (double p : {0.05, 0.1, 0.2}) {
        degradable.emplace_back("dephasing(" + sci(p) + ")", dephasing(p));
    }
    for (double g : {0.1, 0.25, 0.4}) {
        degradable.emplace_back("amplitude_damping(" + sci(g) + ")", amplitude_damping(g));
    }
    double worst_eq43 = 0;
    double min_delta = 1e9;
    double worst_chi = 0;
    size_t cases = 0;
    for (const auto &[label, n] : degradable) {
        size_t d_env = complementary_channel(n).d_out();
        std::vector<std::pair<std::string, KrausChannel>> maps = {
            {"identity", identity_channel(d_env)},
            {"replace", replace_channel(d_env, d_env)},
            {"depolarizing(0.5)", depolarizing(d_env, 0.5)},
        };
        for (const auto &[dname, dmap] : maps) {
            Theorem2Report r = verify_theorem2(n, dmap, default_config());
            const DeltaReport &d = r.delta;
            double eq43 = std::abs(d.p_pd - (d.p_degradable + d.delta_holevo));
            worst_eq43 = std::max(worst_eq43, eq43);
            min_delta = std::min(min_delta, d.delta_holevo);
            std::string where = label + " with " + dname;
            t.require(d.delta_holevo >= -1e-3, where + " delta = " + sci(d.delta_holevo));
            t.require(eq43 <= 5e-3, where + " eq43 residual " + sci(eq43));
            if (dname == "replace") {
                worst_chi = std::max(worst_chi, d.chi_eve_pd_at_opt);
                t.require(d.chi_eve_pd_at_opt <= 1e-9, where + " chi(E') = " + sci(d.chi_eve_pd_at_opt));
            }
            cases++;
        }
    }
    return t.outcome(
        "min delta = " + sci(min_delta) + ", worst |P_PD - (P_D + delta)| = " + sci(worst_eq43) +
        ", worst chi(E') under replace = " + sci(worst_chi) + " over " + std::to_string(cases) + " pairs");
}

Outcome degradability_certificates() {
    Tracker t;
    double g = 0.25;
    KrausChannel ad = amplitude_damping(g);
    KrausChannel env = complementary_channel(ad);
    KrausChannel closed_form = amplitude_damping((1 - 2 * g) / (1 - g));
    double oracle_residual =
        frobenius_norm(kraus_to_choi(compose(closed_form, ad)).matrix() - kraus_to_choi(env).matrix());
    t.require(oracle_residual <= 1e-12, "closed-form map residual " + sci(oracle_residual));
    DegradabilityCertificate deg = is_degradable(ad);
    t.require(deg.verdict == Verdict::Degradable, "AD(0.25) not degradable");
    t.require(deg.residual <= 1e-6, "AD(0.25) residual " + sci(deg.residual));
    double map_distance = frobenius_norm(deg.connecting_map.matrix() - kraus_to_choi(closed_form).matrix());
    t.require(map_distance <= 1e-5, "found map differs from closed form by " + sci(map_distance));
    // Recompute the residual of the certified map without the solver.
    double recomputed = frobenius_norm(
        kraus_to_choi(compose(choi_to_kraus(deg.connecting_map), ad)).matrix() - kraus_to_choi(env).matrix());
    t.require(recomputed <= 1e-6, "recomputed residual " + sci(recomputed));

    DegradabilityCertificate anti = is_antidegradable(amplitude_damping(0.75));
    t.require(anti.verdict == Verdict::AntiDegradable, "AD(0.75) not anti-degradable");
    KrausChannel er = erasure(0.5, 2);
    DegradabilityCertificate er_deg = is_degradable(er);
    DegradabilityCertificate er_anti = is_antidegradable(er);
    t.require(er_deg.verdict == Verdict::Degradable, "erasure(0.5) not degradable");
    t.require(er_anti.verdict == Verdict::AntiDegradable, "erasure(0.5) not anti-degradable");
    return t.outcome(
        "AD(0.25) residual " + sci(deg.residual) + ", distance to closed-form map " + sci(map_distance) +
        "; AD(0.75) anti residual " + sci(anti.residual) + "; erasure(0.5) residuals " + sci(er_deg.residual) + " / " +
        sci(er_anti.residual));
}

Outcome entanglement_fixtures() {
    Tracker t;
    PptResult bell = is_ppt(qcap::testing::bell_state(), {2, 2});
    t.require(!bell.ppt && std::abs(bell.min_eigenvalue + 0.5) <= 1e-9, "Bell min PT eigenvalue " + sci(bell.min_eigenvalue));
    CMatrix tiles = tiles_state();
    PptResult tp = is_ppt(tiles, {3, 3});
    double realigned = realignment_value(tiles, {3, 3});
    t.require(tp.ppt, "tiles not PPT");
    t.require(realigned > 1, "tiles realignment " + sci(realigned));
    std::ostringstream s;
    s.precision(10);
    s << "Bell min PT eigenvalue " << bell.min_eigenvalue << "; tiles min PT eigenvalue " << sci(tp.min_eigenvalue)
      << ", realignment " << realigned;
    return t.outcome(s.str());
}

Outcome additivity_spot_check() {
    Tracker t;
    std::vector<std::pair<std::string, KrausChannel>> channels = {
        {"dephasing(0.1)", dephasing(0.1)}, {"identity(2)", identity_channel(2)}, {"erasure(0.5)", erasure(0.5, 2)}};
    for (const auto &[label, n] : channels) {
        double one = q1_multicopy(n, 1, default_config());
        double two = q1_multicopy(n, 2, default_config());
        double gap = std::abs(two - one);
        t.worst(gap);
        t.require(gap <= 5e-3, label + " gap " + sci(gap));
    }
    return t.outcome("worst |q1(N x N)/2 - q1(N)| = " + sci(t.worst()) + " over 3 channels");
}

struct CommandResult {
    int code;
    std::string output;
};

CommandResult run_command(const std::string &cmd) {
    CommandResult r{-1, ""};
    FILE *pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 512> buf{};
    while (fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) {
        r.output += buf.data();
    }
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Outcome round_trip_and_validation() {
    Tracker t;
    Rng rng(1009);
    for (int c = 0; c < 20; c++) {
        size_t d_in = 1 + c % 3;
        size_t d_out = 1 + (c / 3) % 3;
        size_t kraus = std::max<size_t>(1 + c % 4, (d_in + d_out - 1) / d_out);
        KrausChannel n = random_channel(d_in, d_out, kraus, rng);
        CMatrix j = kraus_to_choi(n).matrix();
        KrausChannel back = choi_to_kraus(ChoiMatrix(d_in, d_out, j));
        double err = frobenius_norm(kraus_to_choi(back).matrix() - j);
        t.worst(err);
        t.require(err <= 1e-8, "round trip error " + sci(err));
    }

    std::filesystem::path dir = std::filesystem::temp_directory_path() / "qcap_acceptance";
    std::filesystem::create_directories(dir);
    struct Case {
        std::string file;
        std::string content;
        /// Expected residual text; empty for syntax errors.
        std::string residual;
    };
    // 0.5·I as the only Kraus operator: ‖0.25 I − I‖_F = 0.75·√2.
    nlohmann::json half = channel_to_json(dephasing(0.1));
    half["operators"] = nlohmann::json::array({matrix_to_json(CMatrix::Identity(2, 2) * 0.5)});
    // Choi of dephasing scaled by 1.2: ‖1.2 I − I‖_F = 0.2·√2.
    nlohmann::json scaled = choi_to_json(kraus_to_choi(dephasing(0.1)));
    scaled["matrix"] = matrix_to_json(kraus_to_choi(dephasing(0.1)).matrix() * 1.2);
    std::vector<Case> cases = {
        {"half.json", half.dump(), "1.06066"},
        {"scaled_choi.json", scaled.dump(), "0.282843"},
        {"truncated.json", R"({"kind":"kraus","d_in":2,"d_out":2,"operators":[[[[1,0)", ""},
        {"ragged.json", R"({"kind":"kraus","d_in":2,"d_out":2,"operators":[[[[1,0],[0,0]],[[0,0]]]]})", ""},
    };
#ifdef QCAP_CLI_PATH
    for (const auto &c : cases) {
        std::filesystem::path p = dir / c.file;
        std::ofstream(p) << c.content;
        CommandResult r = run_command(std::string("\"") + QCAP_CLI_PATH + "\" validate --file \"" + p.string() + "\"");
        t.require(r.code == 2, c.file + " exit code " + std::to_string(r.code));
        if (!c.residual.empty()) {
            t.require(r.output.find(c.residual) != std::string::npos, c.file + " lacks residual " + c.residual);
        } else {
            t.require(r.output.find("error") != std::string::npos, c.file + " lacks a diagnostic");
        }
    }
#else
    t.require(false, "qcap tool not built");
#endif
    std::filesystem::remove_all(dir);
    return t.outcome(
        "worst Kraus/Choi round trip error " + sci(t.worst()) + " over 20 channels; " + std::to_string(cases.size()) +
        " malformed files rejected with exit 2");
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "eq5-identity", 10, eq5_identity},
        {2, "chain-rule", 10, chain_rule},
        {3, "known-capacities", 120, known_capacities},
        {4, "theorem1-equality", 180, theorem1_equality},
        {5, "theorem2", 300, theorem2_suite},
        {6, "degradability-certificates", 60, degradability_certificates},
        {7, "entanglement-fixtures", 1, entanglement_fixtures},
        {8, "additivity", 300, additivity_spot_check},
        {9, "round-trip-validation", 60, round_trip_and_validation},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = seconds < c.budget_seconds;
        bool pass = o.pass && in_budget;
        failed += pass ? 0 : 1;
        char timing[64];
        std::snprintf(timing, sizeof(timing), "%.2fs of %gs", seconds, c.budget_seconds);
        std::cout << (pass ? "PASS" : "FAIL") << "  " << c.number << " " << c.name << ": " << o.detail << " ("
                  << timing << (in_budget ? "" : ", over budget") << ")" << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
