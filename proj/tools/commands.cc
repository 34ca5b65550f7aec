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


#include "commands.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "qcap/capacities.h"
#include "qcap/channel_io.h"
#include "qcap/degradability.h"
#include "qcap/entanglement.h"
#include "qcap/error.h"
#include "qcap/theorems.h"
#include "qcap/zoo.h"

namespace qcap::tools {

namespace {

constexpr const char *kLowerBoundNote = "best found over restarts; a lower bound on the maximum";
constexpr const char *kBoundEntangledNote =
    "complementary Choi state is PPT entangled; P(N_AE) > 0 is asserted by theory, not checked";

OptimizerConfig optimizer_config(const CommonOptions &o) {
    OptimizerConfig cfg;
    cfg.restarts = o.restarts;
    cfg.seed = o.seed;
    if (o.max_iters) {
        cfg.max_iters = *o.max_iters;
    }
    return cfg;
}

std::string describe(const CommonOptions &o) {
    return o.builtin.empty() ? o.file : o.builtin;
}

std::optional<KrausChannel> load_dmap(const std::string &file, const std::string &builtin) {
    if (file.empty() && builtin.empty()) {
        return std::nullopt;
    }
    return load_channel(file, builtin);
}

void add_channel_fields(Report &r, const KrausChannel &n) {
    r.add("d_in", n.d_in());
    r.add("d_out", n.d_out());
    r.add("kraus_count", n.kraus_count());
}

void add_delta(Report &r, const DeltaReport &d) {
    r.number("delta", d.delta_holevo);
    r.number("delta_capacity_difference", d.delta_capacity);
    r.number("delta_reading_gap", d.gap());
    r.number("p_degradable", d.p_degradable);
    r.number("p_pd", d.p_pd);
    r.number("chi_eve_degradable_at_opt", d.chi_eve_degradable_at_opt);
    r.number("chi_eve_pd_at_opt", d.chi_eve_pd_at_opt);
    r.add("rate_improvement_interval", nlohmann::ordered_json::array({0.0, number(std::max(0.0, d.delta_holevo))}));
}

struct Sweep {
    std::string name;
    size_t index;
    std::vector<double> points;
};

std::vector<std::string> parameter_names(std::string_view builtin_name) {
    if (builtin_name == "identity") {
        return {"d"};
    }
    if (builtin_name == "dephasing") {
        return {"p"};
    }
    if (builtin_name == "depolarizing") {
        return {"d", "p"};
    }
    if (builtin_name == "amplitude_damping" || builtin_name == "ad") {
        return {"gamma"};
    }
    if (builtin_name == "erasure") {
        return {"p", "d"};
    }
    if (builtin_name == "replace") {
        return {"d_in", "d_out"};
    }
    return {};
}

double parse_double(const std::string &token, const std::string &context) {
    char *end = nullptr;
    double v = std::strtod(token.c_str(), &end);
    if (token.empty() || end != token.c_str() + token.size() || !std::isfinite(v)) {
        throw Error(ErrorKind::InvalidParams, "cannot parse '" + token + "' in " + context);
    }
    return v;
}

Sweep parse_sweep(const std::string &spec, std::string_view builtin_name) {
    size_t eq = spec.find('=');
    if (eq == std::string::npos) {
        throw Error(ErrorKind::InvalidParams, "sweep must look like name=start:stop:step");
    }
    Sweep s;
    s.name = spec.substr(0, eq);
    std::vector<std::string> names = parameter_names(builtin_name);
    auto it = std::find(names.begin(), names.end(), s.name);
    if (it == names.end()) {
        throw Error(
            ErrorKind::InvalidParams, "builtin '" + std::string(builtin_name) + "' has no parameter '" + s.name + "'");
    }
    s.index = static_cast<size_t>(it - names.begin());
    std::string range = spec.substr(eq + 1);
    size_t c1 = range.find(':');
    size_t c2 = c1 == std::string::npos ? std::string::npos : range.find(':', c1 + 1);
    if (c2 == std::string::npos) {
        throw Error(ErrorKind::InvalidParams, "sweep must look like name=start:stop:step");
    }
    double start = parse_double(range.substr(0, c1), "--sweep");
    double stop = parse_double(range.substr(c1 + 1, c2 - c1 - 1), "--sweep");
    double step = parse_double(range.substr(c2 + 1), "--sweep");
    if (step <= 0 || stop < start) {
        throw Error(ErrorKind::InvalidParams, "sweep needs step > 0 and stop >= start");
    }
    double count = std::floor((stop - start) / step + 1e-9) + 1;
    if (count > 10000) {
        throw Error(ErrorKind::InvalidParams, "sweep has more than 10000 points");
    }
    for (size_t k = 0; k < static_cast<size_t>(count); k++) {
        s.points.push_back(start + static_cast<double>(k) * step);
    }
    return s;
}

struct CapacityValues {
    std::optional<StateOptimum> q1;
    std::optional<EnsembleOptimum> p1;
    std::optional<double> eta_at_p_opt;
    std::optional<EnsembleOptimum> eta_max;
};

CapacityValues compute_capacities(const KrausChannel &n, const OptimizerConfig &cfg, const CapacityOptions &c) {
    CapacityValues v;
    bool want_p = c.which != "q1";
    // P⁽¹⁾ is seeded from the Q⁽¹⁾ optimum, so Q⁽¹⁾ is computed either way.
    v.q1 = maximize_coherent_information(n, cfg);
    if (want_p) {
        v.p1 = maximize_private_information(n, cfg, *v.q1);
        v.eta_at_p_opt = eta_value(n, v.p1->argmax);
    }
    if (c.eta) {
        v.eta_max = maximize_eta(n, cfg);
    }
    return v;
}

nlohmann::ordered_json to_ordered(const nlohmann::json &j) {
    return nlohmann::ordered_json::parse(j.dump());
}

}  // namespace

KrausChannel load_channel(const std::string &file, const std::string &builtin) {
    if (!file.empty() && !builtin.empty()) {
        throw Error(ErrorKind::InvalidParams, "give a channel file or a builtin, not both");
    }
    if (!builtin.empty()) {
        return builtin_from_spec(builtin);
    }
    if (!file.empty()) {
        return load_channel_file(file);
    }
    throw Error(ErrorKind::InvalidParams, "no channel given; use --builtin name:params or --file PATH");
}

KrausChannel load_channel(const CommonOptions &o) {
    return load_channel(o.file, o.builtin);
}

int cmd_validate(const CommonOptions &o, std::ostream &out) {
    double tol = o.tol.value_or(kFileTolerance);
    KrausChannel n = o.file.empty() || !o.builtin.empty() ? load_channel(o) : load_channel_file(o.file, tol);
    ChoiDefects defects = choi_defects(n.d_in(), n.d_out(), kraus_to_choi(n).matrix());
    KrausChannel env = complementary_channel(n);
    Report r;
    r.add("channel", describe(o));
    r.add("valid", true);
    add_channel_fields(r, n);
    r.number("tp_residual", n.tp_residual());
    r.number("choi_min_eigenvalue", defects.min_eigenvalue);
    r.number("tolerance", tol);
    r.add("complementary_d_out", env.d_out());
    r.number("complementary_tp_residual", env.tp_residual());
    r.print(out, o.format);
    return kOk;
}

int cmd_info(const CommonOptions &o, std::ostream &out) {
    KrausChannel n = load_channel(o);
    KrausChannel minimal = minimal_kraus(n);
    ChoiDefects defects = choi_defects(n.d_in(), n.d_out(), kraus_to_choi(n).matrix());
    ComplementaryClassification cls = classify_complementary(n, o.tol.value_or(1e-9));
    Report r;
    r.add("channel", describe(o));
    add_channel_fields(r, n);
    r.add("kraus_rank", minimal.kraus_count());
    r.add("environment_dim", minimal.kraus_count());
    r.number("tp_residual", n.tp_residual());
    r.number("choi_min_eigenvalue", defects.min_eigenvalue);
    r.add("complementary_class", std::string(complementary_class_name(cls.verdict)));
    r.number("complementary_min_pt_eigenvalue", cls.min_pt_eigenvalue);
    r.number("complementary_realignment", cls.realignment);
    if (cls.verdict == ComplementaryClass::PptEntangled) {
        r.add("note", kBoundEntangledNote);
    }
    r.print(out, o.format);
    return kOk;
}

int cmd_complement(const CommonOptions &o, const std::string &out_path, std::ostream &out) {
    KrausChannel env = complementary_channel(load_channel(o));
    if (!out_path.empty()) {
        save_channel_file(out_path, env);
    }
    if (o.format == Format::Json) {
        out << channel_to_json(env).dump(2) << "\n";
        return kOk;
    }
    Report r;
    r.add("channel", "complementary of " + describe(o));
    add_channel_fields(r, env);
    r.number("tp_residual", env.tp_residual());
    if (!out_path.empty()) {
        r.add("written_to", out_path);
    }
    r.print(out, o.format);
    return kOk;
}

int cmd_degradability(const CommonOptions &o, const DegradabilityOptions &d, std::ostream &out) {
    if (static_cast<int>(d.anti) + static_cast<int>(d.pd) + static_cast<int>(d.search) > 1) {
        throw Error(ErrorKind::InvalidParams, "choose at most one of --anti, --pd, --search");
    }
    KrausChannel n = load_channel(o);
    SolverOptions opts;
    opts.tol = o.tol.value_or(opts.tol);
    if (o.max_iters) {
        opts.max_iters = *o.max_iters;
    }
    std::string question = "degradable";
    DegradabilityCertificate cert = [&] {
        if (d.anti) {
            question = "anti-degradable";
            return is_antidegradable(n, opts);
        }
        if (d.pd) {
            question = "partially degradable";
            std::optional<KrausChannel> dmap = load_dmap(d.dmap_file, d.dmap_builtin);
            if (!dmap) {
                throw Error(ErrorKind::InvalidParams, "--pd needs --dmap FILE or --dmap-builtin SPEC");
            }
            return is_partially_degradable(n, *dmap, opts);
        }
        if (d.search) {
            question = "degradation map search";
            SearchOptions s;
            s.degraded_env_dim = d.denv;
            s.tol = opts.tol;
            s.restarts = o.restarts;
            s.max_iters = opts.max_iters;
            s.seed = o.seed;
            return search_degradation_map(n, s);
        }
        return is_degradable(n, opts);
    }();
    if (!d.out_path.empty()) {
        std::ofstream f(d.out_path);
        if (!f) {
            throw Error(ErrorKind::ParseError, "cannot write " + d.out_path);
        }
        f << certificate_to_json(cert).dump(2) << "\n";
    }
    if (o.format == Format::Json) {
        nlohmann::ordered_json j = to_ordered(certificate_to_json(cert));
        j["channel"] = describe(o);
        j["question"] = question;
        out << j.dump(2) << "\n";
        return kOk;
    }
    Report r;
    r.add("channel", describe(o));
    r.add("question", question);
    r.add("verdict", std::string(verdict_name(cert.verdict)));
    r.number("residual", cert.residual);
    r.add("iterations", cert.iterations);
    r.number("tolerance", cert.tolerance);
    r.add("connecting_map", std::to_string(cert.connecting_map.d_in()) + " -> " + std::to_string(cert.connecting_map.d_out()));
    if (cert.degradation_map) {
        r.add(
            "degradation_map",
            std::to_string(cert.degradation_map->d_in()) + " -> " + std::to_string(cert.degradation_map->d_out()));
    }
    if (!d.out_path.empty()) {
        r.add("certificate_written_to", d.out_path);
    }
    r.print(out, o.format);
    return kOk;
}

int cmd_capacity(const CommonOptions &o, const CapacityOptions &c, std::ostream &out) {
    OptimizerConfig cfg = optimizer_config(o);
    if (o.tol) {
        cfg.tol = *o.tol;
    }

    if (!c.sweep.empty()) {
        if (o.builtin.empty()) {
            throw Error(ErrorKind::InvalidParams, "--sweep needs --builtin");
        }
        size_t colon = o.builtin.find(':');
        std::string name = o.builtin.substr(0, colon);
        std::vector<double> params;
        if (colon != std::string::npos) {
            std::string rest = o.builtin.substr(colon + 1);
            size_t pos = 0;
            while (true) {
                size_t comma = rest.find(',', pos);
                params.push_back(parse_double(rest.substr(pos, comma == std::string::npos ? comma : comma - pos), "--builtin"));
                if (comma == std::string::npos) {
                    break;
                }
                pos = comma + 1;
            }
        }
        Sweep s = parse_sweep(c.sweep, name);
        params.resize(std::max(params.size(), s.index + 1));
        std::vector<std::string> columns = {s.name};
        bool want_q = c.which != "p1";
        bool want_p = c.which != "q1";
        if (want_q) {
            columns.push_back("q1");
        }
        if (want_p) {
            columns.push_back("p1");
            columns.push_back("eta_at_p_opt");
        }
        if (c.eta) {
            columns.push_back("eta_max");
        }
        std::vector<std::vector<nlohmann::ordered_json>> rows;
        for (double x : s.points) {
            params[s.index] = x;
            KrausChannel n = builtin(name, params);
            CapacityValues v = compute_capacities(n, cfg, c);
            std::vector<nlohmann::ordered_json> row = {number(x)};
            if (want_q) {
                row.push_back(number(std::max(0.0, v.q1->value)));
            }
            if (want_p) {
                row.push_back(number(std::max(0.0, v.p1->value)));
                row.push_back(number(*v.eta_at_p_opt));
            }
            if (c.eta) {
                row.push_back(number(v.eta_max->value));
            }
            rows.push_back(std::move(row));
        }
        Report r;
        r.add("channel", name);
        r.add("sweep", c.sweep);
        r.add("values", kLowerBoundNote);
        r.table("rows", columns, std::move(rows));
        r.print(out, o.format);
        return kOk;
    }

    KrausChannel n = load_channel(o);
    CapacityValues v = compute_capacities(n, cfg, c);
    Report r;
    r.add("channel", describe(o));
    if (c.which != "p1") {
        r.number("q1", std::max(0.0, v.q1->value));
        r.number("q1_raw", v.q1->value);
    }
    if (v.p1) {
        r.number("p1", std::max(0.0, v.p1->value));
        r.number("p1_raw", v.p1->value);
        r.number("eta_at_p_opt", *v.eta_at_p_opt);
    }
    if (v.eta_max) {
        r.number("eta_max", v.eta_max->value);
    }
    r.add("values", kLowerBoundNote);
    r.add("restarts", o.restarts);
    r.add("seed", o.seed);
    if (o.format == Format::Json) {
        if (c.which != "p1") {
            r.add("q1_input", to_ordered(state_to_json(v.q1->argmax)));
            r.add("q1_restarts", to_ordered(restarts_to_json(v.q1->restarts)));
        }
        if (v.p1) {
            r.add("p1_ensemble", to_ordered(ensemble_to_json(v.p1->argmax)));
            r.add("p1_restarts", to_ordered(restarts_to_json(v.p1->restarts)));
        }
        if (v.eta_max) {
            r.add("eta_ensemble", to_ordered(ensemble_to_json(v.eta_max->argmax)));
        }
    } else {
        bool failed = v.q1->all_failed || (v.p1 && v.p1->all_failed);
        if (failed) {
            r.add("warning", "every restart failed its first line search");
        }
    }
    r.print(out, o.format);
    return kOk;
}

int cmd_delta(const CommonOptions &o, const DeltaOptions &d, std::ostream &out) {
    OptimizerConfig cfg = optimizer_config(o);
    KrausChannel n_d = d.channel_d.empty() ? load_channel(o) : load_channel(d.channel_d, "");
    std::optional<KrausChannel> dmap = load_dmap(d.dmap_file, d.dmap_builtin);
    if (d.channel_pd.empty() == !dmap.has_value()) {
        throw Error(ErrorKind::InvalidParams, "give exactly one of --channel-pd and --dmap/--dmap-builtin");
    }
    DeltaReport delta = dmap ? verify_theorem2(n_d, *dmap, cfg).delta
                             : compute_delta(n_d, load_channel(d.channel_pd, ""), cfg);
    Report r;
    r.add("channel_d", d.channel_d.empty() ? describe(o) : d.channel_d);
    if (dmap) {
        r.add("degradation_map", d.dmap_file.empty() ? d.dmap_builtin : d.dmap_file);
    } else {
        r.add("channel_pd", d.channel_pd);
    }
    add_delta(r, delta);
    if (o.format == Format::Json) {
        r.add("argmax", to_ordered(ensemble_to_json(delta.argmax)));
    }
    r.print(out, o.format);
    return kOk;
}

int cmd_verify(const CommonOptions &o, const VerifyOptions &v, std::ostream &out) {
    KrausChannel n = load_channel(o);
    OptimizerConfig cfg = optimizer_config(o);
    CheckTolerances tol;
    if (o.tol) {
        tol.equality = *o.tol;
    }
    Report r;
    r.add("channel", describe(o));
    r.add("theorem", v.which);
    std::vector<TheoremCheck> checks;
    if (v.which == "theorem1") {
        Theorem1Report t = verify_theorem1(n, cfg, tol);
        r.number("q1", t.capacities.q1);
        r.number("p1", t.capacities.p1);
        r.number("eta_at_p_opt", t.capacities.eta_at_p_opt);
        checks = std::move(t.checks);
    } else if (v.which == "theorem2") {
        std::optional<KrausChannel> dmap = load_dmap(v.dmap_file, v.dmap_builtin);
        if (!dmap) {
            throw Error(ErrorKind::InvalidParams, "theorem2 needs --dmap FILE or --dmap-builtin SPEC");
        }
        Theorem2Report t = verify_theorem2(n, *dmap, cfg, tol);
        add_delta(r, t.delta);
        checks = std::move(t.checks);
    } else if (v.which == "additivity") {
        checks.push_back(additivity_check(n, cfg, tol));
    } else {
        throw Error(ErrorKind::InvalidParams, "unknown check '" + v.which + "'");
    }
    bool pass = all_pass(checks);
    r.add("result", pass ? "pass" : "fail");
    r.checks(checks);
    r.print(out, o.format);
    return pass ? kOk : kCheckFailed;
}

}  // namespace qcap::tools
