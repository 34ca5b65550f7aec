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


#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.h"
#include "qcap/error.h"

using namespace qcap::tools;

namespace {

void add_common(CLI::App *sub, CommonOptions &o) {
    sub->add_option("--builtin", o.builtin, "Builtin channel, e.g. dephasing:0.1 or erasure:0.5,2");
    sub->add_option("--file", o.file, "Channel file (JSON, kind kraus or choi)");
    sub->add_option("--tol", o.tol, "Tolerance of the command's verdict");
    sub->add_option("--restarts", o.restarts, "Optimizer restarts")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Base seed; restart k uses seed + k");
    sub->add_option("--max-iters", o.max_iters, "Iteration cap of each local solve")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "Output format")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}}));
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Capacity quantities and degradability certificates for finite-dimensional quantum channels"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "qcap 0.1.0");

    CommonOptions common;
    std::string complement_out;
    DegradabilityOptions deg;
    CapacityOptions cap;
    DeltaOptions delta;
    VerifyOptions verify;

    auto *validate = app.add_subcommand("validate", "Check a channel against the CPTP invariants");
    add_common(validate, common);

    auto *info = app.add_subcommand("info", "Dimensions, Kraus rank and the entanglement class of the complementary");
    add_common(info, common);

    auto *complement = app.add_subcommand("complement", "Complementary channel from the Stinespring dilation");
    add_common(complement, common);
    complement->add_option("--out", complement_out, "Write the complementary channel to this file");

    auto *degradability = app.add_subcommand("degradability", "Search for a degrading or anti-degrading map");
    add_common(degradability, common);
    degradability->add_flag("--anti", deg.anti, "Test anti-degradability");
    degradability->add_flag("--pd", deg.pd, "Test T ∘ N = D ∘ N_c for a given degradation map D");
    degradability->add_flag("--search", deg.search, "Search over degradation maps D as well");
    degradability->add_option("--dmap", deg.dmap_file, "Degradation map file for --pd");
    degradability->add_option("--dmap-builtin", deg.dmap_builtin, "Builtin degradation map for --pd");
    degradability->add_option("--denv", deg.denv, "Degraded environment dimension for --search")
        ->check(CLI::PositiveNumber);
    degradability->add_option("--out", deg.out_path, "Write the certificate as JSON");

    auto *capacity = app.add_subcommand("capacity", "Maximize coherent and private information");
    add_common(capacity, common);
    capacity->add_option("--which", cap.which, "Quantity to report")->check(CLI::IsMember({"q1", "p1", "both"}));
    capacity->add_option("--sweep", cap.sweep, "Sweep a builtin parameter, e.g. p=0:0.5:0.05");
    capacity->add_flag("--eta", cap.eta, "Also maximize eta on its own");

    auto *delta_cmd = app.add_subcommand("delta", "Rate improvement of a degraded-environment pair");
    add_common(delta_cmd, common);
    delta_cmd->add_option("--channel-d", delta.channel_d, "Channel file of the degradable channel");
    delta_cmd->add_option("--channel-pd", delta.channel_pd, "Channel file of the comparison channel");
    delta_cmd->add_option("--dmap", delta.dmap_file, "Degradation map file applied to the environment");
    delta_cmd->add_option("--dmap-builtin", delta.dmap_builtin, "Builtin degradation map");

    auto *verify_cmd = app.add_subcommand("verify", "Numerical checks of the capacity theorems");
    add_common(verify_cmd, common);
    verify_cmd->add_option("check", verify.which, "theorem1, theorem2 or additivity")
        ->required()
        ->check(CLI::IsMember({"theorem1", "theorem2", "additivity"}));
    verify_cmd->add_option("--dmap", verify.dmap_file, "Degradation map file for theorem2");
    verify_cmd->add_option("--dmap-builtin", verify.dmap_builtin, "Builtin degradation map for theorem2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*validate) {
            return cmd_validate(common, std::cout);
        }
        if (*info) {
            return cmd_info(common, std::cout);
        }
        if (*complement) {
            return cmd_complement(common, complement_out, std::cout);
        }
        if (*degradability) {
            return cmd_degradability(common, deg, std::cout);
        }
        if (*capacity) {
            return cmd_capacity(common, cap, std::cout);
        }
        if (*delta_cmd) {
            return cmd_delta(common, delta, std::cout);
        }
        if (*verify_cmd) {
            return cmd_verify(common, verify, std::cout);
        }
    } catch (const qcap::Error &e) {
        std::cerr << "qcap: error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception &e) {
        std::cerr << "qcap: error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
