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


#ifndef QCAP_TOOLS_COMMANDS_H
#define QCAP_TOOLS_COMMANDS_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "qcap/channel.h"
#include "report.h"

namespace qcap::tools {

enum ExitCode { kOk = 0, kCheckFailed = 1, kInputError = 2 };

struct CommonOptions {
    std::string builtin;
    std::string file;
    std::optional<double> tol;
    size_t restarts = 8;
    uint64_t seed = 1;
    std::optional<size_t> max_iters;
    Format format = Format::Text;
};

/// Exactly one of --builtin and --file; raises InvalidParams otherwise.
KrausChannel load_channel(const CommonOptions &o);
/// A channel given by file path or builtin spec, whichever is non-empty.
KrausChannel load_channel(const std::string &file, const std::string &builtin);

int cmd_validate(const CommonOptions &o, std::ostream &out);
int cmd_info(const CommonOptions &o, std::ostream &out);
int cmd_complement(const CommonOptions &o, const std::string &out_path, std::ostream &out);

struct DegradabilityOptions {
    bool anti = false;
    bool pd = false;
    bool search = false;
    std::string dmap_file;
    std::string dmap_builtin;
    size_t denv = 2;
    std::string out_path;
};
int cmd_degradability(const CommonOptions &o, const DegradabilityOptions &d, std::ostream &out);

struct CapacityOptions {
    std::string which = "both";
    /// "name=start:stop:step" over one parameter of a builtin channel.
    std::string sweep;
    bool eta = false;
};
int cmd_capacity(const CommonOptions &o, const CapacityOptions &c, std::ostream &out);

struct DeltaOptions {
    std::string channel_d;
    std::string channel_pd;
    std::string dmap_file;
    std::string dmap_builtin;
};
int cmd_delta(const CommonOptions &o, const DeltaOptions &d, std::ostream &out);

struct VerifyOptions {
    std::string which;
    std::string dmap_file;
    std::string dmap_builtin;
};
int cmd_verify(const CommonOptions &o, const VerifyOptions &v, std::ostream &out);

}  // namespace qcap::tools

#endif
