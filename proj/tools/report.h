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


#ifndef QCAP_TOOLS_REPORT_H
#define QCAP_TOOLS_REPORT_H

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcap/theorems.h"

namespace qcap::tools {

enum class Format { Text, Json };

/// Ordered key/value report. Text output aligns keys in a column; JSON output
/// is one object in insertion order.
class Report {
   public:
    void add(std::string_view key, const nlohmann::ordered_json &value);
    /// Number rounded to 12 significant digits.
    void number(std::string_view key, double value);
    /// Table rendered as columns in text mode and as an array of objects in JSON.
    void table(std::string_view key, std::vector<std::string> columns, std::vector<std::vector<nlohmann::ordered_json>> rows);
    void checks(const std::vector<TheoremCheck> &checks);

    void print(std::ostream &out, Format format) const;

   private:
    struct Table {
        std::string key;
        std::vector<std::string> columns;
        std::vector<std::vector<nlohmann::ordered_json>> rows;
    };
    nlohmann::ordered_json fields_ = nlohmann::ordered_json::object();
    std::vector<Table> tables_;
};

nlohmann::ordered_json number(double value);

}  // namespace qcap::tools

#endif
