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


#include "report.h"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "qcap/channel_io.h"

namespace qcap::tools {

namespace {

std::string format_cell(const nlohmann::ordered_json &v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_number_float()) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.12g", v.get<double>());
        return buf;
    }
    if (v.is_null()) {
        return "-";
    }
    return v.dump();
}

}  // namespace

nlohmann::ordered_json number(double value) {
    return report_number(value);
}

void Report::add(std::string_view key, const nlohmann::ordered_json &value) {
    fields_[std::string(key)] = value;
}

void Report::number(std::string_view key, double value) {
    fields_[std::string(key)] = tools::number(value);
}

void Report::table(
    std::string_view key, std::vector<std::string> columns, std::vector<std::vector<nlohmann::ordered_json>> rows) {
    tables_.push_back({std::string(key), std::move(columns), std::move(rows)});
}

void Report::checks(const std::vector<TheoremCheck> &checks) {
    std::vector<std::vector<nlohmann::ordered_json>> rows;
    for (const auto &c : checks) {
        rows.push_back(
            {c.name, std::string(check_status_name(c.status)), tools::number(c.lhs), tools::number(c.rhs), c.tolerance,
             c.notes});
    }
    table("checks", {"name", "status", "lhs", "rhs", "tolerance", "notes"}, std::move(rows));
}

void Report::print(std::ostream &out, Format format) const {
    if (format == Format::Json) {
        nlohmann::ordered_json j = fields_;
        for (const auto &t : tables_) {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (const auto &r : t.rows) {
                nlohmann::ordered_json row = nlohmann::ordered_json::object();
                for (size_t c = 0; c < t.columns.size() && c < r.size(); c++) {
                    row[t.columns[c]] = r[c];
                }
                rows.push_back(std::move(row));
            }
            j[t.key] = std::move(rows);
        }
        out << j.dump(2) << "\n";
        return;
    }

    size_t width = 0;
    for (const auto &[k, v] : fields_.items()) {
        width = std::max(width, k.size());
    }
    for (const auto &[k, v] : fields_.items()) {
        out << k << std::string(width - k.size() + 2, ' ') << format_cell(v) << "\n";
    }
    for (const auto &t : tables_) {
        if (!fields_.empty()) {
            out << "\n";
        }
        std::vector<size_t> widths;
        for (const auto &c : t.columns) {
            widths.push_back(c.size());
        }
        std::vector<std::vector<std::string>> cells;
        for (const auto &r : t.rows) {
            std::vector<std::string> line;
            for (size_t c = 0; c < t.columns.size(); c++) {
                line.push_back(c < r.size() ? format_cell(r[c]) : "");
                widths[c] = std::max(widths[c], line.back().size());
            }
            cells.push_back(std::move(line));
        }
        auto emit = [&](const std::vector<std::string> &line) {
            std::string s;
            for (size_t c = 0; c < line.size(); c++) {
                s += line[c];
                if (c + 1 < line.size()) {
                    s += std::string(widths[c] - line[c].size() + 2, ' ');
                }
            }
            out << s << "\n";
        };
        emit(t.columns);
        for (const auto &line : cells) {
            emit(line);
        }
    }
}

}  // namespace qcap::tools
