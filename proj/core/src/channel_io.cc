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

#include "qcap/channel_io.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qcap {

namespace {

using nlohmann::json;

size_t read_dim(const json &doc, const char *key) {
    if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() <= 0) {
        throw Error(ErrorKind::ParseError, std::string("missing or invalid positive integer field '") + key + "'");
    }
    return doc[key].get<size_t>();
}

void require_shape(const CMatrix &m, size_t rows, size_t cols, const char *what) {
    if (static_cast<size_t>(m.rows()) != rows || static_cast<size_t>(m.cols()) != cols) {
        throw Error(
            ErrorKind::ParseError,
            std::string(what) + " is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                std::to_string(rows) + "x" + std::to_string(cols));
    }
}

}  // namespace

json matrix_to_json(const CMatrix &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            row.push_back({m(r, c).real(), m(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CMatrix matrix_from_json(const json &j) {
    if (!j.is_array() || j.empty()) {
        throw Error(ErrorKind::ParseError, "matrix must be a non-empty array of rows");
    }
    size_t cols = 0;
    for (const auto &row : j) {
        if (!row.is_array() || row.empty()) {
            throw Error(ErrorKind::ParseError, "matrix row must be a non-empty array");
        }
        if (cols == 0) {
            cols = row.size();
        } else if (row.size() != cols) {
            throw Error(ErrorKind::ParseError, "matrix rows have different lengths");
        }
    }
    CMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
    for (size_t r = 0; r < j.size(); r++) {
        for (size_t c = 0; c < cols; c++) {
            const json &entry = j[r][c];
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
                throw Error(ErrorKind::ParseError, "matrix entries must be [re, im] number pairs");
            }
            Complex z(entry[0].get<double>(), entry[1].get<double>());
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw Error(ErrorKind::ParseError, "matrix entry is not finite");
            }
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = z;
        }
    }
    return m;
}

json channel_to_json(const KrausChannel &n) {
    json ops = json::array();
    for (const auto &k : n.operators()) {
        ops.push_back(matrix_to_json(k));
    }
    return {{"kind", "kraus"}, {"d_in", n.d_in()}, {"d_out", n.d_out()}, {"operators", std::move(ops)}};
}

json choi_to_json(const ChoiMatrix &j) {
    return {{"kind", "choi"}, {"d_in", j.d_in()}, {"d_out", j.d_out()}, {"matrix", matrix_to_json(j.matrix())}};
}

KrausChannel channel_from_json(const json &doc, double tol) {
    if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
        throw Error(ErrorKind::ParseError, "channel document needs a string field 'kind'");
    }
    size_t d_in = read_dim(doc, "d_in");
    size_t d_out = read_dim(doc, "d_out");
    std::string kind = doc["kind"].get<std::string>();
    if (kind == "kraus") {
        if (!doc.contains("operators") || !doc["operators"].is_array() || doc["operators"].empty()) {
            throw Error(ErrorKind::ParseError, "kraus channel needs a non-empty 'operators' array");
        }
        std::vector<CMatrix> ops;
        for (const auto &op : doc["operators"]) {
            CMatrix k = matrix_from_json(op);
            require_shape(k, d_out, d_in, "Kraus operator");
            ops.push_back(std::move(k));
        }
        return KrausChannel(d_in, d_out, std::move(ops), tol);
    }
    if (kind == "choi") {
        if (!doc.contains("matrix")) {
            throw Error(ErrorKind::ParseError, "choi channel needs a 'matrix' field");
        }
        CMatrix m = matrix_from_json(doc["matrix"]);
        require_shape(m, d_in * d_out, d_in * d_out, "Choi matrix");
        return choi_to_kraus(ChoiMatrix(d_in, d_out, std::move(m), tol));
    }
    throw Error(ErrorKind::ParseError, "unknown channel kind '" + kind + "'");
}

KrausChannel load_channel_file(const std::string &path, double tol) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open " + path);
    }
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded()) {
        throw Error(ErrorKind::ParseError, path + " is not valid JSON");
    }
    return channel_from_json(doc, tol);
}

void save_channel_file(const std::string &path, const KrausChannel &n) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::ParseError, "cannot write " + path);
    }
    out << channel_to_json(n).dump(2) << "\n";
}

double report_number(double x) {
    if (!std::isfinite(x)) {
        return x;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

}  // namespace qcap
