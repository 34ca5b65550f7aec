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

#ifndef QCAP_CHANNEL_IO_H
#define QCAP_CHANNEL_IO_H

#include <string>

#include <nlohmann/json.hpp>

#include "qcap/channel.h"

namespace qcap {

/// Tolerance applied to CPTP invariants of channels read from files.
inline constexpr double kFileTolerance = 1e-6;

/// Complex matrices are nested rows of [re, im] pairs.
nlohmann::json matrix_to_json(const CMatrix &m);
CMatrix matrix_from_json(const nlohmann::json &j);

/// {"kind":"kraus","d_in":..,"d_out":..,"operators":[...]}
nlohmann::json channel_to_json(const KrausChannel &n);
/// {"kind":"choi","d_in":..,"d_out":..,"matrix":[...]}
nlohmann::json choi_to_json(const ChoiMatrix &j);

/// Accepts either kind. Malformed documents raise ParseError; CPTP violations
/// beyond `tol` raise InvalidChannel / NotCP / NotTP with the residual in the
/// message.
KrausChannel channel_from_json(const nlohmann::json &doc, double tol = kFileTolerance);
KrausChannel load_channel_file(const std::string &path, double tol = kFileTolerance);
void save_channel_file(const std::string &path, const KrausChannel &n);

/// Rounds to 12 significant digits, the precision used in reports.
double report_number(double x);

}  // namespace qcap

#endif
