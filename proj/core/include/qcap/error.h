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

#ifndef QCAP_ERROR_H
#define QCAP_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcap {

enum class ErrorKind {
    NonSquare,
    NotHermitian,
    ConvergenceFailure,
    InvalidState,
    DimensionMismatch,
    InvalidChannel,
    NotCP,
    NotTP,
    DimensionTooLarge,
    UnknownChannel,
    InvalidParams,
    ConstructionFailed,
    ParseError,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library. The kind lets callers (the CLI in
/// particular) map failures onto exit codes without string matching.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);
    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

}  // namespace qcap

#endif
