// Copyright 2026 The Monodromy Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "monodromy/errors.hpp"

namespace monodromy {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSyntax: return "SyntaxError";
    case ErrorKind::kDuplicateTerm: return "DuplicateTerm";
    case ErrorKind::kNegativeExponent: return "NegativeExponent";
    case ErrorKind::kWrongVariable: return "WrongVariable";
    case ErrorKind::kZeroCoefficient: return "ZeroCoefficient";
    case ErrorKind::kNotQuasiOrdinary: return "NotQuasiOrdinary";
    case ErrorKind::kAllHorizontalPairs: return "AllHorizontalPairs";
    case ErrorKind::kNotReduced: return "NotReduced";
    case ErrorKind::kEmptyCharacteristics: return "EmptyCharacteristics";
    case ErrorKind::kInvalidCharacteristics: return "InvalidCharacteristics";
    case ErrorKind::kInvalidParameters: return "InvalidParameters";
  }
  return "Error";
}

bool is_parse_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSyntax:
    case ErrorKind::kDuplicateTerm:
    case ErrorKind::kNegativeExponent:
    case ErrorKind::kWrongVariable:
    case ErrorKind::kZeroCoefficient:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> offset)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
      kind_(kind),
      offset_(offset) {}

}  // namespace monodromy
