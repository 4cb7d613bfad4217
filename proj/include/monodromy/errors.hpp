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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace monodromy {

enum class ErrorKind {
  // Input text could not be read as a series.
  kSyntax,
  kDuplicateTerm,
  kNegativeExponent,
  kWrongVariable,
  kZeroCoefficient,
  // Input parsed but does not describe a germ the recursions accept.
  kNotQuasiOrdinary,
  kAllHorizontalPairs,
  kNotReduced,
  kEmptyCharacteristics,
  kInvalidCharacteristics,
  kInvalidParameters,
};

std::string_view error_kind_name(ErrorKind kind);

// True for the kinds raised while reading input (CLI exit code 1).
bool is_parse_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt);

  ErrorKind kind() const { return kind_; }
  // Byte offset into the parsed text, for syntax errors.
  std::optional<std::size_t> offset() const { return offset_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> offset_;
};

}  // namespace monodromy
