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

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "monodromy/puiseux.hpp"

namespace monodromy {

enum class SeriesKind { kCurve, kSurface };

// One monomial c * x^lambda * y^mu as written by the user.
struct ParsedTerm {
  std::optional<Rational> coefficient;
  Rational lambda;
  Rational mu;
  std::size_t offset = 0;  // where the term starts in the input
};

using Series = std::variant<CurveSeries, SurfaceSeries>;

// Reads the ASCII grammar
//
//   series := term ('+' term)*
//   term   := [rat '*'] factor ('*' factor)*
//   factor := ('x' | 'y') ['^' '(' rat ')' | '^' int]
//   rat    := int '/' int | int
//
// with whitespace ignored between tokens. Coefficients are checked to be
// nonzero and then dropped. Throws Error with kinds kSyntax (with offset),
// kDuplicateTerm, kNegativeExponent, kWrongVariable and kZeroCoefficient.
std::vector<ParsedTerm> parse_terms(std::string_view text, SeriesKind kind);

// Accepts the grammar above or, when the text starts with '{', the JSON
// forms {"kind":"curve","exponents":[...]} and
// {"kind":"surface","pairs":[[l, m], ...]} with "p/q" strings.
Series parse_series(std::string_view text, SeriesKind kind);
CurveSeries parse_curve(std::string_view text);
SurfaceSeries parse_surface(std::string_view text);

// JSON form only; the kind is taken from the object. An "expr" string may
// stand in for "exponents"/"pairs".
Series series_from_json(const nlohmann::json& object);
nlohmann::json series_to_json(const Series& series);

// Canonical text in the input grammar, e.g. "y^(3/2) + y^(7/4)".
std::string render_series(const CurveSeries& series);
std::string render_series(const SurfaceSeries& series);

}  // namespace monodromy
