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

#include <vector>

#include "monodromy/puiseux.hpp"
#include "monodromy/zeta.hpp"

namespace monodromy {

// The truncation y^{n/m} of a plane curve, mu_1 = n/m in lowest terms.
struct CurveTruncation {
  BigInt m;
  BigInt n;

  friend bool operator==(const CurveTruncation&, const CurveTruncation&) = default;
};

struct CurveInvariants {
  BigInt degree;        // d, number of sheets
  BigInt euler;         // chi of the Milnor fiber
  ZetaExpr horizontal;  // H(t)
};

// Throws Error(kEmptyCharacteristics) for a smooth germ.
CurveTruncation curve_truncate(const CurveCharacteristics& c);

// Essential exponents of the derived curve, mu'_i = m (mu_{i+1} - mu_1 + n).
CurveCharacteristics curve_derive(const CurveCharacteristics& c);

// Closed forms for the truncation z^m = y^n.
BigInt curve_truncation_euler(const CurveTruncation& t);     // m + n - mn
ZetaExpr curve_truncation_zeta(const CurveTruncation& t);    // (t^m-1)(t^n-1)/(t^mn-1)

CurveInvariants curve_invariants(const CurveCharacteristics& c);

// One row per recursion level, outermost first.
struct CurveLevel {
  CurveCharacteristics characteristics;
  CurveTruncation truncation;
};
std::vector<CurveLevel> curve_trace(const CurveCharacteristics& c);

}  // namespace monodromy
