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

#include "monodromy/curve.hpp"

#include <cassert>

#include "monodromy/errors.hpp"

namespace monodromy {

CurveTruncation curve_truncate(const CurveCharacteristics& c) {
  if (c.empty()) {
    throw Error(ErrorKind::kEmptyCharacteristics, "a smooth curve has no truncation");
  }
  const Rational& mu1 = c.mus().front();
  return {mu1.denominator(), mu1.numerator()};
}

CurveCharacteristics curve_derive(const CurveCharacteristics& c) {
  const CurveTruncation t = curve_truncate(c);
  const Rational& mu1 = c.mus().front();
  std::vector<Rational> derived;
  derived.reserve(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) {
    derived.push_back(Rational(t.m) * (c.mus()[i] - mu1 + Rational(t.n)));
  }
  return CurveCharacteristics(std::move(derived));
}

BigInt curve_truncation_euler(const CurveTruncation& t) { return t.m + t.n - t.m * t.n; }

ZetaExpr curve_truncation_zeta(const CurveTruncation& t) {
  return zeta_div(zeta_mul(ZetaExpr::factor(t.m), ZetaExpr::factor(t.n)),
                  ZetaExpr::factor(t.m * t.n));
}

CurveInvariants curve_invariants(const CurveCharacteristics& c) {
  if (c.empty()) return {BigInt(1), BigInt(1), ZetaExpr::factor(1)};

  const CurveTruncation t = curve_truncate(c);
  const CurveInvariants derived = curve_invariants(curve_derive(c));
  const BigInt& dp = derived.degree;

  CurveInvariants out;
  out.degree = t.m * dp;
  out.euler = dp * (curve_truncation_euler(t) - 1) + derived.euler;
  out.horizontal = zeta_div(zeta_mul(zeta_subst(curve_truncation_zeta(t), dp), derived.horizontal),
                            ZetaExpr::factor(dp));
  assert(zeta_degree(out.horizontal) == out.euler);
  return out;
}

std::vector<CurveLevel> curve_trace(const CurveCharacteristics& c) {
  std::vector<CurveLevel> levels;
  CurveCharacteristics current = c;
  while (!current.empty()) {
    CurveCharacteristics next = curve_derive(current);
    levels.push_back({current, curve_truncate(current)});
    current = std::move(next);
  }
  return levels;
}

}  // namespace monodromy
