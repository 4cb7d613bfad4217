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

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "monodromy/rational.hpp"

namespace monodromy {

// A formal product  prod_k (t^k - 1)^{e_k}  with integer exponents.
//
// This is how horizontal and vertical monodromies are stored: as factor
// multisets, never as expanded polynomials. Exponents may be negative.
// Keys with a zero exponent are never stored, so the empty product is the
// constant 1.
class ZetaExpr {
 public:
  using FactorMap = std::map<BigInt, BigInt>;

  ZetaExpr() = default;
  // Throws std::invalid_argument for a nonpositive k. Repeated keys add up.
  ZetaExpr(std::initializer_list<std::pair<long, long>> factors);
  explicit ZetaExpr(const FactorMap& factors);

  // (t^k - 1)^exponent.
  static ZetaExpr factor(const BigInt& k, const BigInt& exponent = 1);

  const FactorMap& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  friend bool operator==(const ZetaExpr&, const ZetaExpr&) = default;

 private:
  void add(const BigInt& k, const BigInt& exponent);

  FactorMap factors_;
};

ZetaExpr zeta_mul(const ZetaExpr& a, const ZetaExpr& b);
ZetaExpr zeta_div(const ZetaExpr& a, const ZetaExpr& b);
ZetaExpr zeta_pow(const ZetaExpr& a, const BigInt& n);

// Substitutes t -> t^j, so (t^k - 1) becomes (t^{jk} - 1). Requires j >= 1.
ZetaExpr zeta_subst(const ZetaExpr& a, const BigInt& j);

// sum_k k * e_k, the Euler characteristic carried by the product.
BigInt zeta_degree(const ZetaExpr& a);

// Exponents of cyclotomic polynomials Phi_d, from t^k - 1 = prod_{d | k} Phi_d.
using CycloForm = std::map<BigInt, BigInt>;

CycloForm zeta_to_cyclotomic(const ZetaExpr& a);
bool zeta_equals(const ZetaExpr& a, const ZetaExpr& b);

// "(t^2-1)(t^3-1)/(t^6-1)"; "(t-1)^2/(t^3-1)"; "1" for the constant.
std::string zeta_render(const ZetaExpr& a);
// "Phi_1/Phi_6"; same layout as zeta_render.
std::string cyclo_render(const CycloForm& c);

// Positive divisors of n >= 1, ascending. Trial division.
std::vector<BigInt> divisors(const BigInt& n);

}  // namespace monodromy
