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

#include "monodromy/zeta.hpp"

#include <algorithm>
#include <stdexcept>
#include <string_view>

namespace monodromy {

ZetaExpr::ZetaExpr(std::initializer_list<std::pair<long, long>> factors) {
  for (const auto& [k, e] : factors) add(BigInt(k), BigInt(e));
}

ZetaExpr::ZetaExpr(const FactorMap& factors) {
  for (const auto& [k, e] : factors) add(k, e);
}

ZetaExpr ZetaExpr::factor(const BigInt& k, const BigInt& exponent) {
  ZetaExpr z;
  z.add(k, exponent);
  return z;
}

void ZetaExpr::add(const BigInt& k, const BigInt& exponent) {
  if (k <= 0) throw std::invalid_argument("zeta factor index must be positive");
  if (exponent == 0) return;
  auto [it, inserted] = factors_.try_emplace(k, exponent);
  if (!inserted) {
    it->second += exponent;
    if (it->second == 0) factors_.erase(it);
  }
}

ZetaExpr zeta_mul(const ZetaExpr& a, const ZetaExpr& b) {
  ZetaExpr::FactorMap merged = a.factors();
  for (const auto& [k, e] : b.factors()) merged[k] += e;
  return ZetaExpr(merged);
}

ZetaExpr zeta_div(const ZetaExpr& a, const ZetaExpr& b) {
  ZetaExpr::FactorMap merged = a.factors();
  for (const auto& [k, e] : b.factors()) merged[k] -= e;
  return ZetaExpr(merged);
}

ZetaExpr zeta_pow(const ZetaExpr& a, const BigInt& n) {
  ZetaExpr::FactorMap scaled;
  for (const auto& [k, e] : a.factors()) scaled[k] = e * n;
  return ZetaExpr(scaled);
}

ZetaExpr zeta_subst(const ZetaExpr& a, const BigInt& j) {
  if (j < 1) throw std::invalid_argument("zeta substitution power must be >= 1");
  ZetaExpr::FactorMap scaled;
  for (const auto& [k, e] : a.factors()) scaled[k * j] = e;
  return ZetaExpr(scaled);
}

BigInt zeta_degree(const ZetaExpr& a) {
  BigInt degree = 0;
  for (const auto& [k, e] : a.factors()) degree += k * e;
  return degree;
}

std::vector<BigInt> divisors(const BigInt& n) {
  if (n < 1) throw std::invalid_argument("divisors of a nonpositive integer");
  // Prime factorization, then all products.
  std::vector<std::pair<BigInt, unsigned>> primes;
  BigInt rest = n;
  for (BigInt p = 2; p * p <= rest; ++p) {
    unsigned count = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
      rest /= p;
      ++count;
    }
    if (count > 0) primes.emplace_back(p, count);
  }
  if (rest > 1) primes.emplace_back(rest, 1);

  std::vector<BigInt> result{BigInt(1)};
  for (const auto& [p, count] : primes) {
    const std::size_t base = result.size();
    BigInt power = 1;
    for (unsigned i = 0; i < count; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j) result.push_back(result[j] * power);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

CycloForm zeta_to_cyclotomic(const ZetaExpr& a) {
  CycloForm form;
  for (const auto& [k, e] : a.factors()) {
    for (const auto& d : divisors(k)) {
      auto& slot = form[d];
      slot += e;
      if (slot == 0) form.erase(d);
    }
  }
  return form;
}

bool zeta_equals(const ZetaExpr& a, const ZetaExpr& b) {
  if (a == b) return true;
  return zeta_to_cyclotomic(a) == zeta_to_cyclotomic(b);
}

namespace {

template <typename Term>
std::string render_product(const std::map<BigInt, BigInt>& factors, Term term,
                           std::string_view separator) {
  std::string numerator;
  std::string denominator;
  for (const auto& [k, e] : factors) {
    std::string& side = e > 0 ? numerator : denominator;
    if (!side.empty()) side += separator;
    side += term(k);
    BigInt magnitude = abs(e);
    if (magnitude > 1) side += "^" + magnitude.get_str();
  }
  if (numerator.empty() && denominator.empty()) return "1";
  if (numerator.empty()) numerator = "1";
  if (denominator.empty()) return numerator;
  return numerator + "/" + denominator;
}

}  // namespace

std::string zeta_render(const ZetaExpr& a) {
  return render_product(
      a.factors(),
      [](const BigInt& k) { return k == 1 ? std::string("(t-1)") : "(t^" + k.get_str() + "-1)"; },
      "");
}

std::string cyclo_render(const CycloForm& c) {
  return render_product(c, [](const BigInt& d) { return "Phi_" + d.get_str(); }, " ");
}

}  // namespace monodromy
