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

#include "monodromy/surface.hpp"

#include <cassert>

#include "monodromy/errors.hpp"

namespace monodromy {

std::pair<BigInt, BigInt> unimodular_completion(const BigInt& m, const BigInt& n) {
  if (m < 1 || n < 1 || gcd(m, n) != 1) {
    throw Error(ErrorKind::kInvalidParameters,
                "(m, n) = (" + m.get_str() + ", " + n.get_str() + ") must be coprime positive");
  }
  // r n = -1 (mod m) with 0 <= r < m, then s = (1 + r n) / m.
  BigInt inverse;
  mpz_invert(inverse.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  if (m == 1) inverse = 0;
  BigInt r;
  BigInt negated = -inverse;
  mpz_fdiv_r(r.get_mpz_t(), negated.get_mpz_t(), m.get_mpz_t());
  BigInt s = (1 + r * n) / m;
  return {r, s};
}

SurfaceTruncationParams surface_truncation_params(const SurfaceCharacteristics& c) {
  if (c.empty()) {
    throw Error(ErrorKind::kEmptyCharacteristics, "a smooth surface has no truncation");
  }
  if (!is_reduced(c)) {
    throw Error(ErrorKind::kNotReduced, "mu_1 = 0; reduce the surface first");
  }
  const RationalPair& first = c.pairs().front();
  SurfaceTruncationParams p;
  p.m = first.mu.denominator();
  p.n = first.mu.numerator();
  const Rational scaled = Rational(p.m) * first.lambda;
  p.a = scaled.numerator();
  p.b = scaled.denominator();
  auto [r, s] = unimodular_completion(p.m, p.n);
  p.r = std::move(r);
  p.s = std::move(s);
  return p;
}

SurfaceCharacteristics surface_derive(const SurfaceCharacteristics& c) {
  const SurfaceTruncationParams p = surface_truncation_params(c);
  const Rational m(p.m);
  const Rational b(p.b);
  const Rational mb(p.m * p.b);
  const Rational r(p.r);
  const Rational& lambda1 = c.pairs().front().lambda;
  const Rational& mu1 = c.pairs().front().mu;

  std::vector<RationalPair> derived;
  derived.reserve(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) {
    const RationalPair& next = c.pairs()[i];
    Rational mu = m * (next.mu - mu1 + mb * mu1);
    Rational lambda = b * (next.lambda - lambda1 + mb * lambda1 + r * mu * lambda1);
    derived.push_back({std::move(lambda), std::move(mu)});
  }
  return SurfaceCharacteristics(std::move(derived));
}

BigInt surface_truncation_euler(const SurfaceTruncationParams& p) {
  const BigInt mb = p.m * p.b;
  const BigInt nb = p.n * p.b;
  return mb + nb - mb * nb;
}

ZetaExpr surface_truncation_horizontal(const SurfaceTruncationParams& p) {
  const ZetaExpr numerator = zeta_mul(ZetaExpr::factor(p.m * p.b), ZetaExpr::factor(p.n * p.b));
  return zeta_div(numerator, ZetaExpr::factor(p.m * p.n * p.b, p.b));
}

ZetaExpr surface_truncation_vertical(const SurfaceTruncationParams& p) {
  const BigInt g = gcd(p.n, p.a);
  const BigInt mb = p.m * p.b;
  return zeta_div(ZetaExpr::factor(1, mb), ZetaExpr::factor(p.n * p.b / g, g * (mb - 1)));
}

SurfaceInvariants surface_invariants(const SurfaceCharacteristics& c) {
  if (c.empty()) return {BigInt(1), BigInt(1), ZetaExpr::factor(1), ZetaExpr::factor(1)};

  const SurfaceTruncationParams p = surface_truncation_params(c);
  const SurfaceInvariants derived = surface_invariants(surface_derive(c));
  const BigInt& dp = derived.degree;
  const BigInt& b = p.b;

  SurfaceInvariants out;
  out.degree = p.m * b * dp;
  out.euler = dp * (surface_truncation_euler(p) - b) + b * derived.euler;
  out.horizontal = zeta_div(
      zeta_mul(zeta_subst(surface_truncation_horizontal(p), dp), zeta_pow(derived.horizontal, b)),
      ZetaExpr::factor(dp, b));
  out.vertical = zeta_div(
      zeta_mul(zeta_pow(surface_truncation_vertical(p), dp), zeta_subst(derived.vertical, b)),
      ZetaExpr::factor(b, dp));
  assert(zeta_degree(out.horizontal) == out.euler);
  assert(zeta_degree(out.vertical) == out.euler);
  return out;
}

std::vector<SurfaceLevel> surface_trace(const SurfaceCharacteristics& c) {
  std::vector<SurfaceLevel> levels;
  SurfaceCharacteristics current = c;
  while (!current.empty()) {
    SurfaceCharacteristics next = surface_derive(current);
    levels.push_back({current, surface_truncation_params(current)});
    current = std::move(next);
  }
  return levels;
}

}  // namespace monodromy
