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

#include "monodromy/lattice.hpp"

#include <stdexcept>
#include <vector>

namespace monodromy {

namespace {

BigInt scaled_integer(const Rational& value, const BigInt& scale) {
  Rational scaled = value * Rational(scale);
  if (!scaled.is_integer()) {
    throw std::invalid_argument("lattice scale does not clear denominator of " +
                                value.to_string());
  }
  return scaled.numerator();
}

// Nonnegative remainder of a modulo positive m.
BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Adds the integer vector (x, y) to a triangular basis by column reduction.
void absorb(TriangularBasis& basis, const BigInt& x, const BigInt& y) {
  if (x != 0) {
    BigInt g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), basis.first.get_mpz_t(),
               x.get_mpz_t());
    // u*first + v*x = g; the combination below has zero first coordinate.
    BigInt new_offset = u * basis.offset + v * y;
    BigInt first_q = basis.first / g;
    BigInt x_q = x / g;
    BigInt residual = x_q * basis.offset - first_q * y;
    basis.first = g;
    basis.offset = new_offset;
    basis.second = gcd(basis.second, residual);
  } else {
    basis.second = gcd(basis.second, y);
  }
  basis.offset = mod_floor(basis.offset, basis.second);
}

}  // namespace

TriangularBasis triangular_basis(std::span<const RationalPair> generators,
                                 const BigInt& scale) {
  if (scale <= 0) throw std::invalid_argument("lattice scale must be positive");
  TriangularBasis basis{scale, BigInt(0), scale};
  for (const auto& g : generators) {
    absorb(basis, scaled_integer(g.lambda, scale), scaled_integer(g.mu, scale));
  }
  return basis;
}

bool lattice_contains(std::span<const RationalPair> generators,
                      const RationalPair& candidate) {
  std::vector<RationalPair> all(generators.begin(), generators.end());
  all.push_back(candidate);
  const BigInt scale = lcm_denominators(std::span<const RationalPair>(all));
  const TriangularBasis basis = triangular_basis(generators, scale);

  const BigInt x = scaled_integer(candidate.lambda, scale);
  const BigInt y = scaled_integer(candidate.mu, scale);
  if (mod_floor(x, basis.first) != 0) return false;
  const BigInt q = x / basis.first;
  return mod_floor(y - q * basis.offset, basis.second) == 0;
}

BigInt lattice_index(std::span<const RationalPair> generators) {
  const BigInt scale = lcm_denominators(generators);
  const TriangularBasis basis = triangular_basis(generators, scale);
  return (scale * scale) / (basis.first * basis.second);
}

}  // namespace monodromy
