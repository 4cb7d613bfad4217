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

#include "monodromy/puiseux.hpp"

#include <algorithm>
#include <sstream>

#include "monodromy/errors.hpp"
#include "monodromy/lattice.hpp"

namespace monodromy {

namespace {

bool scan_order(const RationalPair& a, const RationalPair& b) {
  const Rational sa = a.lambda + a.mu;
  const Rational sb = b.lambda + b.mu;
  if (sa != sb) return sa < sb;
  return a.lambda < b.lambda;
}

template <typename T>
std::string describe(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

}  // namespace

CurveSeries::CurveSeries(std::vector<Rational> exponents) : exponents_(std::move(exponents)) {
  std::sort(exponents_.begin(), exponents_.end());
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i].sign() <= 0) {
      throw Error(ErrorKind::kNegativeExponent,
                  "curve exponents must be positive, got " + exponents_[i].to_string());
    }
    if (i > 0 && exponents_[i] == exponents_[i - 1]) {
      throw Error(ErrorKind::kDuplicateTerm, "repeated exponent " + exponents_[i].to_string());
    }
  }
}

SurfaceSeries::SurfaceSeries(std::vector<RationalPair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end(), scan_order);
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].lambda.sign() < 0 || pairs_[i].mu.sign() < 0) {
      throw Error(ErrorKind::kNegativeExponent,
                  "surface exponents must be nonnegative, got " + describe(pairs_[i]));
    }
    if (i > 0 && pairs_[i] == pairs_[i - 1]) {
      throw Error(ErrorKind::kDuplicateTerm, "repeated exponent pair " + describe(pairs_[i]));
    }
  }
}

CurveCharacteristics::CurveCharacteristics(std::vector<Rational> mus) : mus_(std::move(mus)) {
  BigInt running = 1;
  for (std::size_t i = 0; i < mus_.size(); ++i) {
    const Rational& mu = mus_[i];
    if (mu.sign() <= 0) {
      throw Error(ErrorKind::kInvalidCharacteristics,
                  "essential exponent " + mu.to_string() + " is not positive");
    }
    if (i > 0 && !(mus_[i - 1] < mu)) {
      throw Error(ErrorKind::kInvalidCharacteristics, "essential exponents must increase");
    }
    if (mpz_divisible_p(running.get_mpz_t(), mu.denominator().get_mpz_t())) {
      throw Error(ErrorKind::kInvalidCharacteristics,
                  "exponent " + mu.to_string() + " is not essential");
    }
    running = lcm(running, mu.denominator());
  }
}

SurfaceCharacteristics::SurfaceCharacteristics(std::vector<RationalPair> pairs)
    : pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const RationalPair& p = pairs_[i];
    if (p.lambda.sign() < 0 || p.mu.sign() < 0) {
      throw Error(ErrorKind::kInvalidCharacteristics,
                  "characteristic pair " + describe(p) + " has a negative exponent");
    }
    if (i > 0 && !componentwise_less(pairs_[i - 1], p)) {
      throw Error(ErrorKind::kInvalidCharacteristics,
                  "characteristic pairs " + describe(pairs_[i - 1]) + " and " + describe(p) +
                      " are not increasing componentwise");
    }
    std::span<const RationalPair> previous(pairs_.data(), i);
    if (lattice_contains(previous, p)) {
      throw Error(ErrorKind::kInvalidCharacteristics,
                  "pair " + describe(p) + " lies in the group generated by Z x Z and earlier pairs");
    }
  }
}

CurveCharacteristics curve_characteristics(const CurveSeries& series) {
  std::vector<Rational> essential;
  BigInt running = 1;
  for (const auto& mu : series.exponents()) {
    if (!mpz_divisible_p(running.get_mpz_t(), mu.denominator().get_mpz_t())) {
      essential.push_back(mu);
    }
    running = lcm(running, mu.denominator());
  }
  return CurveCharacteristics(std::move(essential));
}

SurfaceCharacteristics surface_characteristics(const SurfaceSeries& series) {
  std::vector<RationalPair> characteristic;
  std::vector<RationalPair> others;
  for (const auto& p : series.pairs()) {
    if (lattice_contains(characteristic, p)) {
      others.push_back(p);
    } else {
      characteristic.push_back(p);
    }
  }

  for (std::size_t i = 1; i < characteristic.size(); ++i) {
    if (!componentwise_less(characteristic[i - 1], characteristic[i])) {
      throw Error(ErrorKind::kNotQuasiOrdinary,
                  "characteristic pairs " + describe(characteristic[i - 1]) + " and " +
                      describe(characteristic[i]) + " are incomparable");
    }
  }

  for (const auto& q : others) {
    std::vector<RationalPair> below;
    for (const auto& c : characteristic) {
      if (componentwise_less(c, q)) below.push_back(c);
    }
    if (!lattice_contains(below, q)) {
      throw Error(ErrorKind::kNotQuasiOrdinary,
                  "pair " + describe(q) +
                      " is not generated by the characteristic pairs below it");
    }
  }
  return SurfaceCharacteristics(std::move(characteristic));
}

CurveSeries curve_prototype(const CurveCharacteristics& c) { return CurveSeries(c.mus()); }

SurfaceSeries surface_prototype(const SurfaceCharacteristics& c) {
  return SurfaceSeries(c.pairs());
}

bool is_reduced(const SurfaceCharacteristics& c) {
  return c.empty() || c.pairs().front().mu.sign() > 0;
}

SurfaceReduction reduce_surface(const SurfaceCharacteristics& c) {
  if (is_reduced(c)) return {BigInt(1), c};

  const auto& pairs = c.pairs();
  std::size_t s = 0;
  while (s < pairs.size() && pairs[s].mu.sign() == 0) ++s;
  if (s == pairs.size()) {
    throw Error(ErrorKind::kAllHorizontalPairs,
                "every characteristic pair has mu = 0; there is no transverse singularity");
  }

  std::vector<Rational> lambdas;
  for (std::size_t i = 0; i < s; ++i) lambdas.push_back(pairs[i].lambda);
  const BigInt n = lcm_denominators(std::span<const Rational>(lambdas));

  std::vector<RationalPair> rescaled;
  for (std::size_t i = s; i < pairs.size(); ++i) {
    rescaled.push_back({pairs[i].lambda * Rational(n), pairs[i].mu});
  }
  return {n, SurfaceCharacteristics(std::move(rescaled))};
}

SurfaceSeries swap_axes(const SurfaceSeries& s) {
  std::vector<RationalPair> swapped;
  swapped.reserve(s.pairs().size());
  for (const auto& p : s.pairs()) swapped.push_back({p.mu, p.lambda});
  return SurfaceSeries(std::move(swapped));
}

}  // namespace monodromy
