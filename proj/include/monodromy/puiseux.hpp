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
#include <vector>

#include "monodromy/rational.hpp"

namespace monodromy {

// Support of a plane-curve Puiseux series  sum c_mu y^mu. Coefficients are
// not stored: the invariants computed here depend only on the exponents.
class CurveSeries {
 public:
  CurveSeries() = default;
  // Sorts the exponents. Throws Error on a nonpositive or repeated exponent.
  explicit CurveSeries(std::vector<Rational> exponents);

  const std::vector<Rational>& exponents() const { return exponents_; }
  bool empty() const { return exponents_.empty(); }

  friend bool operator==(const CurveSeries&, const CurveSeries&) = default;

 private:
  std::vector<Rational> exponents_;
};

// Support of a quasi-ordinary series  sum c_{lambda mu} x^lambda y^mu.
// Pairs are kept sorted by (lambda + mu, lambda), a linear extension of the
// componentwise order.
class SurfaceSeries {
 public:
  SurfaceSeries() = default;
  // Throws Error on a negative component or a repeated pair.
  explicit SurfaceSeries(std::vector<RationalPair> pairs);

  const std::vector<RationalPair>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }

  friend bool operator==(const SurfaceSeries&, const SurfaceSeries&) = default;

 private:
  std::vector<RationalPair> pairs_;
};

// Essential exponents mu_1 < ... < mu_e. Each denominator fails to divide
// the lcm of the earlier denominators.
class CurveCharacteristics {
 public:
  CurveCharacteristics() = default;
  // Throws Error(kInvalidCharacteristics) if the invariants fail.
  explicit CurveCharacteristics(std::vector<Rational> mus);

  const std::vector<Rational>& mus() const { return mus_; }
  std::size_t size() const { return mus_.size(); }
  bool empty() const { return mus_.empty(); }

  friend bool operator==(const CurveCharacteristics&, const CurveCharacteristics&) = default;

 private:
  std::vector<Rational> mus_;
};

// Characteristic pairs (lambda_1, mu_1) < ... < (lambda_e, mu_e), strictly
// increasing componentwise, each outside the subgroup generated by Z x Z
// and the earlier pairs.
class SurfaceCharacteristics {
 public:
  SurfaceCharacteristics() = default;
  // Throws Error(kInvalidCharacteristics) if the invariants fail.
  explicit SurfaceCharacteristics(std::vector<RationalPair> pairs);

  const std::vector<RationalPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  friend bool operator==(const SurfaceCharacteristics&, const SurfaceCharacteristics&) = default;

 private:
  std::vector<RationalPair> pairs_;
};

CurveCharacteristics curve_characteristics(const CurveSeries& series);

// Throws Error(kNotQuasiOrdinary) when a noncharacteristic pair is not
// generated by the characteristic pairs below it, or when the
// characteristic pairs are not totally ordered.
SurfaceCharacteristics surface_characteristics(const SurfaceSeries& series);

CurveSeries curve_prototype(const CurveCharacteristics& c);
SurfaceSeries surface_prototype(const SurfaceCharacteristics& c);

// mu_1 != 0 (or no characteristic pairs at all).
bool is_reduced(const SurfaceCharacteristics& c);

struct SurfaceReduction {
  BigInt factor;  // N, the common denominator of the leading pure-x lambdas
  SurfaceCharacteristics reduced;
};

// Drops the s leading pairs with mu = 0 and rescales the rest to
// (N * lambda, mu). Identity with N = 1 when already reduced. Throws
// Error(kAllHorizontalPairs) if every mu vanishes.
SurfaceReduction reduce_surface(const SurfaceCharacteristics& c);

// (lambda, mu) -> (mu, lambda).
SurfaceSeries swap_axes(const SurfaceSeries& s);

}  // namespace monodromy
