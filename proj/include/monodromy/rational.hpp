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

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace monodromy {

using BigInt = mpz_class;

BigInt gcd(const BigInt& a, const BigInt& b);  // gcd(n, 0) == |n|
BigInt lcm(const BigInt& a, const BigInt& b);

// Exact fraction, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT: implicit
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT
  Rational(BigInt num, BigInt den);

  // Accepts "p", "p/q" and a leading '-'. Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return sgn(num_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// An exponent pair (lambda, mu) of the monomial x^lambda y^mu.
struct RationalPair {
  Rational lambda;
  Rational mu;

  friend bool operator==(const RationalPair&, const RationalPair&) = default;
  friend auto operator<=>(const RationalPair&, const RationalPair&) = default;
};

// Componentwise partial order: both coordinates <= and not the same pair.
bool componentwise_less(const RationalPair& a, const RationalPair& b);

std::ostream& operator<<(std::ostream& os, const RationalPair& p);

// Least common multiple of the denominators; 1 for an empty list.
BigInt lcm_denominators(std::span<const Rational> values);
BigInt lcm_denominators(std::span<const RationalPair> pairs);

// Conversion that throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const BigInt& value);
bool fits_int64(const BigInt& value);

}  // namespace monodromy
