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

// Parameters of the truncation x^{a/(mb)} y^{n/m} of a reduced
// quasi-ordinary surface, together with the bottom row (r, s) of the
// unimodular matrix [m n; r s].
struct SurfaceTruncationParams {
  BigInt m;
  BigInt n;
  BigInt a;
  BigInt b;
  BigInt r;
  BigInt s;

  friend bool operator==(const SurfaceTruncationParams&,
                         const SurfaceTruncationParams&) = default;
};

struct SurfaceInvariants {
  BigInt degree;        // d
  BigInt euler;         // chi of the transverse Milnor fiber
  ZetaExpr horizontal;  // H(t)
  ZetaExpr vertical;    // V(t), for loops of x around 0
};

// Smallest nonnegative (r, s) with m*s - r*n = 1. For m = 1 this is (0, 1).
std::pair<BigInt, BigInt> unimodular_completion(const BigInt& m, const BigInt& n);

// Throws Error(kEmptyCharacteristics) or Error(kNotReduced).
SurfaceTruncationParams surface_truncation_params(const SurfaceCharacteristics& c);

// Characteristic pairs of the derived surface:
//   mu'_i     = m (mu_{i+1} - mu_1 + mb mu_1)
//   lambda'_i = b (lambda_{i+1} - lambda_1 + mb lambda_1 + r mu'_i lambda_1)
SurfaceCharacteristics surface_derive(const SurfaceCharacteristics& c);

// Closed forms for the truncation z^{mb} = x^a y^{nb}; only m, n, a, b are
// read. The vertical one uses g = gcd(n, a), with gcd(n, 0) = n.
BigInt surface_truncation_euler(const SurfaceTruncationParams& p);   // mb + nb - mnb^2
ZetaExpr surface_truncation_horizontal(const SurfaceTruncationParams& p);
ZetaExpr surface_truncation_vertical(const SurfaceTruncationParams& p);

// Requires reduced input; non-reduced data goes through reduce_surface
// first. Throws Error(kNotReduced) otherwise.
SurfaceInvariants surface_invariants(const SurfaceCharacteristics& c);

struct SurfaceLevel {
  SurfaceCharacteristics characteristics;
  SurfaceTruncationParams params;
};
std::vector<SurfaceLevel> surface_trace(const SurfaceCharacteristics& c);

}  // namespace monodromy
