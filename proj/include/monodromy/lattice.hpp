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

#include <span>

#include "monodromy/rational.hpp"

namespace monodromy {

// Subgroups of Q x Q that contain Z x Z and are generated by it together
// with finitely many rational pairs. Everything is scaled by a common
// denominator D and handled as an integer lattice containing D*Z x D*Z.

// Lower-triangular basis {(first, offset), (0, second)} of an integer
// lattice in Z^2, with first, second > 0 and 0 <= offset < second.
struct TriangularBasis {
  BigInt first;
  BigInt offset;
  BigInt second;
};

// Triangular basis of the lattice spanned by (scale, 0), (0, scale) and
// scale * g for each generator g. Every scale * g must be integral.
TriangularBasis triangular_basis(std::span<const RationalPair> generators,
                                 const BigInt& scale);

// Is `candidate` in the subgroup generated by Z x Z and `generators`?
bool lattice_contains(std::span<const RationalPair> generators,
                      const RationalPair& candidate);

// Index of Z x Z in the subgroup generated by Z x Z and `generators`.
BigInt lattice_index(std::span<const RationalPair> generators);

}  // namespace monodromy
