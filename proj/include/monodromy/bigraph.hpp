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
#include <cstdint>
#include <vector>

#include "monodromy/zeta.hpp"

namespace monodromy {

// Cellular model of the Milnor fiber of the truncation z^{mb} = x^a y^{nb}:
// the complete bipartite graph on nb "root" vertices and mb "axis"
// vertices. Vertex i < nb is a root, vertex nb + j is axis vertex j, and
// edge (i, j) has index i * mb + j.
struct BigraphShape {
  std::int64_t m = 1;
  std::int64_t n = 1;
  std::int64_t a = 0;
  std::int64_t b = 1;

  std::size_t roots() const { return static_cast<std::size_t>(n * b); }
  std::size_t axis() const { return static_cast<std::size_t>(m * b); }
  std::size_t vertices() const { return roots() + axis(); }
  std::size_t edges() const { return roots() * axis(); }

  friend bool operator==(const BigraphShape&, const BigraphShape&) = default;
};

// A cellular automorphism of the bigraph: images of vertices and edges.
struct CellPermutation {
  BigraphShape shape;
  std::vector<std::size_t> vertex_perm;
  std::vector<std::size_t> edge_perm;

  friend bool operator==(const CellPermutation&, const CellPermutation&) = default;
};

// Throws Error(kInvalidParameters) unless m, n, b >= 1, a >= 0,
// gcd(m, n) = 1 and gcd(a, b) = 1 (so a = 0 forces b = 1).
void check_bigraph_params(const BigraphShape& shape);

// Loop of epsilon: both vertex classes rotate by one step, edges follow.
CellPermutation build_horizontal_permutation(std::int64_t m, std::int64_t n, std::int64_t a,
                                             std::int64_t b);

// Loop of x: roots shift by -a, axis vertices stay fixed.
CellPermutation build_vertical_permutation(std::int64_t m, std::int64_t n, std::int64_t a,
                                           std::int64_t b);

// Does each edge map to the edge joining the images of its endpoints?
bool is_cellular(const CellPermutation& p);

CellPermutation compose(const CellPermutation& outer, const CellPermutation& inner);

// Cycle lengths of a permutation, in order of first element.
std::vector<std::size_t> cycle_lengths(const std::vector<std::size_t>& perm);

// prod over vertex cycles (t^len - 1) / prod over edge cycles (t^len - 1).
ZetaExpr permutation_zeta(const CellPermutation& p);

}  // namespace monodromy
