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

#include "monodromy/bigraph.hpp"

#include <numeric>
#include <string>

#include "monodromy/errors.hpp"

namespace monodromy {

namespace {

constexpr std::int64_t kMaxEdges = 1 << 22;

std::size_t mod(std::int64_t value, std::size_t modulus) {
  const auto m = static_cast<std::int64_t>(modulus);
  return static_cast<std::size_t>(((value % m) + m) % m);
}

CellPermutation build(const BigraphShape& shape, std::int64_t root_shift,
                      std::int64_t axis_shift) {
  check_bigraph_params(shape);
  const std::size_t roots = shape.roots();
  const std::size_t axis = shape.axis();

  CellPermutation p{shape, std::vector<std::size_t>(shape.vertices()),
                    std::vector<std::size_t>(shape.edges())};
  for (std::size_t i = 0; i < roots; ++i) {
    p.vertex_perm[i] = mod(static_cast<std::int64_t>(i) + root_shift, roots);
  }
  for (std::size_t j = 0; j < axis; ++j) {
    p.vertex_perm[roots + j] = roots + mod(static_cast<std::int64_t>(j) + axis_shift, axis);
  }
  for (std::size_t i = 0; i < roots; ++i) {
    for (std::size_t j = 0; j < axis; ++j) {
      const std::size_t image_i = p.vertex_perm[i];
      const std::size_t image_j = p.vertex_perm[roots + j] - roots;
      p.edge_perm[i * axis + j] = image_i * axis + image_j;
    }
  }
  return p;
}

}  // namespace

void check_bigraph_params(const BigraphShape& s) {
  const std::string where = "(m, n, a, b) = (" + std::to_string(s.m) + ", " + std::to_string(s.n) +
                            ", " + std::to_string(s.a) + ", " + std::to_string(s.b) + ")";
  if (s.m < 1 || s.n < 1 || s.b < 1 || s.a < 0) {
    throw Error(ErrorKind::kInvalidParameters, where + ": need m, n, b >= 1 and a >= 0");
  }
  if (std::gcd(s.m, s.n) != 1) {
    throw Error(ErrorKind::kInvalidParameters, where + ": m and n are not coprime");
  }
  if (std::gcd(s.a, s.b) != 1) {
    throw Error(ErrorKind::kInvalidParameters, where + ": a and b are not coprime");
  }
  if (s.n * s.b > kMaxEdges || s.m * s.b > kMaxEdges ||
      (s.n * s.b) * (s.m * s.b) > kMaxEdges) {
    throw Error(ErrorKind::kInvalidParameters, where + ": bigraph too large to enumerate");
  }
}

CellPermutation build_horizontal_permutation(std::int64_t m, std::int64_t n, std::int64_t a,
                                             std::int64_t b) {
  return build(BigraphShape{m, n, a, b}, 1, 1);
}

CellPermutation build_vertical_permutation(std::int64_t m, std::int64_t n, std::int64_t a,
                                           std::int64_t b) {
  return build(BigraphShape{m, n, a, b}, -a, 0);
}

bool is_cellular(const CellPermutation& p) {
  const std::size_t roots = p.shape.roots();
  const std::size_t axis = p.shape.axis();
  if (p.vertex_perm.size() != roots + axis || p.edge_perm.size() != roots * axis) return false;
  for (std::size_t i = 0; i < roots; ++i) {
    if (p.vertex_perm[i] >= roots) return false;
    for (std::size_t j = 0; j < axis; ++j) {
      const std::size_t image_j = p.vertex_perm[roots + j];
      if (image_j < roots || image_j >= roots + axis) return false;
      if (p.edge_perm[i * axis + j] != p.vertex_perm[i] * axis + (image_j - roots)) return false;
    }
  }
  return true;
}

CellPermutation compose(const CellPermutation& outer, const CellPermutation& inner) {
  CellPermutation out{inner.shape, inner.vertex_perm, inner.edge_perm};
  for (auto& v : out.vertex_perm) v = outer.vertex_perm[v];
  for (auto& e : out.edge_perm) e = outer.edge_perm[e];
  return out;
}

std::vector<std::size_t> cycle_lengths(const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    for (std::size_t k = start; !seen[k]; k = perm[k]) {
      seen[k] = true;
      ++length;
    }
    lengths.push_back(length);
  }
  return lengths;
}

ZetaExpr permutation_zeta(const CellPermutation& p) {
  ZetaExpr::FactorMap factors;
  for (std::size_t len : cycle_lengths(p.vertex_perm)) factors[BigInt(static_cast<unsigned long>(len))] += 1;
  for (std::size_t len : cycle_lengths(p.edge_perm)) factors[BigInt(static_cast<unsigned long>(len))] -= 1;
  return ZetaExpr(factors);
}

}  // namespace monodromy
