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

#include <numeric>

#include <gtest/gtest.h>

#include "monodromy/bigraph.hpp"
#include "monodromy/errors.hpp"
#include "monodromy/surface.hpp"
#include "support/oracles.hpp"

namespace monodromy {
namespace {

SurfaceTruncationParams params(long m, long n, long a, long b) {
  const auto [r, s] = unimodular_completion(m, n);
  return {BigInt(m), BigInt(n), BigInt(a), BigInt(b), r, s};
}

TEST(BigraphTest, Shape) {
  const auto h = build_horizontal_permutation(2, 3, 1, 1);
  EXPECT_EQ(h.shape.roots(), 3u);
  EXPECT_EQ(h.shape.axis(), 2u);
  EXPECT_EQ(h.vertex_perm.size(), 5u);
  EXPECT_EQ(h.edge_perm.size(), 6u);
  EXPECT_TRUE(is_cellular(h));
}

TEST(BigraphTest, CycleLengths) {
  EXPECT_EQ(cycle_lengths({1, 2, 0, 4, 3}), (std::vector<std::size_t>{3, 2}));
  EXPECT_EQ(cycle_lengths({0, 1}), (std::vector<std::size_t>{1, 1}));
  EXPECT_TRUE(cycle_lengths({}).empty());

  const auto h = build_horizontal_permutation(2, 3, 1, 1);
  EXPECT_EQ(cycle_lengths(h.edge_perm), (std::vector<std::size_t>{6}));
  const auto v = build_vertical_permutation(2, 3, 1, 1);
  EXPECT_EQ(cycle_lengths(v.vertex_perm), (std::vector<std::size_t>{3, 1, 1}));
  EXPECT_EQ(cycle_lengths(v.edge_perm), (std::vector<std::size_t>{3, 3}));
}

TEST(BigraphTest, CuspZetas) {
  EXPECT_EQ(permutation_zeta(build_horizontal_permutation(2, 3, 1, 1)),
            (ZetaExpr{{2, 1}, {3, 1}, {6, -1}}));
  EXPECT_EQ(permutation_zeta(build_vertical_permutation(2, 3, 1, 1)),
            (ZetaExpr{{1, 2}, {3, -1}}));
  // a = 0: x does not enter, the vertical loop is trivial.
  EXPECT_EQ(permutation_zeta(build_vertical_permutation(2, 3, 0, 1)), (ZetaExpr{{1, -1}}));
}

TEST(BigraphTest, RejectsBadParameters) {
  EXPECT_THROW(build_horizontal_permutation(2, 4, 1, 1), Error);
  EXPECT_THROW(build_horizontal_permutation(2, 3, 2, 2), Error);
  EXPECT_THROW(build_horizontal_permutation(0, 3, 1, 1), Error);
  EXPECT_THROW(build_vertical_permutation(2, 3, -1, 1), Error);
  EXPECT_THROW(build_horizontal_permutation(2, 3, 0, 2), Error);
  EXPECT_THROW(build_horizontal_permutation(4096, 4097, 1, 1), Error);
  try {
    check_bigraph_params(BigraphShape{3, 6, 1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidParameters);
  }
}

TEST(BigraphTest, NonCellularDetected) {
  auto h = build_horizontal_permutation(2, 3, 1, 1);
  std::swap(h.edge_perm[0], h.edge_perm[1]);
  EXPECT_FALSE(is_cellular(h));
}

TEST(BigraphTest, GridAgreesWithCountingAndClosedForms) {
  int checked = 0;
  for (long m = 1; m <= 8; ++m) {
    for (long n = 1; n <= 8; ++n) {
      if (std::gcd(m, n) != 1) continue;
      for (long a = 0; a <= 8; ++a) {
        for (long b = 1; b <= 4; ++b) {
          if (std::gcd(a, b) != 1) continue;
          const auto h = build_horizontal_permutation(m, n, a, b);
          const auto v = build_vertical_permutation(m, n, a, b);
          ASSERT_TRUE(is_cellular(h));
          ASSERT_TRUE(is_cellular(v));
          EXPECT_EQ(compose(h, v), compose(v, h));

          const ZetaExpr zh = permutation_zeta(h);
          const ZetaExpr zv = permutation_zeta(v);
          EXPECT_EQ(zh, testing::bigraph_horizontal_oracle(m, n, b));
          EXPECT_EQ(zv, testing::bigraph_vertical_oracle(m, n, a, b));

          const std::int64_t cells =
              static_cast<std::int64_t>(h.shape.vertices()) - static_cast<std::int64_t>(h.shape.edges());
          EXPECT_EQ(zeta_degree(zh), cells);
          EXPECT_EQ(zeta_degree(zv), cells);

          const auto p = params(m, n, a, b);
          EXPECT_EQ(surface_truncation_euler(p), cells);
          EXPECT_TRUE(zeta_equals(zh, surface_truncation_horizontal(p)))
              << m << "," << n << "," << a << "," << b;
          EXPECT_TRUE(zeta_equals(zv, surface_truncation_vertical(p)))
              << m << "," << n << "," << a << "," << b;
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 500);
}

}  // namespace
}  // namespace monodromy
