// Copyright 2026 The Ranktest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <stdexcept>

#include "oracle.hpp"

namespace ranktest::oracle {
namespace {

std::string joined(const std::vector<int>& d) {
  std::string out;
  for (int x : d) out += std::to_string(x);
  return out;
}

TEST(Oracle, BruteClasses) {
  const RankPartition one = brute_classes(4, [](const std::vector<int>&) { return std::string(); });
  ASSERT_EQ(one.blocks.size(), 1u);
  EXPECT_EQ(one.blocks[0].size(), 24u);
  const RankPartition all = brute_classes(4, joined);
  EXPECT_EQ(all.blocks.size(), 24u);
  EXPECT_TRUE(all.is_valid());
  EXPECT_EQ(all.blocks.front().front(), Permutation::identity(4));
}

TEST(Oracle, UpdownBlocks) {
  const RankPartition part = brute_classes(4, [](const std::vector<int>& d) {
    std::vector<int> rank(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) rank[d[k] - 1] = static_cast<int>(d.size() - k);
    std::string s;
    for (std::size_t i = 0; i + 1 < rank.size(); ++i) s += rank[i] < rank[i + 1] ? '+' : '-';
    return s;
  });
  EXPECT_EQ(part.blocks.size(), 8u);
}

TEST(Oracle, EdgeClasses) {
  EXPECT_EQ(brute_edge_classes(4, [](int, int, Mask) { return true; }).blocks.size(), 1u);
  EXPECT_EQ(brute_edge_classes(4, [](int, int, Mask) { return false; }).blocks.size(), 24u);
}

TEST(Oracle, LinearExtensions) {
  EXPECT_EQ(brute_linear_extensions(Poset(4), false).count, 24u);
  EXPECT_EQ(brute_linear_extensions(Poset::total_order(Permutation::parse("2|4|1|3")), true).descents,
            (std::vector<std::vector<int>>{{2, 4, 1, 3}}));
  EXPECT_THROW(brute_linear_extensions(Poset(6), false, 100), std::length_error);
}

TEST(Oracle, Components) {
  const std::vector<std::pair<int, int>> edges{{1, 2}, {3, 4}, {2, 5}};
  EXPECT_EQ(union_find_components(5, edges, 0b11111), (std::vector<Mask>{0b10011, 0b01100}));
  EXPECT_EQ(union_find_components(5, edges, 0b10101), (std::vector<Mask>{0b00001, 0b00100, 0b10000}));
}

TEST(Oracle, PolytopeVertices) {
  // w(S) = min(|S|, 1): the standard simplex.
  std::vector<Rational> w(8, 1);
  w[0] = 0;
  const auto v = polytope_vertices(3, w);
  EXPECT_EQ(v, (std::vector<std::vector<Rational>>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

TEST(Oracle, FourierMotzkin) {
  EXPECT_TRUE(fourier_motzkin_feasible(2, {}, {{1, -1}}));
  EXPECT_FALSE(fourier_motzkin_feasible(2, {}, {{1, -1}, {-1, 1}}));
  EXPECT_FALSE(fourier_motzkin_feasible(2, {{1, -1}}, {{1, -1}}));
  EXPECT_TRUE(fourier_motzkin_feasible(3, {{1, 1, -1}}, {{1, 0, 0}, {0, 1, 0}}));
}

}  // namespace
}  // namespace ranktest::oracle
