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

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "ranktest/error.hpp"
#include "ranktest/lattice.hpp"
#include "ranktest/poset.hpp"

namespace ranktest {
namespace {

std::vector<Permutation> perms(std::initializer_list<const char*> texts) {
  std::vector<Permutation> out;
  for (const char* t : texts) out.push_back(Permutation::parse(t));
  std::sort(out.begin(), out.end());
  return out;
}

// The four-block pre-convex but non-convex test on S_3.
RankPartition nonconvex_partition() {
  return {3, {perms({"1|2|3"}), perms({"2|1|3"}), perms({"2|3|1"}),
              perms({"1|3|2", "3|1|2", "3|2|1"})}};
}

Poset random_poset(int n, std::mt19937& rng) {
  // Orient random pairs along a hidden total order so no cycle appears.
  const Permutation hidden = fixtures::random_permutation(n, rng);
  const std::vector<int> rho = hidden.rank_vector();
  std::bernoulli_distribution coin(0.3);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (rho[a - 1] < rho[b - 1] && coin(rng)) pairs.emplace_back(a, b);
    }
  }
  return Poset(n, pairs);
}

TEST(Poset, ClosureAndValidation) {
  const std::vector<std::pair<int, int>> chain{{1, 2}, {2, 3}};
  const Poset p(3, chain);
  EXPECT_TRUE(p.less(1, 3));
  EXPECT_EQ(p.relation_size(), 3u);
  EXPECT_EQ(p.cover_relations(), chain);
  EXPECT_EQ(Poset(3, p.relation()), p);
  const std::vector<std::pair<int, int>> cycle{{1, 2}, {2, 1}};
  EXPECT_THROW(Poset(2, cycle), ValidationError);
  const std::vector<std::pair<int, int>> loop{{1, 1}};
  EXPECT_THROW(Poset(2, loop), ValidationError);
  const std::vector<std::pair<int, int>> outside{{1, 4}};
  EXPECT_THROW(Poset(3, outside), ValidationError);
}

TEST(Poset, IntersectOrders) {
  const auto block = perms({"1|3|2", "3|1|2", "3|2|1"});
  const std::vector<std::pair<int, int>> two_below_three{{2, 3}};
  EXPECT_EQ(intersect_orders(block), Poset(3, two_below_three));
  const Permutation p = Permutation::parse("2|4|1|3");
  EXPECT_EQ(intersect_orders(std::vector<Permutation>{p}), Poset::total_order(p));
  EXPECT_EQ(intersect_orders(perms({"1|2|3", "3|2|1"})).relation_size(), 0u);
  EXPECT_THROW(intersect_orders(std::vector<Permutation>{}), ValidationError);
}

TEST(Poset, LinearExtensions) {
  const std::vector<std::pair<int, int>> two_below_three{{2, 3}};
  EXPECT_EQ(linear_extensions(Poset(3, two_below_three)), perms({"1|3|2", "3|1|2", "3|2|1"}));
  EXPECT_EQ(linear_extensions(Poset(5)).size(), 120u);
  EXPECT_EQ(linear_extensions(Poset::total_order(Permutation::parse("3|1|4|2"))).size(), 1u);
  EXPECT_THROW(linear_extensions(Poset(13)), GuardError);
  EXPECT_THROW(linear_extensions(Poset(5), 10), GuardError);
}

TEST(Poset, ExtensionCountsAgreeWithOracleAndLattice) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 6;
    const Poset p = random_poset(n, rng);
    const auto ext = linear_extensions(p);
    const auto brute = oracle::brute_linear_extensions(p, true);
    EXPECT_EQ(ext.size(), brute.count);
    EXPECT_EQ(count_linear_extensions(p), ext.size());
    for (const Permutation& q : ext) EXPECT_TRUE(p.is_linear_extension(q));
  }
}

TEST(Poset, BooleanPosetOfRankFour) {
  const Poset b4 = Poset::boolean_lattice(4);
  EXPECT_EQ(b4.size(), 16);
  EXPECT_EQ(oracle::brute_linear_extensions(b4, false).count, 1680384u);
}

TEST(Poset, PreconvexityAxiom) {
  EXPECT_TRUE(is_preconvex(nonconvex_partition()));
  RankPartition singletons{3, {}};
  for (const Permutation& p : all_permutations(3)) singletons.blocks.push_back({p});
  EXPECT_TRUE(is_preconvex(singletons));
  RankPartition bad{3, {perms({"1|2|3", "3|2|1"})}};
  for (const char* t : {"1|3|2", "2|1|3", "2|3|1", "3|1|2"}) {
    bad.blocks.push_back(perms({t}));
  }
  ASSERT_TRUE(bad.is_valid());
  EXPECT_FALSE(is_preconvex(bad));
}

TEST(Poset, PreconvexCounts) {
  EXPECT_EQ(count_preconvex(1).preconvex, 1u);
  EXPECT_EQ(count_preconvex(2).preconvex, 2u);
  EXPECT_EQ(count_preconvex(2).total, 2u);
  const PreconvexCount three = count_preconvex(3);
  EXPECT_EQ(three.preconvex, 40u);
  EXPECT_EQ(three.total, 203u);
  EXPECT_THROW(count_preconvex(4), GuardError);
}

TEST(Poset, ClassPosetFlags) {
  for (const auto& block : nonconvex_partition().blocks) {
    const ClassPoset cp = class_poset(block);
    EXPECT_TRUE(cp.is_exact);
    EXPECT_EQ(linear_extensions(cp.poset), block);
  }
  EXPECT_TRUE(class_poset(perms({"2|3|1"})).is_exact);
  EXPECT_FALSE(class_poset(perms({"1|2|3", "3|2|1"})).is_exact);
}

TEST(Poset, PreconvexBlocksHaveDisjointCoveringExtensions) {
  const RankPartition part = nonconvex_partition();
  std::vector<int> owners(6, 0);
  for (const auto& block : part.blocks) {
    for (const Permutation& q : linear_extensions(class_poset(block).poset)) ++owners[q.index()];
  }
  EXPECT_TRUE(std::all_of(owners.begin(), owners.end(), [](int c) { return c == 1; }));
}

}  // namespace
}  // namespace ranktest
