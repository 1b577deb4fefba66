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
#include <set>

#include "fixtures.hpp"
#include "ranktest/error.hpp"
#include "ranktest/mss.hpp"
#include "ranktest/submodular.hpp"

namespace ranktest {
namespace {

using fixtures::st;

SetFamily random_family(int n, std::mt19937& rng) {
  std::bernoulli_distribution keep(0.3);
  std::vector<Mask> sets;
  for (Mask s = 1; s <= full_set(n); ++s) {
    if (keep(rng)) sets.push_back(s);
  }
  if (sets.empty()) sets.push_back(full_set(n));
  return SetFamily(n, sets);
}

TEST(SetFamily, Validation) {
  EXPECT_THROW(SetFamily(3, {0}), ValidationError);
  EXPECT_THROW(SetFamily(3, {0b1000}), ValidationError);
  EXPECT_THROW(SetFamily(3, {0b011, 0b011}), ValidationError);
  const SetFamily f(3, {0b110, 0b001});
  EXPECT_EQ(std::vector<Mask>(f.sets().begin(), f.sets().end()), (std::vector<Mask>{0b110, 0b001}));
}

TEST(Mss, SignTestSignature) {
  const SetFamily f = sign_test_family(2);
  EXPECT_EQ(std::vector<Mask>(f.sets().begin(), f.sets().end()), (std::vector<Mask>{0b0101, 0b1010}));
  const std::vector<int> ranks{2, 1, 3, 4};
  EXPECT_EQ(mss_signature(f, ranks), (std::vector<int>{0, 0, 1, 1}));
  EXPECT_EQ(mss_signature(f, Permutation::from_rank_vector(ranks)), (std::vector<int>{0, 0, 1, 1}));
}

TEST(Mss, FamilyWeight) {
  const SetFamily f(3, {0b011, 0b110});
  const SetFunction w = family_weight(f);
  EXPECT_EQ(w(0b001), 1);
  EXPECT_EQ(w(0b010), 2);
  EXPECT_EQ(w(0b101), 2);
  EXPECT_TRUE(is_submodular(w));
}

TEST(Mss, WholeGroundSet) {
  const Semigraphoid m = mss_model(SetFamily(3, {0b111}));
  EXPECT_EQ(m, Semigraphoid(3, fixtures::sts({"12|3", "13|2", "23|1"})));
}

TEST(Mss, SingletonsGiveFullModel) {
  EXPECT_EQ(mss_model(SetFamily(4, {0b0001, 0b0100})), Semigraphoid::full(4));
}

TEST(Mss, ModelMatchesInducedModel) {
  for (Mask bits = 1; bits < (Mask{1} << 7); ++bits) {
    std::vector<Mask> sets;
    for (Mask s = 1; s <= 7; ++s) {
      if (contains(bits, static_cast<int>(s))) sets.push_back(s);
    }
    const SetFamily f(3, sets);
    EXPECT_EQ(mss_model(f), induced_model(family_weight(f)));
  }
  std::mt19937 rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const SetFamily f = random_family(4 + trial % 2, rng);
    EXPECT_EQ(mss_model(f), induced_model(family_weight(f)));
  }
}

TEST(Mss, AddingSingletonsKeepsTheModel) {
  std::mt19937 rng(52);
  for (int trial = 0; trial < 40; ++trial) {
    const SetFamily f = random_family(4, rng);
    std::vector<Mask> sets(f.sets().begin(), f.sets().end());
    for (int a = 1; a <= 4; ++a) {
      if (std::find(sets.begin(), sets.end(), element_bit(a)) == sets.end()) {
        std::vector<Mask> more = sets;
        more.push_back(element_bit(a));
        EXPECT_EQ(mss_model(SetFamily(4, more)), mss_model(f));
      }
    }
  }
}

TEST(Mss, SignatureIsTheClassInvariant) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const SetFamily f = random_family(3 + trial % 2, rng);
    const RankPartition part = all_classes(mss_model(f));
    std::set<std::vector<int>> seen;
    for (const auto& block : part.blocks) {
      const std::vector<int> sig = mss_signature(f, block.front());
      for (const Permutation& p : block) EXPECT_EQ(mss_signature(f, p), sig);
      EXPECT_TRUE(seen.insert(sig).second);
    }
  }
}

TEST(Mss, DistinctModelCounts) {
  EXPECT_EQ(count_distinct_mss(1), 1u);
  EXPECT_EQ(count_distinct_mss(2), 2u);
  EXPECT_EQ(count_distinct_mss(3), 15u);
  EXPECT_EQ(count_distinct_mss(4), 1218u);
  EXPECT_THROW(count_distinct_mss(5), GuardError);
}

}  // namespace
}  // namespace ranktest
