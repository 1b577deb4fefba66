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

#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "ranktest/error.hpp"
#include "ranktest/graphical.hpp"
#include "ranktest/lattice.hpp"

namespace ranktest {
namespace {

// Oracle partition of the tubing test: an edge i, j | K survives iff i and
// j fall in different components of G restricted to K u {i, j}.
RankPartition oracle_tubing_classes(const Graph& g) {
  const auto edges = g.edges();
  return oracle::brute_edge_classes(g.size(), [&](int i, int j, Mask k) {
    for (Mask c : oracle::union_find_components(g.size(), edges, k | element_bit(i) | element_bit(j))) {
      if (contains(c, i)) return !contains(c, j);
    }
    return true;
  });
}

BigInt binomial(int n, int k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

TEST(Graph, Construction) {
  const std::vector<std::pair<int, int>> loop{{2, 2}};
  EXPECT_THROW(Graph(3, loop), ValidationError);
  const std::vector<std::pair<int, int>> outside{{1, 4}};
  EXPECT_THROW(Graph(3, outside), ValidationError);
  const std::vector<std::pair<int, int>> twice{{2, 1}, {1, 2}};
  EXPECT_EQ(Graph(3, twice).edges(), (std::vector<std::pair<int, int>>{{1, 2}}));
  EXPECT_EQ(Graph::cycle(2).edges().size(), 1u);
  EXPECT_EQ(Graph::cycle(5).edges().size(), 5u);
  EXPECT_EQ(Graph::complete(5).edges().size(), 10u);
}

TEST(Graph, Reachability) {
  const Graph g = Graph::path(5);
  EXPECT_EQ(g.reachable(2, 0b11011), 0b00011u);
  EXPECT_TRUE(g.is_connected_within(0b00111));
  EXPECT_FALSE(g.is_connected_within(0b00101));
  EXPECT_FALSE(g.is_connected_within(0));
  EXPECT_EQ(g.components(0b11011), (std::vector<Mask>{0b00011, 0b11000}));
}

TEST(Graph, ConnectedSubsets) {
  EXPECT_EQ(connected_subsets(Graph::path(4)).sets().size(), 10u);
  EXPECT_EQ(connected_subsets(Graph::complete(4)).sets().size(), 15u);
  EXPECT_EQ(connected_subsets(Graph::edgeless(4)).sets().size(), 4u);
}

TEST(Graphical, ModelsAreDual) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = fixtures::random_graph(3 + trial % 3, rng);
    EXPECT_EQ(tubing_model(g), graphical_model(g).dual());
  }
}

TEST(Graphical, PathModels) {
  const Graph g = Graph::path(3);
  EXPECT_EQ(graphical_model(g), Semigraphoid(3, fixtures::sts({"13|2"})));
  EXPECT_EQ(tubing_model(g), Semigraphoid(3, fixtures::sts({"13|"})));
  EXPECT_EQ(tubing_model(Graph::complete(4)), Semigraphoid::empty(4));
  EXPECT_EQ(tubing_model(Graph::edgeless(4)), Semigraphoid::full(4));
}

TEST(Tubings, Compatibility) {
  const Graph g = Graph::path(4);
  EXPECT_TRUE(are_compatible(0b0001, 0b0011, g));
  EXPECT_TRUE(are_compatible(0b0001, 0b1000, g));
  EXPECT_FALSE(are_compatible(0b0001, 0b0010, g));
  EXPECT_FALSE(are_compatible(0b0011, 0b0110, g));
  const std::vector<Mask> good{0b0001, 0b0111, 0b0100};
  EXPECT_TRUE(is_tubing(good, g));
  const std::vector<Mask> disconnected{0b0101};
  EXPECT_FALSE(is_tubing(disconnected, g));
  const std::vector<Mask> whole{0b1111};
  EXPECT_FALSE(is_tubing(whole, g));
  const std::vector<Mask> component{0b0011};
  EXPECT_FALSE(is_tubing(component, Graph(4, std::vector<std::pair<int, int>>{{1, 2}, {3, 4}})));
  EXPECT_TRUE(is_tubing(std::vector<Mask>{0b0001}, Graph(4, std::vector<std::pair<int, int>>{{1, 2}, {3, 4}})));
}

TEST(Tubings, SignatureExamples) {
  const Graph g = Graph::path(3);
  const TubingSignature a = tubing_signature(g, Permutation::parse("1|2|3"));
  EXPECT_EQ(a.tubes, (std::vector<Mask>{0b001, 0b011}));
  EXPECT_EQ(a.heights, (std::vector<int>{2, 1, 0}));
  const TubingSignature b = tubing_signature(g, Permutation::parse("1|3|2"));
  EXPECT_EQ(b.tubes, (std::vector<Mask>{0b001, 0b100}));
  EXPECT_EQ(b.heights, (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(tubing_signature(g, Permutation::parse("3|1|2")), b);
}

TEST(Tubings, SignaturesAreMaximalTubings) {
  std::mt19937 rng(62);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 4;
    const Graph g = fixtures::random_graph(n, rng);
    const TubingSignature sig = tubing_signature(g, fixtures::random_permutation(n, rng));
    EXPECT_TRUE(is_tubing(sig.tubes, g));
    EXPECT_EQ(sig.tubes.size() + g.components(full_set(n)).size(), static_cast<std::size_t>(n));
  }
}

TEST(GTree, Examples) {
  const Graph g = Graph::path(3);
  const GTree chain = g_tree(g, Permutation::parse("1|2|3"));
  EXPECT_EQ(chain.to_string(), "3(2(1))");
  EXPECT_EQ(chain.class_size(), 1);
  const GTree fork = g_tree(g, Permutation::parse("1|3|2"));
  EXPECT_EQ(fork.to_string(), "2(1,3)");
  EXPECT_EQ(fork.class_size(), 2);
  EXPECT_EQ(fork.roots(), (std::vector<int>{2}));
  EXPECT_EQ(fork.children(2), (std::vector<int>{1, 3}));
  const GTree forest = g_tree(Graph::edgeless(3), Permutation::parse("2|1|3"));
  EXPECT_EQ(forest.to_string(), "1,2,3");
  EXPECT_EQ(forest.class_size(), 6);
}

TEST(GTree, MatchesBruteForceClasses) {
  std::mt19937 rng(63);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    const Graph g = fixtures::random_graph(n, rng);
    const RankPartition part = oracle_tubing_classes(g);
    std::set<std::string> trees;
    std::set<std::vector<int>> signatures;
    for (const auto& block : part.blocks) {
      const GTree t = g_tree(g, block.front());
      EXPECT_TRUE(trees.insert(t.to_string()).second);
      const auto extensions = oracle::brute_linear_extensions(t.as_poset(), true);
      std::set<std::vector<int>> want;
      const TubingSignature sig = tubing_signature(g, block.front());
      EXPECT_TRUE(signatures.insert(sig.heights).second);
      for (const Permutation& p : block) {
        EXPECT_EQ(tubing_signature(g, p), sig);
        EXPECT_EQ(g_tree(g, p), t);
        EXPECT_EQ(count_class(g, p), block.size());
        want.emplace(p.descent().begin(), p.descent().end());
      }
      EXPECT_EQ(std::set<std::vector<int>>(extensions.descents.begin(), extensions.descents.end()),
                want);
      EXPECT_EQ(t.class_size(), block.size());
      EXPECT_EQ(g_tree(g, t.representative()), t);
    }
    EXPECT_EQ(enumerate_gtrees(g).size(), part.blocks.size());
  }
}

TEST(GTree, CountClassMatchesLatticeOnLargerGraphs) {
  std::mt19937 rng(64);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 6 + trial % 4;
    const Graph g = fixtures::random_graph(n, rng);
    const Permutation p = fixtures::random_permutation(n, rng);
    EXPECT_EQ(count_class(g, p), count_chains(build_lattice(p, tubing_model(g))));
    EXPECT_EQ(count_class(g, p), g_tree(g, p).class_size());
  }
}

TEST(GTree, EnumerationCounts) {
  for (int n = 1; n <= 10; ++n) {
    const std::vector<GTree> trees = enumerate_gtrees(Graph::path(n));
    EXPECT_EQ(trees.size(), binomial(2 * n, n) / (n + 1)) << n;
    BigInt total = 0;
    for (const GTree& t : trees) total += t.class_size();
    EXPECT_EQ(total, factorial(n));
  }
  for (int n = 3; n <= 7; ++n) {
    EXPECT_EQ(enumerate_gtrees(Graph::cycle(n)).size(), binomial(2 * n - 2, n - 1)) << n;
  }
  EXPECT_EQ(enumerate_gtrees(Graph::complete(5)).size(), 120u);
  EXPECT_EQ(enumerate_gtrees(Graph::edgeless(5)).size(), 1u);
  EXPECT_THROW(enumerate_gtrees(Graph::complete(9), 1000), GuardError);
}

}  // namespace
}  // namespace ranktest
