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

// Graphical tests: undirected graphical models, their dual tubing models,
// topographic-map signatures and G-trees.

#ifndef RANKTEST_GRAPHICAL_HPP_
#define RANKTEST_GRAPHICAL_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ranktest/mss.hpp"
#include "ranktest/numeric.hpp"
#include "ranktest/permutation.hpp"
#include "ranktest/poset.hpp"
#include "ranktest/semigraphoid.hpp"
#include "ranktest/subset.hpp"

namespace ranktest {

class Graph {
 public:
  /// Throws ValidationError on loops or endpoints outside [n]. Parallel
  /// edges collapse.
  Graph(int n, std::span<const std::pair<int, int>> edges);

  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete(int n);
  static Graph edgeless(int n);

  int size() const { return n_; }
  Mask neighbors(int v) const { return adjacency_[v - 1]; }
  bool adjacent(int a, int b) const { return contains(adjacency_[a - 1], b); }

  /// Sorted (a, b) with a < b.
  std::vector<std::pair<int, int>> edges() const;

  /// Vertices reachable from `start` using only vertices in `allowed`
  /// (`start` must be in `allowed`).
  Mask reachable(int start, Mask allowed) const;

  /// G restricted to `vertices` is connected (false for the empty set).
  bool is_connected_within(Mask vertices) const;

  /// Connected components of G restricted to `vertices`, ordered by their
  /// smallest element.
  std::vector<Mask> components(Mask vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::vector<Mask> adjacency_;
};

/// Every nonempty K with G|K connected.
SetFamily connected_subsets(const Graph& graph);

/// i _||_ j | C whenever G restricted to [n] \ C has no i-j path.
Semigraphoid graphical_model(const Graph& graph);

/// i _||_ j | C whenever G restricted to C u {i, j} has no i-j path; the dual
/// of graphical_model.
Semigraphoid tubing_model(const Graph& graph);

/// Nested, or disjoint with no edge between them.
bool are_compatible(Mask a, Mask b, const Graph& graph);

/// Distinct connected tubes, none a whole component of G, pairwise compatible.
bool is_tubing(std::span<const Mask> tubes, const Graph& graph);

/// Topographic map of a permutation: the encircled sets U_k, the component
/// of d_k in G restricted to {d_1..d_k} for k < n, minus those equal to a
/// whole component of G (sorted by cardinality_lex_less), and the heights
/// h_i = #{tubes containing i}. A graph with c components has n - c tubes.
struct TubingSignature {
  std::vector<Mask> tubes;
  std::vector<int> heights;

  friend bool operator==(const TubingSignature&, const TubingSignature&) = default;
};

TubingSignature tubing_signature(const Graph& graph, const Permutation& p);

/// Rooted forest on [n]; roots carry the smallest data values.
struct GTree {
  int n = 0;
  std::vector<int> parent;  // parent[v - 1], 0 for a root

  std::vector<int> roots() const;
  std::vector<int> children(int v) const;

  /// (ancestor, descendant) pairs: every descendant lies above its ancestors.
  Poset as_poset() const;

  /// Number of linear extensions by the recursive multinomial formula; a
  /// forest is treated as the children of a virtual root.
  BigInt class_size() const;

  /// A permutation whose G-tree is this tree.
  Permutation representative() const;

  /// "3(2(1))" style nested rendering, roots in increasing order.
  std::string to_string() const;

  friend bool operator==(const GTree&, const GTree&) = default;
};

GTree g_tree(const Graph& graph, const Permutation& p);

/// Size of the tubing-test class of `p`, by the largest-enclosing-set sweep.
/// Disconnected graphs get a final multinomial over component sizes.
BigInt count_class(const Graph& graph, const Permutation& p);

/// One G-tree per class of the tubing test: choose a root in every
/// connected component, delete it, recurse. Roots are tried in increasing
/// order. Throws GuardError once more than `max_trees` trees are produced.
std::vector<GTree> enumerate_gtrees(const Graph& graph,
                                    std::optional<std::size_t> max_trees = std::nullopt);

}  // namespace ranktest

#endif  // RANKTEST_GRAPHICAL_HPP_
