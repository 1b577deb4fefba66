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

// Distributive lattices as sublattices of the Boolean lattice 2^[n].
//
// A permutation (d_1 | ... | d_n) is the maximal chain
// {} < {d_1} < {d_1, d_2} < ... < [n], so a node is the set of positions
// holding the top-k data values. The lattice of a class poset P therefore
// consists of the subsets closed upward in P (if a is in the set and a < b
// then b is too), and its maximal chains are exactly the linear extensions.

#ifndef RANKTEST_LATTICE_HPP_
#define RANKTEST_LATTICE_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ranktest/numeric.hpp"
#include "ranktest/permutation.hpp"
#include "ranktest/poset.hpp"
#include "ranktest/semigraphoid.hpp"
#include "ranktest/subset.hpp"

namespace ranktest {

/// Cover relation from -> from u {element}.
struct LatticeEdge {
  Mask from = 0;
  int element = 0;

  friend auto operator<=>(const LatticeEdge&, const LatticeEdge&) = default;
};

class DistributiveLattice {
 public:
  /// Sorts and deduplicates. Throws ValidationError if the empty set or [n]
  /// is missing, or an edge endpoint is not a node.
  DistributiveLattice(int n, std::vector<Mask> nodes, std::vector<LatticeEdge> edges);

  int size() const { return n_; }

  /// Ordered by cardinality_lex_less.
  const std::vector<Mask>& nodes() const { return nodes_; }

  /// Ordered by (from under cardinality_lex_less, element).
  const std::vector<LatticeEdge>& edges() const { return edges_; }

  bool has_node(Mask node) const;

  /// Nodes closed under intersection and union.
  bool is_sublattice() const;

  friend bool operator==(const DistributiveLattice&, const DistributiveLattice&) = default;

 private:
  int n_;
  std::vector<Mask> nodes_;
  std::vector<LatticeEdge> edges_;
};

/// Worklist construction of the lattice of the class of `p` in `model`:
/// seeded with the prefix chain of p, it swaps adjacent steps (H, i), (H u i, j)
/// whenever i _||_ j | H is in the model.
DistributiveLattice build_lattice(const Permutation& p, const Semigraphoid& model);

/// Up-closed subsets of `poset`, grown breadth-first from the empty set by
/// adding elements whose upper cover is already present. Throws GuardError
/// once more than `max_nodes` nodes appear.
DistributiveLattice lattice_of_poset(const Poset& poset,
                                     std::optional<std::size_t> max_nodes = std::nullopt);

/// Maximal chains from the empty set to [n], by a DP over cardinality levels.
/// Throws ValidationError if some node other than the empty set has no
/// incoming edge.
BigInt count_chains(const DistributiveLattice& lattice);

/// The maximal chains, each read as a descent vector. Throws GuardError past
/// `max_count`.
std::vector<Permutation> maximal_chains(const DistributiveLattice& lattice,
                                        std::size_t max_count);

/// The poset whose up-closed sets are the lattice's nodes: a < b iff every
/// node containing a also contains b.
Poset poset_of_lattice(const DistributiveLattice& lattice);

/// count_chains(lattice_of_poset(poset)).
BigInt count_linear_extensions(const Poset& poset,
                               std::optional<std::size_t> max_nodes = std::nullopt);

/// Number of permutations of [n] whose descent set (positions i with
/// u_i > u_{i+1}) is exactly `descents`, a mask over 1..n-1. Inclusion-
/// exclusion over subsets of `descents` with multinomial coefficients.
BigInt count_descent_class(int n, Mask descents);

enum class LatticeFormat { kJson, kDot };

/// "json" or "dot"; throws ParseError otherwise.
LatticeFormat parse_lattice_format(std::string_view name);

/// Deterministic text. JSON: {"n", "nodes": [[...]], "edges": [[[...], l]]}.
std::string export_lattice(const DistributiveLattice& lattice, LatticeFormat format);

/// Inverse of the JSON export. Throws ParseError or ValidationError.
DistributiveLattice load_lattice_json(std::string_view text);

}  // namespace ranktest

#endif  // RANKTEST_LATTICE_HPP_
