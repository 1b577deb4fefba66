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

#ifndef RANKTEST_POSET_HPP_
#define RANKTEST_POSET_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ranktest/permutation.hpp"
#include "ranktest/subset.hpp"

namespace ranktest {

/// Strict partial order on [n]. A pair (a, b) means a < b, i.e. u_a < u_b for
/// every data vector in the corresponding class. The full transitive closure
/// is stored; n is limited to kMaxGroundSet.
class Poset {
 public:
  /// The empty order (antichain) on [n].
  explicit Poset(int n);

  /// Applies transitive closure. Throws ValidationError on a loop, a cycle,
  /// or an element outside [n].
  Poset(int n, std::span<const std::pair<int, int>> relation);

  /// The total order of a permutation.
  static Poset total_order(const Permutation& p);

  /// The Boolean lattice 2^[k] ordered by proper inclusion, as a poset on
  /// 2^k elements: element e stands for the subset with bitmask e - 1.
  static Poset boolean_lattice(int k);

  int size() const { return n_; }

  bool less(int a, int b) const { return contains(above_[a - 1], b); }

  /// {b : a < b}.
  Mask above(int a) const { return above_[a - 1]; }

  /// {a : a < b}.
  Mask below(int b) const;

  /// All pairs of the closed relation, sorted.
  std::vector<std::pair<int, int>> relation() const;

  std::size_t relation_size() const;

  /// Cover relations (Hasse diagram), sorted.
  std::vector<std::pair<int, int>> cover_relations() const;

  bool is_linear_extension(const Permutation& p) const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  int n_;
  std::vector<Mask> above_;
};

/// Intersection of the total orders of `perms`. Throws ValidationError on an
/// empty input or mixed sizes.
Poset intersect_orders(std::span<const Permutation> perms);

/// All linear extensions, in lexicographic order of descent vectors, by
/// backtracking. Without `max_count` the poset must have n <= 12; with it,
/// enumeration aborts with GuardError once more than `max_count` are found.
std::vector<Permutation> linear_extensions(
    const Poset& poset, std::optional<std::size_t> max_count = std::nullopt);

/// A partition of S_n into blocks.
struct RankPartition {
  int n = 0;
  std::vector<std::vector<Permutation>> blocks;

  /// True iff the blocks are nonempty, pairwise disjoint and cover S_n.
  bool is_valid() const;
};

/// Axiom (PC): every block equals the linear extensions of the intersection
/// of its total orders. `partition` must be valid.
bool is_preconvex(const RankPartition& partition);

struct PreconvexCount {
  std::uint64_t preconvex = 0;
  std::uint64_t total = 0;  // Bell number B_{n!}
};

/// Enumerates every set partition of S_n by restricted-growth strings.
/// Throws GuardError for n > 3.
PreconvexCount count_preconvex(int n);

struct ClassPoset {
  Poset poset;
  bool is_exact = false;  // L(poset) equals the block
};

/// Throws ValidationError on an empty block.
ClassPoset class_poset(std::span<const Permutation> block);

}  // namespace ranktest

#endif  // RANKTEST_POSET_HPP_
