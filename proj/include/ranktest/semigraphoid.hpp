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

// Semigraphoids: sets of elementary CI statements closed under
//
//   i _||_ j | K u l  and  i _||_ l | K
//     ==>  i _||_ j | K  and  i _||_ l | K u j.
//
// A semigraphoid is the same thing as a convex rank test: its classes are
// the connected components of the permutohedron after contracting every edge
// whose label lies in the model.

#ifndef RANKTEST_SEMIGRAPHOID_HPP_
#define RANKTEST_SEMIGRAPHOID_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ranktest/ci_statement.hpp"
#include "ranktest/permutation.hpp"
#include "ranktest/poset.hpp"

namespace ranktest {

/// True iff `statements` (any order, duplicates allowed) is closed under the
/// semigraphoid axiom.
bool is_semigraphoid(int n, std::span<const CIStatement> statements);

/// Smallest closed superset, sorted. Worklist over newly derived statements.
std::vector<CIStatement> sg_closure(int n,
                                    std::span<const CIStatement> statements);

class Semigraphoid {
 public:
  /// Throws ValidationError if the statements are not closed or mention
  /// elements outside [n].
  Semigraphoid(int n, std::vector<CIStatement> statements);

  static Semigraphoid closure_of(int n, std::span<const CIStatement> statements);
  static Semigraphoid empty(int n);
  static Semigraphoid full(int n);

  int size() const { return n_; }
  std::span<const CIStatement> statements() const { return statements_; }
  std::size_t count() const { return statements_.size(); }
  bool contains(const CIStatement& s) const;

  /// Applies the duality involution to every statement.
  Semigraphoid dual() const;

  /// Image under relabelling element e to sigma[e - 1].
  Semigraphoid relabeled(std::span<const int> sigma) const;

  friend bool operator==(const Semigraphoid&, const Semigraphoid&) = default;

 private:
  struct Trusted {};
  Semigraphoid(int n, std::vector<CIStatement> sorted, Trusted);

  int n_;
  std::vector<CIStatement> statements_;  // sorted, unique
};

/// Default guard for class enumeration.
inline constexpr int kMaxClassEnumerationN = 10;

/// Component of `p` in the permutohedron graph restricted to edges labelled
/// by `model`, sorted. Without `max_size` requires n <= 10; otherwise throws
/// GuardError once the component exceeds `max_size`.
std::vector<Permutation> class_of(const Semigraphoid& model, const Permutation& p,
                                  std::optional<std::size_t> max_size = std::nullopt);

/// Partition of S_n into classes, blocks ordered by their smallest member.
/// Throws GuardError for n > 10.
RankPartition all_classes(const Semigraphoid& model);

/// All closed subsets of T_n. Throws GuardError for n > 3.
std::vector<Semigraphoid> enumerate_semigraphoids(int n);

/// Number of orbits of `models` under relabelling by S_n, optionally also
/// identifying each model with its dual.
std::size_t count_orbits(std::span<const Semigraphoid> models, bool with_duality);

/// Up-down analysis: every i _||_ j | K with |i - j| >= 2.
Semigraphoid updown_model(int n);

/// Membership predicate for a set of permutohedron edges; the edge joins p and
/// p.swapped(k).
using EdgeSet = std::function<bool(const Permutation& p, int k)>;

/// Square axiom (an edge of a square forces the opposite edge) and hexagon
/// axiom (two adjacent edges of a hexagon force the two opposite edges),
/// checked over every square and hexagon of the permutohedron. n <= 8.
bool satisfies_square_hexagon(int n, const EdgeSet& edges);

/// The edges whose label lies in `statements`.
EdgeSet labeled_edges(std::span<const CIStatement> statements);

}  // namespace ranktest

#endif  // RANKTEST_SEMIGRAPHOID_HPP_
