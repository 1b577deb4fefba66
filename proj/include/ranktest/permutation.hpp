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

// Permutations of [n] and the permutohedron's edge structure.
//
// A permutation is stored as its descent vector (d_1 | d_2 | ... | d_n):
// d_k is the position of the k-th largest data value. The rank vector and the
// set of ordered pairs are derived views.

#ifndef RANKTEST_PERMUTATION_HPP_
#define RANKTEST_PERMUTATION_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ranktest/ci_statement.hpp"
#include "ranktest/subset.hpp"

namespace ranktest {

class Permutation {
 public:
  /// Throws ValidationError unless `descent` is a bijection on [n], n >= 1.
  explicit Permutation(std::vector<int> descent);

  /// (1|2|...|n): the data are strictly decreasing.
  static Permutation identity(int n);

  /// Inverse of rank_vector(). Throws ValidationError on a non-bijection.
  static Permutation from_rank_vector(std::span<const int> ranks);

  /// "3|1|2". Throws ParseError.
  static Permutation parse(std::string_view text);

  /// Inverse of index(); `index` must be below n!.
  static Permutation from_index(int n, std::uint64_t index);

  int size() const { return static_cast<int>(descent_.size()); }

  /// 1-based: at(1) is the position holding the largest value.
  int at(int position) const { return descent_[position - 1]; }

  std::span<const int> descent() const { return descent_; }

  /// rho with rho_i < rho_j iff u_i < u_j.
  std::vector<int> rank_vector() const;

  /// {(i, j) : u_i < u_j}, sorted; n(n-1)/2 pairs.
  std::vector<std::pair<int, int>> order_pairs() const;

  /// Label of the wall between this permutation and swapped(k):
  /// d_k _||_ d_{k+1} | {d_1, ..., d_{k-1}}. Throws std::out_of_range unless
  /// 1 <= k <= n - 1.
  CIStatement edge_label(int k) const;

  /// Exchanges d_k and d_{k+1}. Throws std::out_of_range.
  Permutation swapped(int k) const;

  /// The n - 1 permutohedron neighbours; the k-th one is swapped(k).
  std::vector<Permutation> neighbors() const;

  /// {d_1, ..., d_k}.
  Mask prefix(int k) const;

  /// Positions i in 1..n-1 with u_i > u_{i+1}, as a mask.
  Mask descent_set() const;

  /// Lexicographic rank of the descent vector among all of S_n (n <= 20).
  std::uint64_t index() const;

  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> descent_;
};

enum class TiePolicy {
  kReject,      // equal coordinates raise TiesError
  kIndexOrder,  // among equal values the lower index counts as larger
};

/// Permutation of a data vector with pairwise distinct coordinates.
Permutation permutation_from_data(std::span<const double> data,
                                  TiePolicy policy = TiePolicy::kReject);

/// All n! permutations in lexicographic order of their descent vectors.
std::vector<Permutation> all_permutations(int n);

}  // namespace ranktest

#endif  // RANKTEST_PERMUTATION_HPP_
