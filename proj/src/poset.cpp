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

#include "ranktest/poset.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "ranktest/error.hpp"

namespace ranktest {

namespace {

// Depth-first enumeration of linear extensions in lexicographic order of the
// descent vector. The next entry must be an unplaced element all of whose
// upper elements are already placed. `visit` returns false to stop; the
// function returns false iff stopped early.
bool for_each_extension(const Poset& poset,
                        const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = poset.size();
  std::vector<int> descent;
  descent.reserve(n);
  std::function<bool(Mask)> recurse = [&](Mask placed) -> bool {
    if (static_cast<int>(descent.size()) == n) return visit(descent);
    for (int x = 1; x <= n; ++x) {
      if (contains(placed, x) || !is_subset(poset.above(x), placed)) continue;
      descent.push_back(x);
      const bool go_on = recurse(placed | element_bit(x));
      descent.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  return recurse(0);
}

// |L(P)|, but stops counting once it exceeds `limit`.
std::size_t count_extensions_upto(const Poset& poset, std::size_t limit) {
  std::size_t count = 0;
  for_each_extension(poset, [&](const std::vector<int>&) { return ++count <= limit; });
  return count;
}

}  // namespace

Poset::Poset(int n) : n_(n), above_(n, 0) {
  if (n < 1 || n > kMaxGroundSet) {
    throw ValidationError("poset size must be between 1 and " + std::to_string(kMaxGroundSet));
  }
}

Poset::Poset(int n, std::span<const std::pair<int, int>> relation) : Poset(n) {
  for (const auto& [a, b] : relation) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw ValidationError("poset pair (" + std::to_string(a) + "," + std::to_string(b) +
                            ") outside [" + std::to_string(n) + "]");
    }
    if (a == b) throw ValidationError("poset relation must be irreflexive");
    above_[a - 1] |= element_bit(b);
  }
  for (int k = 1; k <= n_; ++k) {
    for (int a = 1; a <= n_; ++a) {
      if (contains(above_[a - 1], k)) above_[a - 1] |= above_[k - 1];
    }
  }
  for (int a = 1; a <= n_; ++a) {
    if (contains(above_[a - 1], a)) throw ValidationError("poset relation contains a cycle");
  }
}

Poset Poset::total_order(const Permutation& p) {
  Poset out(p.size());
  // Each entry of the descent vector lies above every later entry.
  Mask higher = 0;
  for (int k = 1; k <= p.size(); ++k) {
    out.above_[p.at(k) - 1] = higher;
    higher |= element_bit(p.at(k));
  }
  return out;
}

Poset Poset::boolean_lattice(int k) {
  if (k < 0 || k > 6) throw ValidationError("boolean lattice poset needs 0 <= k <= 6");
  const int size = 1 << k;
  Poset out(size);
  for (int a = 1; a <= size; ++a) {
    const auto sa = static_cast<Mask>(a - 1);
    for (int b = 1; b <= size; ++b) {
      const auto sb = static_cast<Mask>(b - 1);
      if (sa != sb && is_subset(sa, sb)) out.above_[a - 1] |= element_bit(b);
    }
  }
  return out;
}

Mask Poset::below(int b) const {
  Mask out = 0;
  for (int a = 1; a <= n_; ++a) {
    if (less(a, b)) out |= element_bit(a);
  }
  return out;
}

std::vector<std::pair<int, int>> Poset::relation() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n_; ++a) {
    for (int b : elements_of(above_[a - 1])) out.emplace_back(a, b);
  }
  return out;
}

std::size_t Poset::relation_size() const {
  std::size_t out = 0;
  for (Mask m : above_) out += static_cast<std::size_t>(cardinality(m));
  return out;
}

std::vector<std::pair<int, int>> Poset::cover_relations() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n_; ++a) {
    // b covers a unless some c with a < c < b exists.
    Mask indirect = 0;
    for (int c : elements_of(above_[a - 1])) indirect |= above_[c - 1];
    for (int b : elements_of(above_[a - 1] & ~indirect)) out.emplace_back(a, b);
  }
  return out;
}

bool Poset::is_linear_extension(const Permutation& p) const {
  if (p.size() != n_) return false;
  Mask placed = 0;
  for (int k = 1; k <= n_; ++k) {
    if (!is_subset(above_[p.at(k) - 1], placed)) return false;
    placed |= element_bit(p.at(k));
  }
  return true;
}

Poset intersect_orders(std::span<const Permutation> perms) {
  if (perms.empty()) throw ValidationError("cannot intersect an empty set of orders");
  const int n = perms.front().size();
  std::vector<std::pair<int, int>> common;
  for (const auto& pair : perms.front().order_pairs()) {
    bool everywhere = true;
    for (const Permutation& p : perms) {
      if (p.size() != n) throw ValidationError("permutations of different sizes");
      const std::vector<int> rho = p.rank_vector();
      if (rho[pair.first - 1] > rho[pair.second - 1]) {
        everywhere = false;
        break;
      }
    }
    if (everywhere) common.push_back(pair);
  }
  return Poset(n, common);
}

std::vector<Permutation> linear_extensions(const Poset& poset,
                                           std::optional<std::size_t> max_count) {
  if (!max_count && poset.size() > 12) {
    throw GuardError("linear extension enumeration needs n <= 12 or an explicit bound");
  }
  std::vector<Permutation> out;
  const bool complete = for_each_extension(poset, [&](const std::vector<int>& d) {
    if (max_count && out.size() >= *max_count) return false;
    out.emplace_back(d);
    return true;
  });
  if (!complete) {
    throw GuardError("more than " + std::to_string(*max_count) + " linear extensions");
  }
  return out;
}

bool RankPartition::is_valid() const {
  if (n < 1 || n > 12) return false;
  std::set<Permutation> seen;
  for (const auto& block : blocks) {
    if (block.empty()) return false;
    for (const Permutation& p : block) {
      if (p.size() != n || !seen.insert(p).second) return false;
    }
  }
  std::size_t total = 1;
  for (int k = 2; k <= n; ++k) total *= static_cast<std::size_t>(k);
  return seen.size() == total;
}

bool is_preconvex(const RankPartition& partition) {
  for (const auto& block : partition.blocks) {
    // A block is always contained in the extensions of its intersection, so
    // equality is a matter of counting.
    const Poset p = intersect_orders(block);
    if (count_extensions_upto(p, block.size()) != block.size()) return false;
  }
  return true;
}

PreconvexCount count_preconvex(int n) {
  if (n < 1 || n > 3) throw GuardError("count_preconvex enumerates B_{n!} partitions; n <= 3");
  const std::vector<Permutation> perms = all_permutations(n);
  const std::size_t m = perms.size();
  PreconvexCount out;
  // Restricted-growth strings: label[0] = 0, label[k] <= 1 + max(label[0..k)).
  std::vector<int> label(m, 0);
  std::function<void(std::size_t, int)> recurse = [&](std::size_t k, int max_label) {
    if (k == m) {
      RankPartition partition{n, std::vector<std::vector<Permutation>>(max_label + 1)};
      for (std::size_t t = 0; t < m; ++t) partition.blocks[label[t]].push_back(perms[t]);
      ++out.total;
      if (is_preconvex(partition)) ++out.preconvex;
      return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
      label[k] = l;
      recurse(k + 1, std::max(max_label, l));
    }
  };
  recurse(1, 0);
  return out;
}

ClassPoset class_poset(std::span<const Permutation> block) {
  if (block.empty()) throw ValidationError("class poset of an empty block");
  Poset p = intersect_orders(block);
  const bool exact = count_extensions_upto(p, block.size()) == block.size();
  return ClassPoset{std::move(p), exact};
}

}  // namespace ranktest
