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

#include "ranktest/mss.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "ranktest/error.hpp"

namespace ranktest {

namespace {

// s is excluded from the model by `set` iff set n (K u ij) = ij.
bool excludes(Mask set, const CIStatement& s) {
  const Mask pair = element_bit(s.i) | element_bit(s.j);
  return (set & (s.conditioning | pair)) == pair;
}

}  // namespace

SetFamily::SetFamily(int n, std::vector<Mask> sets) : n_(n), sets_(std::move(sets)) {
  if (n < 1 || n > kMaxGroundSet) throw ValidationError("ground set size out of range");
  std::unordered_set<Mask> seen;
  for (Mask s : sets_) {
    if (s == 0) throw ValidationError("set family contains the empty set");
    if (!is_subset(s, full_set(n))) {
      throw ValidationError("set " + format_set(s) + " leaves the ground set");
    }
    if (!seen.insert(s).second) {
      throw ValidationError("set " + format_set(s) + " appears twice");
    }
  }
}

SetFunction family_weight(const SetFamily& family) {
  SetFunction w(family.size());
  for (Mask i = 1; i <= full_set(family.size()); ++i) {
    int hits = 0;
    for (Mask s : family.sets()) hits += (s & i) != 0;
    w.set(i, hits);
  }
  return w;
}

std::vector<int> mss_signature(const SetFamily& family, std::span<const int> rank_vector) {
  if (static_cast<int>(rank_vector.size()) != family.size()) {
    throw ValidationError("rank vector size does not match the family");
  }
  std::vector<int> tau(family.size(), 0);
  for (Mask s : family.sets()) {
    int best = 0;
    for (int a : elements_of(s)) {
      if (best == 0 || rank_vector[a - 1] > rank_vector[best - 1]) best = a;
    }
    ++tau[best - 1];
  }
  return tau;
}

std::vector<int> mss_signature(const SetFamily& family, const Permutation& p) {
  const std::vector<int> ranks = p.rank_vector();
  return mss_signature(family, ranks);
}

Semigraphoid mss_model(const SetFamily& family) {
  std::vector<CIStatement> kept;
  for (const CIStatement& s : all_statements(family.size())) {
    const auto sets = family.sets();
    if (std::none_of(sets.begin(), sets.end(), [&](Mask k) { return excludes(k, s); })) {
      kept.push_back(s);
    }
  }
  return Semigraphoid(family.size(), std::move(kept));
}

std::uint64_t count_distinct_mss(int n) {
  if (n < 1) throw ValidationError("n must be positive");
  if (n > 4) throw GuardError("count_distinct_mss enumerates 2^(2^n - 1) families; n <= 4");
  const std::vector<CIStatement> statements = all_statements(n);
  const std::size_t subsets = (std::size_t{1} << n) - 1;

  // kill[b]: statements excluded by the subset with mask b + 1.
  std::vector<std::uint32_t> kill(subsets, 0);
  for (std::size_t b = 0; b < subsets; ++b) {
    for (std::size_t t = 0; t < statements.size(); ++t) {
      if (excludes(b + 1, statements[t])) kill[b] |= std::uint32_t{1} << t;
    }
  }

  const std::size_t families = std::size_t{1} << subsets;
  std::vector<std::uint32_t> excluded(families, 0);
  std::unordered_set<std::uint32_t> models{0};
  for (std::size_t f = 1; f < families; ++f) {
    const int low = std::countr_zero(f);
    excluded[f] = excluded[f & (f - 1)] | kill[low];
    models.insert(excluded[f]);
  }
  return models.size();
}

SetFamily sign_test_family(int m) {
  if (m < 1 || 2 * m > kMaxGroundSet) throw ValidationError("sign test needs 1 <= m <= 32");
  std::vector<Mask> sets;
  for (int i = 1; i <= m; ++i) sets.push_back(element_bit(i) | element_bit(m + i));
  return SetFamily(2 * m, std::move(sets));
}

}  // namespace ranktest
