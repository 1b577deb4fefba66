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

// Bitmask encoding of subsets of the ground set [n] = {1, ..., n}. Element e
// lives in bit e - 1.

#ifndef RANKTEST_SUBSET_HPP_
#define RANKTEST_SUBSET_HPP_

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ranktest {

using Mask = std::uint64_t;

inline constexpr int kMaxGroundSet = 64;

constexpr Mask element_bit(int element) { return Mask{1} << (element - 1); }

constexpr Mask full_set(int n) {
  return n >= kMaxGroundSet ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr bool contains(Mask set, int element) {
  return (set & element_bit(element)) != 0;
}

constexpr int cardinality(Mask set) { return std::popcount(set); }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Elements of `set` in increasing order.
std::vector<int> elements_of(Mask set);

// Throws std::out_of_range if an element is outside 1..kMaxGroundSet.
Mask mask_of(std::span<const int> elements);

// "{1,3}" / "{}".
std::string format_set(Mask set);

// Total order used for deterministic output: by cardinality, then by the
// sorted element lists compared lexicographically.
bool cardinality_lex_less(Mask a, Mask b);

}  // namespace ranktest

#endif  // RANKTEST_SUBSET_HPP_
