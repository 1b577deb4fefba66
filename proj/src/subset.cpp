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

#include "ranktest/subset.hpp"

#include <algorithm>
#include <stdexcept>

namespace ranktest {

std::vector<int> elements_of(Mask set) {
  std::vector<int> out;
  out.reserve(cardinality(set));
  while (set != 0) {
    out.push_back(std::countr_zero(set) + 1);
    set &= set - 1;
  }
  return out;
}

Mask mask_of(std::span<const int> elements) {
  Mask out = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGroundSet) {
      throw std::out_of_range("subset element " + std::to_string(e) +
                              " outside 1.." + std::to_string(kMaxGroundSet));
    }
    out |= element_bit(e);
  }
  return out;
}

std::string format_set(Mask set) {
  std::string out = "{";
  bool first = true;
  for (int e : elements_of(set)) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  out += '}';
  return out;
}

bool cardinality_lex_less(Mask a, Mask b) {
  const int ca = cardinality(a);
  const int cb = cardinality(b);
  if (ca != cb) return ca < cb;
  // Same size: the first differing element decides. The smaller element of
  // the symmetric difference belongs to the lexicographically smaller list.
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  const Mask lowest = diff & (~diff + 1);
  return (a & lowest) != 0;
}

}  // namespace ranktest
