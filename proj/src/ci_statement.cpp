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

#include "ranktest/ci_statement.hpp"

#include <algorithm>
#include <bit>

#include "ranktest/error.hpp"

namespace ranktest {

CIStatement CIStatement::make(int a, int b, Mask conditioning) {
  if (a < 1 || b < 1 || a > kMaxGroundSet || b > kMaxGroundSet) {
    throw ValidationError("CI statement element out of range");
  }
  if (a == b) throw ValidationError("CI statement needs two distinct elements");
  if (contains(conditioning, a) || contains(conditioning, b)) {
    throw ValidationError("conditioning set meets the independent pair");
  }
  return CIStatement{std::min(a, b), std::max(a, b), conditioning};
}

CIStatement CIStatement::dual(int n) const {
  const Mask rest = full_set(n) & ~(conditioning | element_bit(i) | element_bit(j));
  return CIStatement{i, j, rest};
}

int CIStatement::max_element() const {
  int top = j;
  if (conditioning != 0) top = std::max(top, kMaxGroundSet - std::countl_zero(conditioning));
  return top;
}

std::string CIStatement::to_string() const {
  return std::to_string(i) + "_||_" + std::to_string(j) + "|" + format_set(conditioning);
}

std::vector<CIStatement> all_statements(int n) {
  std::vector<CIStatement> out;
  out.reserve(statement_count(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const Mask rest = full_set(n) & ~(element_bit(i) | element_bit(j));
      // Every subset of `rest`, ascending as integers.
      Mask k = 0;
      while (true) {
        out.push_back(CIStatement{i, j, k});
        if (k == rest) break;
        k = (k - rest) & rest;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t statement_count(int n) {
  if (n < 2) return 0;
  return static_cast<std::size_t>(n) * (n - 1) / 2 * (std::size_t{1} << (n - 2));
}

}  // namespace ranktest
