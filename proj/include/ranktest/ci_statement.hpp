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

#ifndef RANKTEST_CI_STATEMENT_HPP_
#define RANKTEST_CI_STATEMENT_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "ranktest/subset.hpp"

namespace ranktest {

/// Elementary conditional independence statement i _||_ j | K.
///
/// The pair is unordered and stored with i < j; K is disjoint from {i, j}.
/// Construct through make() so that the invariants hold.
struct CIStatement {
  int i = 0;
  int j = 0;
  Mask conditioning = 0;

  /// Canonicalizes the pair order. Throws ValidationError if a == b, if an
  /// element is < 1, or if K meets {a, b}.
  static CIStatement make(int a, int b, Mask conditioning);

  /// i _||_ j | [n] \ (K u {i, j}).
  CIStatement dual(int n) const;

  /// Largest element mentioned by the statement.
  int max_element() const;

  /// "1_||_3|{2,4}".
  std::string to_string() const;

  friend auto operator<=>(const CIStatement&, const CIStatement&) = default;
};

/// The ground set T_n of all elementary statements on [n], sorted.
std::vector<CIStatement> all_statements(int n);

/// |T_n| = C(n, 2) * 2^(n-2).
std::size_t statement_count(int n);

}  // namespace ranktest

#endif  // RANKTEST_CI_STATEMENT_HPP_
