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

// Minkowski-sum-of-simplices tests, defined by a family of subsets of [n].

#ifndef RANKTEST_MSS_HPP_
#define RANKTEST_MSS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "ranktest/permutation.hpp"
#include "ranktest/semigraphoid.hpp"
#include "ranktest/submodular.hpp"
#include "ranktest/subset.hpp"

namespace ranktest {

class SetFamily {
 public:
  /// Throws ValidationError on an empty set, an element outside [n], or a
  /// duplicate set. Order is preserved.
  SetFamily(int n, std::vector<Mask> sets);

  int size() const { return n_; }
  std::span<const Mask> sets() const { return sets_; }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  int n_;
  std::vector<Mask> sets_;
};

/// w(I) = #{K in F : K n I nonempty}.
SetFunction family_weight(const SetFamily& family);

/// Coordinate i counts the sets whose largest rank sits at position i.
std::vector<int> mss_signature(const SetFamily& family,
                               std::span<const int> rank_vector);
std::vector<int> mss_signature(const SetFamily& family, const Permutation& p);

/// i _||_ j | K belongs to the model iff no set of the family contains
/// {i, j} while avoiding K.
Semigraphoid mss_model(const SetFamily& family);

/// Number of distinct models over all families of nonempty subsets of [n].
/// Throws GuardError for n > 4.
std::uint64_t count_distinct_mss(int n);

/// {{1, m+1}, {2, m+2}, ..., {m, 2m}} on [2m].
SetFamily sign_test_family(int m);

}  // namespace ranktest

#endif  // RANKTEST_MSS_HPP_
