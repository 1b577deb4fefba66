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

// Brute-force reference implementations. Test-only; they avoid the
// production traversal code so that agreement carries weight.

#ifndef RANKTEST_TESTS_ORACLE_ORACLE_HPP_
#define RANKTEST_TESTS_ORACLE_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ranktest/numeric.hpp"
#include "ranktest/poset.hpp"
#include "ranktest/subset.hpp"

namespace ranktest::oracle {

inline constexpr int kMaxBruteN = 8;
inline constexpr std::uint64_t kMaxExtensions = 10'000'000;

/// Signature of a descent vector (1-based entries).
using SignatureFn = std::function<std::string(const std::vector<int>& descent)>;

/// Groups S_n by signature. Blocks appear in order of their first member in
/// lexicographic descent order; members are listed in that order too.
RankPartition brute_classes(int n, const SignatureFn& signature);

/// Partition of S_n into connected components of the permutohedron graph
/// restricted to edges whose label (i, j, K) satisfies `keep`.
using EdgePredicate = std::function<bool(int i, int j, Mask conditioning)>;
RankPartition brute_edge_classes(int n, const EdgePredicate& keep);

struct ExtensionResult {
  std::uint64_t count = 0;
  std::vector<std::vector<int>> descents;  // filled only when listing
};

/// Depth-first enumeration of the descent vectors compatible with `less`
/// (less[a][b] means a sits below b). Throws std::length_error past the cap.
ExtensionResult brute_linear_extensions(int n, const std::vector<std::vector<bool>>& less,
                                        bool list, std::uint64_t cap = kMaxExtensions);

/// Convenience overload reading the relation of a production poset.
ExtensionResult brute_linear_extensions(const Poset& poset, bool list,
                                        std::uint64_t cap = kMaxExtensions);

/// Union-find components of the graph on `vertices`; each component as a
/// mask, sorted by smallest element.
std::vector<Mask> union_find_components(int n, const std::vector<std::pair<int, int>>& edges,
                                        Mask vertices);

/// Vertices of {x : x(S) <= w(S) for all S, x([n]) = w([n])}, found by
/// solving every square system of tight constraints; sorted.
std::vector<std::vector<Rational>> polytope_vertices(int n, const std::vector<Rational>& w);

/// Fourier-Motzkin feasibility of {x : E x = 0, S x >= 1}.
bool fourier_motzkin_feasible(std::size_t num_variables,
                              const std::vector<std::vector<Rational>>& equalities,
                              const std::vector<std::vector<Rational>>& at_least_one);

}  // namespace ranktest::oracle

#endif  // RANKTEST_TESTS_ORACLE_ORACLE_HPP_
