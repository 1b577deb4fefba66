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

// Rank tests as signature maps on S_n, class-size tables and exact p-values.

#ifndef RANKTEST_STATS_HPP_
#define RANKTEST_STATS_HPP_

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ranktest/graphical.hpp"
#include "ranktest/mss.hpp"
#include "ranktest/numeric.hpp"
#include "ranktest/permutation.hpp"
#include "ranktest/poset.hpp"
#include "ranktest/semigraphoid.hpp"
#include "ranktest/submodular.hpp"

namespace ranktest {

/// A pre-convex test given explicitly by its class posets.
struct PosetList {
  int n = 0;
  std::vector<Poset> posets;
};

/// A graph stands for its tubing test; a set function must be submodular.
using RankTest = std::variant<PosetList, Semigraphoid, SetFunction, SetFamily, Graph>;

/// "posets", "semigraphoid", "submodular", "mss" or "graph".
std::string_view test_kind(const RankTest& test);
int test_size(const RankTest& test);

/// Why a poset list fails to be a pre-convex test (extension sets must be
/// nonempty, disjoint and cover S_n), or nullopt if it is one. n <= 10.
std::optional<std::string> poset_list_problem(const PosetList& list);

/// The semigraphoid whose classes are the test's classes (none for poset
/// lists). Throws ValidationError for a non-submodular set function.
std::optional<Semigraphoid> test_model(const RankTest& test);

struct Signature {
  std::string kind;   // "updown", "class_poset", "greedy_vertex", "mss", "tubing", "poset_index"
  std::string value;  // canonical text, equal iff same class

  friend auto operator<=>(const Signature&, const Signature&) = default;
};

Signature signature(const RankTest& test, const Permutation& p);

/// |class of p|, computed without tabulating the whole test: G-tree
/// counting for graphs, lattice chains for semigraphoid-backed tests,
/// extension counting for poset lists.
BigInt class_size(const RankTest& test, const Permutation& p);

enum class Backend {
  kAuto,        // G-trees for graphs, lattices otherwise
  kBruteForce,  // signature of every permutation, n <= 10
  kLattice,     // sweep S_n, one lattice per discovered class, n <= 10
  kGTree,       // graphs only
};

/// Class sizes keyed by signature value.
struct ClassTable {
  int n = 0;
  std::map<std::string, BigInt> sizes;

  BigInt total() const;
};

/// Throws GuardError when the backend cannot handle n, ValidationError when
/// it does not apply to the test.
ClassTable class_sizes(const RankTest& test, Backend backend = Backend::kAuto);

/// Sum of size / n! over classes whose size is at most `size`.
Rational p_value(const ClassTable& table, const BigInt& size);
Rational p_value(const RankTest& test, const Permutation& p);

}  // namespace ranktest

#endif  // RANKTEST_STATS_HPP_
