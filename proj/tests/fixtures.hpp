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

// Hand-transcribed models and small helpers shared by the test binaries.

#ifndef RANKTEST_TESTS_FIXTURES_HPP_
#define RANKTEST_TESTS_FIXTURES_HPP_

#include <random>
#include <string_view>
#include <vector>

#include "ranktest/ci_statement.hpp"
#include "ranktest/graphical.hpp"
#include "ranktest/semigraphoid.hpp"

namespace ranktest::fixtures {

/// "ij|K" with single-digit elements: "23|14" is 2 _||_ 3 | {1,4}, "12|" has
/// an empty conditioning set.
CIStatement st(std::string_view text);
std::vector<CIStatement> sts(std::initializer_list<std::string_view> texts);

/// {2_||_3|14, 1_||_4|23, 1_||_2, 3_||_4}: a semigraphoid with no
/// submodular realization.
Semigraphoid nonstructural_model();

/// One representative per symmetry type of the maximal semigraphoids on [4],
/// in table order.
std::vector<Semigraphoid> maximal_semigraphoids_4();

/// Sizes of the S_4 x duality orbits of the representatives above.
std::vector<std::size_t> maximal_orbit_sizes_4();

/// Closure of 1..max_generators statements drawn uniformly from T_n.
Semigraphoid random_semigraphoid(int n, std::mt19937& rng, int max_generators = 4);

/// Each of the C(n,2) edges present with probability 1/2.
Graph random_graph(int n, std::mt19937& rng);

Permutation random_permutation(int n, std::mt19937& rng);

}  // namespace ranktest::fixtures

#endif  // RANKTEST_TESTS_FIXTURES_HPP_
