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

// JSON file formats, test-spec shorthands and data-vector parsing.
//
//   poset         {"n": 3, "relation": [[2, 3]]}
//   poset list    {"n": 3, "posets": [[[3, 1], [2, 1]], [[2, 3]]]}
//   semigraphoid  {"n": 4, "statements": [{"i": 1, "j": 3, "K": [2, 4]}]}
//   set function  {"n": 3, "values": {"1": "1", "1,2": "2"}}   (empty set omitted)
//   set family    {"n": 4, "sets": [[1, 3], [2, 4]]}
//   graph         {"n": 6, "edges": [[1, 2], [2, 3]]}
//
// An optional "type" key ("posets", "semigraphoid", "setfunction",
// "setfamily", "graph") overrides key-based detection.

#ifndef RANKTEST_IO_HPP_
#define RANKTEST_IO_HPP_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nlohmann/json.hpp"
#include "ranktest/ci_statement.hpp"
#include "ranktest/graphical.hpp"
#include "ranktest/mss.hpp"
#include "ranktest/permutation.hpp"
#include "ranktest/poset.hpp"
#include "ranktest/semigraphoid.hpp"
#include "ranktest/stats.hpp"
#include "ranktest/submodular.hpp"

namespace ranktest::io {

using nlohmann::json;

/// Unvalidated statements as read from a file.
struct StatementList {
  int n = 0;
  std::vector<CIStatement> statements;
};

// Readers throw ParseError on shape errors and ValidationError on
// mathematically invalid content.
Poset poset_from_json(const json& j);
PosetList poset_list_from_json(const json& j);
StatementList statements_from_json(const json& j);
SetFunction set_function_from_json(const json& j);
SetFamily set_family_from_json(const json& j);
Graph graph_from_json(const json& j);

json to_json(const Poset& poset);
json to_json(const PosetList& list);
json to_json(const CIStatement& s);
json to_json(const Semigraphoid& model);
json to_json(const StatementList& list);
json to_json(const SetFunction& w);
json to_json(const SetFamily& family);
json to_json(const Graph& graph);

/// Sorted comma-joined elements: "1,2"; "" for the empty set.
std::string subset_key(Mask set);
Mask parse_subset_key(std::string_view key);

/// A test as written by the user, before validation.
using TestSpec = std::variant<PosetList, StatementList, SetFunction, SetFamily, Graph>;

TestSpec test_spec_from_json(const json& j);

/// "updown:n", "path:n", "cycle:n", "complete:n", "edgeless:n",
/// "signtest:m", or the path of a JSON file.
TestSpec parse_test_spec(std::string_view text);

enum class ClosurePolicy { kReject, kClose };

/// Validates a spec into a test. Statement lists must already be closed under
/// kReject; kClose replaces them by their closure. Poset lists are checked
/// for the pre-convex partition property; set functions for submodularity.
RankTest resolve_test(const TestSpec& spec, ClosurePolicy policy = ClosurePolicy::kReject);

/// Comma-, semicolon- or whitespace-separated reals. Throws ParseError.
std::vector<double> parse_data_vector(std::string_view text);

/// A descent vector when the text contains '|', otherwise a data vector.
Permutation parse_observation(std::string_view text, TiePolicy policy = TiePolicy::kReject);

/// Reads a whole file (or standard input for "-"). Throws ParseError.
std::string read_text(const std::string& path);

}  // namespace ranktest::io

#endif  // RANKTEST_IO_HPP_
