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

#include "ranktest/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "ranktest/error.hpp"

namespace ranktest::io {

namespace {

// Runs a reader, turning nlohmann shape errors into ParseError.
template <class F>
auto reading(std::string_view what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

int read_n(const json& j) {
  const int n = j.at("n").get<int>();
  if (n < 1 || n > kMaxGroundSet) throw ValidationError("n out of range");
  return n;
}

Mask read_set(const json& j, int n) {
  const std::vector<int> elements = j.get<std::vector<int>>();
  for (int e : elements) {
    if (e < 1 || e > n) throw ValidationError("element " + std::to_string(e) + " outside [n]");
  }
  return mask_of(elements);
}

std::vector<std::pair<int, int>> read_pairs(const json& j) {
  std::vector<std::pair<int, int>> pairs;
  for (const json& p : j) {
    if (!p.is_array() || p.size() != 2) throw ParseError("expected a pair [a, b]");
    pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return pairs;
}

void check_pairs(const std::vector<std::pair<int, int>>& pairs, int n) {
  for (auto [a, b] : pairs) {
    if (a < 1 || a > n || b < 1 || b > n) throw ValidationError("pair element outside [n]");
  }
}

json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
  json out = json::array();
  for (auto [a, b] : pairs) out.push_back({a, b});
  return out;
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError("expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Poset poset_from_json(const json& j) {
  return reading("poset", [&] {
    const int n = read_n(j);
    const auto pairs = read_pairs(j.at("relation"));
    check_pairs(pairs, n);
    return Poset(n, pairs);
  });
}

PosetList poset_list_from_json(const json& j) {
  return reading("poset list", [&] {
    PosetList list{read_n(j), {}};
    for (const json& rel : j.at("posets")) {
      const auto pairs = read_pairs(rel);
      check_pairs(pairs, list.n);
      list.posets.emplace_back(list.n, pairs);
    }
    return list;
  });
}

StatementList statements_from_json(const json& j) {
  return reading("semigraphoid", [&] {
    StatementList list{read_n(j), {}};
    for (const json& s : j.at("statements")) {
      const int a = s.at("i").get<int>();
      const int b = s.at("j").get<int>();
      const Mask k = s.contains("K") ? read_set(s.at("K"), list.n) : 0;
      const CIStatement st = CIStatement::make(a, b, k);
      if (st.max_element() > list.n) throw ValidationError("statement outside [n]");
      list.statements.push_back(st);
    }
    return list;
  });
}

SetFunction set_function_from_json(const json& j) {
  return reading("set function", [&] {
    const int n = read_n(j);
    if (n > kMaxSetFunctionN) throw GuardError("set functions need n <= 20");
    SetFunction w(n);
    for (const auto& [key, value] : j.at("values").items()) {
      const Mask s = parse_subset_key(key);
      if (!is_subset(s, full_set(n))) throw ValidationError("subset " + key + " outside [n]");
      Rational v = value.is_string() ? parse_rational(value.get<std::string>())
                                     : Rational(value.get<long>());
      w.set(s, std::move(v));
    }
    return w;
  });
}

SetFamily set_family_from_json(const json& j) {
  return reading("set family", [&] {
    const int n = read_n(j);
    std::vector<Mask> sets;
    for (const json& s : j.at("sets")) sets.push_back(read_set(s, n));
    return SetFamily(n, std::move(sets));
  });
}

Graph graph_from_json(const json& j) {
  return reading("graph", [&] {
    const int n = read_n(j);
    return Graph(n, read_pairs(j.at("edges")));
  });
}

json to_json(const Poset& poset) {
  return {{"n", poset.size()}, {"relation", pairs_json(poset.cover_relations())}};
}

json to_json(const PosetList& list) {
  json posets = json::array();
  for (const Poset& p : list.posets) posets.push_back(pairs_json(p.cover_relations()));
  return {{"n", list.n}, {"posets", posets}};
}

json to_json(const CIStatement& s) {
  return {{"i", s.i}, {"j", s.j}, {"K", elements_of(s.conditioning)}};
}

json to_json(const Semigraphoid& model) {
  json statements = json::array();
  for (const CIStatement& s : model.statements()) statements.push_back(to_json(s));
  return {{"n", model.size()}, {"statements", statements}};
}

json to_json(const StatementList& list) {
  json statements = json::array();
  for (const CIStatement& s : list.statements) statements.push_back(to_json(s));
  return {{"n", list.n}, {"statements", statements}};
}

json to_json(const SetFunction& w) {
  json values = json::object();
  for (Mask s = 1; s <= full_set(w.size()); ++s) values[subset_key(s)] = to_string(w(s));
  return {{"n", w.size()}, {"values", values}};
}

json to_json(const SetFamily& family) {
  json sets = json::array();
  for (Mask s : family.sets()) sets.push_back(elements_of(s));
  return {{"n", family.size()}, {"sets", sets}};
}

json to_json(const Graph& graph) {
  return {{"n", graph.size()}, {"edges", pairs_json(graph.edges())}};
}

std::string subset_key(Mask set) {
  std::string out;
  for (int e : elements_of(set)) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

Mask parse_subset_key(std::string_view key) {
  Mask out = 0;
  if (key.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = key.find(',', start);
    const std::string_view token =
        key.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const int e = parse_int(token);
    if (e < 1 || e > kMaxGroundSet) throw ParseError("subset element out of range");
    out |= element_bit(e);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

TestSpec test_spec_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("test file must hold a JSON object");
  std::string type;
  if (j.contains("type")) {
    type = reading("test", [&] { return j.at("type").get<std::string>(); });
  } else if (j.contains("posets")) {
    type = "posets";
  } else if (j.contains("statements")) {
    type = "semigraphoid";
  } else if (j.contains("values")) {
    type = "setfunction";
  } else if (j.contains("sets")) {
    type = "setfamily";
  } else if (j.contains("edges")) {
    type = "graph";
  } else {
    throw ParseError("cannot tell the test type (posets, statements, values, sets or edges)");
  }
  if (type == "posets") return poset_list_from_json(j);
  if (type == "semigraphoid") return statements_from_json(j);
  if (type == "setfunction") return set_function_from_json(j);
  if (type == "setfamily") return set_family_from_json(j);
  if (type == "graph") return graph_from_json(j);
  throw ParseError("unknown test type '" + type + "'");
}

TestSpec parse_test_spec(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon != std::string_view::npos) {
    const std::string_view name = text.substr(0, colon);
    const std::string_view arg = text.substr(colon + 1);
    if (name == "updown") {
      const int n = parse_int(arg);
      if (n < 1 || n > 12) throw ValidationError("updown:n needs 1 <= n <= 12");
      const Semigraphoid m = updown_model(n);
      return StatementList{n, {m.statements().begin(), m.statements().end()}};
    }
    if (name == "path") return Graph::path(parse_int(arg));
    if (name == "cycle") return Graph::cycle(parse_int(arg));
    if (name == "complete") return Graph::complete(parse_int(arg));
    if (name == "edgeless") return Graph::edgeless(parse_int(arg));
    if (name == "signtest") return sign_test_family(parse_int(arg));
  }
  json doc;
  try {
    doc = json::parse(read_text(std::string(text)));
  } catch (const json::exception& e) {
    throw ParseError("test file '" + std::string(text) + "': " + e.what());
  }
  return test_spec_from_json(doc);
}

RankTest resolve_test(const TestSpec& spec, ClosurePolicy policy) {
  if (const auto* list = std::get_if<PosetList>(&spec)) {
    if (auto problem = poset_list_problem(*list)) {
      throw ValidationError("not a pre-convex test: " + *problem);
    }
    return *list;
  }
  if (const auto* list = std::get_if<StatementList>(&spec)) {
    if (policy == ClosurePolicy::kClose) return Semigraphoid::closure_of(list->n, list->statements);
    return Semigraphoid(list->n, list->statements);
  }
  if (const auto* w = std::get_if<SetFunction>(&spec)) {
    if (auto bad = find_submodularity_violation(*w)) {
      throw ValidationError("set function is not submodular: w(" + format_set(bad->first) +
                            ") + w(" + format_set(bad->second) + ") < w(" +
                            format_set(bad->first & bad->second) + ") + w(" +
                            format_set(bad->first | bad->second) + ")");
    }
    return *w;
  }
  if (const auto* f = std::get_if<SetFamily>(&spec)) return *f;
  return std::get<Graph>(spec);
}

std::vector<double> parse_data_vector(std::string_view text) {
  std::vector<double> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || !std::isfinite(v)) {
      throw ParseError("not a finite number: '" + token + "'");
    }
    out.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ';' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  if (out.empty()) throw ParseError("empty data vector");
  return out;
}

Permutation parse_observation(std::string_view text, TiePolicy policy) {
  if (text.find('|') != std::string_view::npos) {
    std::string trimmed;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    }
    return Permutation::parse(trimmed);
  }
  const std::vector<double> data = parse_data_vector(text);
  return permutation_from_data(data, policy);
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace ranktest::io
