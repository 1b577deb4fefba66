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

#include "ranktest/lattice.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "nlohmann/json.hpp"
#include "ranktest/error.hpp"

namespace ranktest {

namespace {

bool edge_less(const LatticeEdge& a, const LatticeEdge& b) {
  if (a.from != b.from) return cardinality_lex_less(a.from, b.from);
  return a.element < b.element;
}

nlohmann::json set_json(Mask set) { return elements_of(set); }

}  // namespace

DistributiveLattice::DistributiveLattice(int n, std::vector<Mask> nodes,
                                         std::vector<LatticeEdge> edges)
    : n_(n), nodes_(std::move(nodes)), edges_(std::move(edges)) {
  if (n < 1 || n > kMaxGroundSet) throw ValidationError("lattice size out of range");
  std::sort(nodes_.begin(), nodes_.end(), cardinality_lex_less);
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  std::sort(edges_.begin(), edges_.end(), edge_less);
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  for (Mask node : nodes_) {
    if (!is_subset(node, full_set(n))) {
      throw ValidationError("lattice node " + format_set(node) + " leaves the ground set");
    }
  }
  if (!has_node(0) || !has_node(full_set(n))) {
    throw ValidationError("lattice must contain the empty set and the ground set");
  }
  for (const LatticeEdge& e : edges_) {
    if (e.element < 1 || e.element > n || contains(e.from, e.element) || !has_node(e.from) ||
        !has_node(e.from | element_bit(e.element))) {
      throw ValidationError("lattice edge (" + format_set(e.from) + ", " +
                            std::to_string(e.element) + ") is not between two nodes");
    }
  }
}

bool DistributiveLattice::has_node(Mask node) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), node, cardinality_lex_less);
}

bool DistributiveLattice::is_sublattice() const {
  for (std::size_t a = 0; a < nodes_.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes_.size(); ++b) {
      if (!has_node(nodes_[a] & nodes_[b]) || !has_node(nodes_[a] | nodes_[b])) return false;
    }
  }
  return true;
}

DistributiveLattice build_lattice(const Permutation& p, const Semigraphoid& model) {
  const int n = p.size();
  if (model.size() != n) throw ValidationError("permutation size does not match the model");

  std::unordered_set<Mask> confirmed;
  for (int k = 0; k <= n; ++k) confirmed.insert(p.prefix(k));
  std::set<std::pair<Mask, int>> checked{{p.prefix(n - 1), p.at(n)}};
  std::vector<std::pair<Mask, int>> waiting;
  for (int k = 1; k <= n - 1; ++k) waiting.emplace_back(p.prefix(k - 1), p.at(k));

  while (!waiting.empty()) {
    const auto [h, i] = waiting.back();
    waiting.pop_back();
    checked.emplace(h, i);
    const Mask hi = h | element_bit(i);
    for (int j = 1; j <= n; ++j) {
      if (contains(hi, j) || !checked.contains({hi, j})) continue;
      if (!model.contains(CIStatement::make(i, j, h))) continue;
      checked.emplace(h, j);
      const Mask hj = h | element_bit(j);
      if (confirmed.insert(hj).second) waiting.emplace_back(hj, i);
    }
  }

  std::vector<LatticeEdge> edges;
  edges.reserve(checked.size());
  for (auto [from, element] : checked) edges.push_back({from, element});
  return DistributiveLattice(n, {confirmed.begin(), confirmed.end()}, std::move(edges));
}

DistributiveLattice lattice_of_poset(const Poset& poset, std::optional<std::size_t> max_nodes) {
  const int n = poset.size();
  std::unordered_set<Mask> seen{0};
  std::deque<Mask> queue{0};
  std::vector<LatticeEdge> edges;
  while (!queue.empty()) {
    const Mask node = queue.front();
    queue.pop_front();
    for (int x = 1; x <= n; ++x) {
      if (contains(node, x) || !is_subset(poset.above(x), node)) continue;
      const Mask next = node | element_bit(x);
      edges.push_back({node, x});
      if (seen.insert(next).second) {
        if (max_nodes && seen.size() > *max_nodes) {
          throw GuardError("lattice has more than " + std::to_string(*max_nodes) + " nodes");
        }
        queue.push_back(next);
      }
    }
  }
  return DistributiveLattice(n, {seen.begin(), seen.end()}, std::move(edges));
}

BigInt count_chains(const DistributiveLattice& lattice) {
  // Nodes are sorted by cardinality, so every edge source precedes its target.
  std::unordered_map<Mask, BigInt> chains;
  chains.reserve(lattice.nodes().size());
  chains[0] = 1;
  std::unordered_map<Mask, std::vector<Mask>> incoming;
  for (const LatticeEdge& e : lattice.edges()) {
    incoming[e.from | element_bit(e.element)].push_back(e.from);
  }
  for (Mask node : lattice.nodes()) {
    if (node == 0) continue;
    const auto it = incoming.find(node);
    if (it == incoming.end()) {
      throw ValidationError("lattice node " + format_set(node) + " has no incoming edge");
    }
    BigInt total = 0;
    for (Mask from : it->second) total += chains.at(from);
    chains[node] = std::move(total);
  }
  return chains.at(full_set(lattice.size()));
}

std::vector<Permutation> maximal_chains(const DistributiveLattice& lattice,
                                        std::size_t max_count) {
  std::unordered_map<Mask, std::vector<int>> outgoing;
  for (const LatticeEdge& e : lattice.edges()) outgoing[e.from].push_back(e.element);
  const Mask top = full_set(lattice.size());
  std::vector<Permutation> out;
  std::vector<int> path;
  std::function<void(Mask)> walk = [&](Mask node) {
    if (node == top) {
      if (out.size() >= max_count) {
        throw GuardError("more than " + std::to_string(max_count) + " maximal chains");
      }
      out.emplace_back(path);
      return;
    }
    const auto it = outgoing.find(node);
    if (it == outgoing.end()) return;
    for (int x : it->second) {
      path.push_back(x);
      walk(node | element_bit(x));
      path.pop_back();
    }
  };
  walk(0);
  std::sort(out.begin(), out.end());
  return out;
}

Poset poset_of_lattice(const DistributiveLattice& lattice) {
  const int n = lattice.size();
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= n; ++a) {
    Mask common = full_set(n);
    for (Mask node : lattice.nodes()) {
      if (contains(node, a)) common &= node;
    }
    for (int b : elements_of(common & ~element_bit(a))) pairs.emplace_back(a, b);
  }
  return Poset(n, pairs);
}

BigInt count_linear_extensions(const Poset& poset, std::optional<std::size_t> max_nodes) {
  return count_chains(lattice_of_poset(poset, max_nodes));
}

BigInt count_descent_class(int n, Mask descents) {
  if (n < 1) throw ValidationError("n must be positive");
  if (!is_subset(descents, full_set(n - 1))) {
    throw ValidationError("descent positions must lie in 1..n-1");
  }
  // beta(S) = sum over T subset S of (-1)^{|S - T|} alpha(T), where alpha(T)
  // is the multinomial of the composition of n cut at T.
  BigInt total = 0;
  Mask t = descents;
  while (true) {
    std::vector<int> parts;
    int last = 0;
    for (int cut : elements_of(t)) {
      parts.push_back(cut - last);
      last = cut;
    }
    parts.push_back(n - last);
    const BigInt alpha = multinomial(parts);
    if (cardinality(descents & ~t) % 2 == 0) {
      total += alpha;
    } else {
      total -= alpha;
    }
    if (t == 0) break;
    t = (t - 1) & descents;
  }
  return total;
}

LatticeFormat parse_lattice_format(std::string_view name) {
  if (name == "json") return LatticeFormat::kJson;
  if (name == "dot") return LatticeFormat::kDot;
  throw ParseError("unknown lattice format '" + std::string(name) + "' (json, dot)");
}

std::string export_lattice(const DistributiveLattice& lattice, LatticeFormat format) {
  if (format == LatticeFormat::kJson) {
    nlohmann::json nodes = nlohmann::json::array();
    for (Mask node : lattice.nodes()) nodes.push_back(set_json(node));
    nlohmann::json edges = nlohmann::json::array();
    for (const LatticeEdge& e : lattice.edges()) {
      edges.push_back(nlohmann::json::array({set_json(e.from), e.element}));
    }
    nlohmann::json doc = {{"n", lattice.size()}, {"nodes", nodes}, {"edges", edges}};
    return doc.dump() + "\n";
  }
  std::ostringstream out;
  std::map<Mask, std::size_t> id;
  out << "digraph lattice {\n  rankdir=BT;\n";
  for (Mask node : lattice.nodes()) {
    const std::size_t k = id.size();
    id.emplace(node, k);
    out << "  n" << k << " [label=\"" << format_set(node) << "\"];\n";
  }
  for (const LatticeEdge& e : lattice.edges()) {
    out << "  n" << id.at(e.from) << " -> n" << id.at(e.from | element_bit(e.element))
        << " [label=\"" << e.element << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

DistributiveLattice load_lattice_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("lattice JSON: ") + e.what());
  }
  try {
    const int n = doc.at("n").get<int>();
    if (n < 1 || n > kMaxGroundSet) throw ValidationError("lattice size out of range");
    auto read_set = [n](const nlohmann::json& j) {
      std::vector<int> elements = j.get<std::vector<int>>();
      for (int e : elements) {
        if (e < 1 || e > n) throw ValidationError("lattice element out of range");
      }
      return mask_of(elements);
    };
    std::vector<Mask> nodes;
    for (const auto& j : doc.at("nodes")) nodes.push_back(read_set(j));
    std::vector<LatticeEdge> edges;
    for (const auto& j : doc.at("edges")) {
      if (!j.is_array() || j.size() != 2) throw ParseError("lattice edge must be [set, element]");
      edges.push_back({read_set(j[0]), j[1].get<int>()});
    }
    return DistributiveLattice(n, std::move(nodes), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("lattice JSON: ") + e.what());
  }
}

}  // namespace ranktest
