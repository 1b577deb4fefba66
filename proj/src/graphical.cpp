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

#include "ranktest/graphical.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "ranktest/error.hpp"

namespace ranktest {

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : n_(n) {
  if (n < 1 || n > kMaxGroundSet) throw ValidationError("graph size out of range");
  adjacency_.assign(n, 0);
  for (auto [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw ValidationError("edge endpoint outside [" + std::to_string(n) + "]");
    }
    if (a == b) throw ValidationError("loop at vertex " + std::to_string(a));
    adjacency_[a - 1] |= element_bit(b);
    adjacency_[b - 1] |= element_bit(a);
  }
}

Graph Graph::path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int k = 1; k < n; ++k) edges.emplace_back(k, k + 1);
  return Graph(n, edges);
}

Graph Graph::cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int k = 1; k < n; ++k) edges.emplace_back(k, k + 1);
  if (n >= 3) edges.emplace_back(n, 1);
  return Graph(n, edges);
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) edges.emplace_back(a, b);
  }
  return Graph(n, edges);
}

Graph Graph::edgeless(int n) { return Graph(n, std::span<const std::pair<int, int>>{}); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n_; ++a) {
    for (int b : elements_of(adjacency_[a - 1])) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

Mask Graph::reachable(int start, Mask allowed) const {
  Mask seen = element_bit(start);
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (int v : elements_of(frontier)) next |= adjacency_[v - 1];
    frontier = next & allowed & ~seen;
    seen |= frontier;
  }
  return seen;
}

bool Graph::is_connected_within(Mask vertices) const {
  if (vertices == 0) return false;
  return reachable(std::countr_zero(vertices) + 1, vertices) == vertices;
}

std::vector<Mask> Graph::components(Mask vertices) const {
  std::vector<Mask> out;
  while (vertices != 0) {
    const Mask c = reachable(std::countr_zero(vertices) + 1, vertices);
    out.push_back(c);
    vertices &= ~c;
  }
  return out;
}

SetFamily connected_subsets(const Graph& graph) {
  if (graph.size() > 20) throw GuardError("connected_subsets enumerates 2^n subsets; n <= 20");
  std::vector<Mask> sets;
  for (Mask s = 1; s <= full_set(graph.size()); ++s) {
    if (graph.is_connected_within(s)) sets.push_back(s);
  }
  std::sort(sets.begin(), sets.end(), cardinality_lex_less);
  return SetFamily(graph.size(), std::move(sets));
}

Semigraphoid graphical_model(const Graph& graph) {
  const Mask all = full_set(graph.size());
  std::vector<CIStatement> kept;
  for (const CIStatement& s : all_statements(graph.size())) {
    if (!contains(graph.reachable(s.i, all & ~s.conditioning), s.j)) kept.push_back(s);
  }
  return Semigraphoid(graph.size(), std::move(kept));
}

Semigraphoid tubing_model(const Graph& graph) {
  std::vector<CIStatement> kept;
  for (const CIStatement& s : all_statements(graph.size())) {
    const Mask allowed = s.conditioning | element_bit(s.i) | element_bit(s.j);
    if (!contains(graph.reachable(s.i, allowed), s.j)) kept.push_back(s);
  }
  return Semigraphoid(graph.size(), std::move(kept));
}

bool are_compatible(Mask a, Mask b, const Graph& graph) {
  if (is_subset(a, b) || is_subset(b, a)) return true;
  if ((a & b) != 0) return false;
  for (int v : elements_of(a)) {
    if ((graph.neighbors(v) & b) != 0) return false;
  }
  return true;
}

bool is_tubing(std::span<const Mask> tubes, const Graph& graph) {
  const std::vector<Mask> components = graph.components(full_set(graph.size()));
  for (std::size_t x = 0; x < tubes.size(); ++x) {
    if (!graph.is_connected_within(tubes[x]) ||
        std::find(components.begin(), components.end(), tubes[x]) != components.end()) {
      return false;
    }
    for (std::size_t y = x + 1; y < tubes.size(); ++y) {
      if (tubes[x] == tubes[y] || !are_compatible(tubes[x], tubes[y], graph)) return false;
    }
  }
  return true;
}

TubingSignature tubing_signature(const Graph& graph, const Permutation& p) {
  if (p.size() != graph.size()) throw ValidationError("permutation size does not match graph");
  TubingSignature sig;
  sig.heights.assign(graph.size(), 0);
  // Whole components are not tubes; the rest are the n - c proper tubes.
  const std::vector<Mask> components = graph.components(full_set(graph.size()));
  for (int k = 1; k < p.size(); ++k) {
    const Mask tube = graph.reachable(p.at(k), p.prefix(k));
    if (std::find(components.begin(), components.end(), tube) != components.end()) continue;
    sig.tubes.push_back(tube);
    for (int v : elements_of(tube)) ++sig.heights[v - 1];
  }
  std::sort(sig.tubes.begin(), sig.tubes.end(), cardinality_lex_less);
  return sig;
}

std::vector<int> GTree::roots() const {
  std::vector<int> out;
  for (int v = 1; v <= n; ++v) {
    if (parent[v - 1] == 0) out.push_back(v);
  }
  return out;
}

std::vector<int> GTree::children(int v) const {
  std::vector<int> out;
  for (int c = 1; c <= n; ++c) {
    if (parent[c - 1] == v) out.push_back(c);
  }
  return out;
}

Poset GTree::as_poset() const {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v <= n; ++v) {
    if (parent[v - 1] != 0) pairs.emplace_back(parent[v - 1], v);
  }
  return Poset(n, pairs);
}

namespace {

struct Subtree {
  int size = 0;
  BigInt extensions;
};

Subtree forest_extensions(const GTree& tree, std::span<const int> tops) {
  std::vector<int> sizes;
  BigInt product = 1;
  for (int v : tops) {
    const std::vector<int> kids = tree.children(v);
    Subtree sub = forest_extensions(tree, kids);
    sizes.push_back(sub.size + 1);
    product *= sub.extensions;
  }
  Subtree out;
  for (int s : sizes) out.size += s;
  out.extensions = multinomial(sizes) * product;
  return out;
}

}  // namespace

BigInt GTree::class_size() const {
  const std::vector<int> tops = roots();
  return forest_extensions(*this, tops).extensions;
}

Permutation GTree::representative() const {
  // Post-order puts every descendant (larger value) ahead of its ancestors.
  std::vector<int> order;
  std::function<void(int)> visit = [&](int v) {
    for (int c : children(v)) visit(c);
    order.push_back(v);
  };
  for (int r : roots()) visit(r);
  return Permutation(std::move(order));
}

std::string GTree::to_string() const {
  std::function<std::string(int)> render = [&](int v) {
    std::string out = std::to_string(v);
    const std::vector<int> kids = children(v);
    if (!kids.empty()) {
      out += '(';
      for (std::size_t k = 0; k < kids.size(); ++k) {
        if (k > 0) out += ',';
        out += render(kids[k]);
      }
      out += ')';
    }
    return out;
  };
  std::string out;
  for (int r : roots()) {
    if (!out.empty()) out += ',';
    out += render(r);
  }
  return out;
}

GTree g_tree(const Graph& graph, const Permutation& p) {
  if (p.size() != graph.size()) throw ValidationError("permutation size does not match graph");
  GTree tree{graph.size(), std::vector<int>(graph.size(), 0)};
  // root[v - 1]: current root of the processed component holding v.
  std::vector<int> root(graph.size(), 0);
  Mask processed = 0;
  for (int k = 1; k <= p.size(); ++k) {
    const int v = p.at(k);
    for (int u : elements_of(graph.neighbors(v) & processed)) {
      if (root[u - 1] != v) tree.parent[root[u - 1] - 1] = v;
      for (int w : elements_of(graph.reachable(u, processed))) root[w - 1] = v;
    }
    processed |= element_bit(v);
    root[v - 1] = v;
  }
  return tree;
}

BigInt count_class(const Graph& graph, const Permutation& p) {
  if (p.size() != graph.size()) throw ValidationError("permutation size does not match graph");
  const int n = graph.size();
  std::vector<Mask> enclosing(n, 0);
  BigInt c = 1;
  for (int k = 1; k <= n; ++k) {
    const int v = p.at(k);
    Mask merged = element_bit(v);
    std::vector<int> lengths;
    for (int u : elements_of(graph.neighbors(v))) {
      if (enclosing[u - 1] != 0 && !contains(merged, u)) {
        merged |= enclosing[u - 1];
        lengths.push_back(cardinality(enclosing[u - 1]));
      }
    }
    c *= multinomial(lengths);
    for (int u : elements_of(merged)) enclosing[u - 1] = merged;
  }
  // Components of a disconnected graph interleave freely.
  std::vector<int> sizes;
  for (Mask comp : graph.components(full_set(n))) sizes.push_back(cardinality(comp));
  return c * multinomial(sizes);
}

std::vector<GTree> enumerate_gtrees(const Graph& graph, std::optional<std::size_t> max_trees) {
  struct Pending {
    Mask component;
    int parent;
  };
  std::vector<GTree> out;
  GTree current{graph.size(), std::vector<int>(graph.size(), 0)};

  std::function<void(std::vector<Pending>)> expand = [&](std::vector<Pending> pending) {
    if (pending.empty()) {
      if (max_trees && out.size() >= *max_trees) {
        throw GuardError("more than " + std::to_string(*max_trees) + " G-trees");
      }
      out.push_back(current);
      return;
    }
    const Pending head = pending.front();
    for (int r : elements_of(head.component)) {
      current.parent[r - 1] = head.parent;
      std::vector<Pending> next(pending.begin() + 1, pending.end());
      for (Mask c : graph.components(head.component & ~element_bit(r))) {
        next.push_back({c, r});
      }
      expand(std::move(next));
    }
  };

  std::vector<Pending> start;
  for (Mask c : graph.components(full_set(graph.size()))) start.push_back({c, 0});
  expand(std::move(start));
  return out;
}

}  // namespace ranktest
