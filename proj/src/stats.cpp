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

#include "ranktest/stats.hpp"

#include <string>
#include <type_traits>

#include "ranktest/error.hpp"
#include "ranktest/lattice.hpp"

namespace ranktest {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr int kMaxSweepN = 10;
constexpr int kMaxUpdownCheckN = 12;
constexpr std::size_t kMaxGTrees = 5'000'000;

template <class T>
std::string tuple_text(const std::vector<T>& values) {
  std::string out = "(";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out += ',';
    if constexpr (std::is_same_v<T, Rational>) {
      out += to_string(values[k]);
    } else {
      out += std::to_string(values[k]);
    }
  }
  return out + ")";
}

// Index of the poset having p as a linear extension.
std::size_t poset_index(const PosetList& list, const Permutation& p) {
  for (std::size_t k = 0; k < list.posets.size(); ++k) {
    if (list.posets[k].is_linear_extension(p)) return k;
  }
  throw ValidationError("permutation " + p.to_string() + " extends none of the posets");
}

bool is_updown(const Semigraphoid& model) {
  return model.size() <= kMaxUpdownCheckN && model == updown_model(model.size());
}

std::string updown_text(const Permutation& p) {
  const std::vector<int> rho = p.rank_vector();
  std::string out = "(";
  for (std::size_t k = 0; k + 1 < rho.size(); ++k) {
    if (k > 0) out += ',';
    out += rho[k + 1] > rho[k] ? '+' : '-';
  }
  return out + ")";
}

std::string hasse_text(const Poset& poset) {
  std::string out = "{";
  for (auto [a, b] : poset.cover_relations()) {
    if (out.size() > 1) out += ',';
    out += std::to_string(a) + "<" + std::to_string(b);
  }
  return out + "}";
}

void check_size(const RankTest& test, const Permutation& p) {
  if (p.size() != test_size(test)) {
    throw ValidationError("permutation of size " + std::to_string(p.size()) +
                          " for a test on " + std::to_string(test_size(test)) + " elements");
  }
}

void require_sweepable(int n) {
  if (n > kMaxSweepN) {
    throw GuardError("sweeping S_n needs n <= " + std::to_string(kMaxSweepN));
  }
}

void insert_class(ClassTable& table, std::string key, BigInt size) {
  if (!table.sizes.emplace(std::move(key), std::move(size)).second) {
    throw std::logic_error("two classes share a signature");
  }
}

ClassTable brute_force_table(const RankTest& test) {
  const int n = test_size(test);
  require_sweepable(n);
  ClassTable table{n, {}};
  const Semigraphoid* model = std::get_if<Semigraphoid>(&test);
  if (model != nullptr && !is_updown(*model)) {
    // Class posets come from lattices; group by edge connectivity instead.
    for (const auto& block : all_classes(*model).blocks) {
      insert_class(table, signature(test, block.front()).value, block.size());
    }
    return table;
  }
  const std::uint64_t total = factorial(n).get_ui();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    ++table.sizes[signature(test, Permutation::from_index(n, idx)).value];
  }
  return table;
}

ClassTable poset_list_table(const PosetList& list) {
  ClassTable table{list.n, {}};
  for (std::size_t k = 0; k < list.posets.size(); ++k) {
    insert_class(table, "P" + std::to_string(k + 1), count_linear_extensions(list.posets[k]));
  }
  return table;
}

ClassTable lattice_table(const RankTest& test) {
  if (const auto* list = std::get_if<PosetList>(&test)) return poset_list_table(*list);
  const Semigraphoid model = *test_model(test);
  const int n = model.size();
  require_sweepable(n);
  ClassTable table{n, {}};
  const std::uint64_t total = factorial(n).get_ui();
  std::vector<bool> visited(total, false);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (visited[idx]) continue;
    const Permutation p = Permutation::from_index(n, idx);
    const DistributiveLattice lattice = build_lattice(p, model);
    BigInt size = count_chains(lattice);
    for (const Permutation& q : maximal_chains(lattice, size.get_ui())) visited[q.index()] = true;
    insert_class(table, signature(test, p).value, std::move(size));
  }
  return table;
}

ClassTable gtree_table(const RankTest& test) {
  const Graph* graph = std::get_if<Graph>(&test);
  if (graph == nullptr) throw ValidationError("the G-tree backend applies to graph tests only");
  ClassTable table{graph->size(), {}};
  for (const GTree& tree : enumerate_gtrees(*graph, kMaxGTrees)) {
    insert_class(table, signature(test, tree.representative()).value, tree.class_size());
  }
  return table;
}

}  // namespace

std::string_view test_kind(const RankTest& test) {
  return std::visit(Overloaded{
                        [](const PosetList&) { return std::string_view("posets"); },
                        [](const Semigraphoid&) { return std::string_view("semigraphoid"); },
                        [](const SetFunction&) { return std::string_view("submodular"); },
                        [](const SetFamily&) { return std::string_view("mss"); },
                        [](const Graph&) { return std::string_view("graph"); },
                    },
                    test);
}

int test_size(const RankTest& test) {
  return std::visit(Overloaded{
                        [](const PosetList& t) { return t.n; },
                        [](const auto& t) { return t.size(); },
                    },
                    test);
}

std::optional<std::string> poset_list_problem(const PosetList& list) {
  require_sweepable(list.n);
  if (list.n < 1) return "n must be positive";
  for (std::size_t k = 0; k < list.posets.size(); ++k) {
    if (list.posets[k].size() != list.n) {
      return "poset " + std::to_string(k + 1) + " has the wrong ground set";
    }
  }
  const std::uint64_t total = factorial(list.n).get_ui();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const Permutation p = Permutation::from_index(list.n, idx);
    int owners = 0;
    for (std::size_t k = 0; k < list.posets.size(); ++k) {
      owners += list.posets[k].is_linear_extension(p);
    }
    if (owners == 0) return "permutation " + p.to_string() + " extends none of the posets";
    if (owners > 1) return "permutation " + p.to_string() + " extends several posets";
  }
  return std::nullopt;
}

std::optional<Semigraphoid> test_model(const RankTest& test) {
  return std::visit(Overloaded{
                        [](const PosetList&) -> std::optional<Semigraphoid> { return std::nullopt; },
                        [](const Semigraphoid& m) -> std::optional<Semigraphoid> { return m; },
                        [](const SetFunction& w) -> std::optional<Semigraphoid> {
                          return induced_model(w);
                        },
                        [](const SetFamily& f) -> std::optional<Semigraphoid> {
                          return mss_model(f);
                        },
                        [](const Graph& g) -> std::optional<Semigraphoid> {
                          return tubing_model(g);
                        },
                    },
                    test);
}

Signature signature(const RankTest& test, const Permutation& p) {
  check_size(test, p);
  return std::visit(
      Overloaded{
          [&](const PosetList& list) {
            return Signature{"poset_index", "P" + std::to_string(poset_index(list, p) + 1)};
          },
          [&](const Semigraphoid& model) {
            if (is_updown(model)) return Signature{"updown", updown_text(p)};
            return Signature{"class_poset",
                             hasse_text(poset_of_lattice(build_lattice(p, model)))};
          },
          [&](const SetFunction& w) {
            return Signature{"greedy_vertex", tuple_text(greedy_vertex(w, p))};
          },
          [&](const SetFamily& f) { return Signature{"mss", tuple_text(mss_signature(f, p))}; },
          [&](const Graph& g) {
            return Signature{"tubing", tuple_text(tubing_signature(g, p).heights)};
          },
      },
      test);
}

BigInt class_size(const RankTest& test, const Permutation& p) {
  check_size(test, p);
  if (const auto* graph = std::get_if<Graph>(&test)) return count_class(*graph, p);
  if (const auto* list = std::get_if<PosetList>(&test)) {
    return count_linear_extensions(list->posets[poset_index(*list, p)]);
  }
  return count_chains(build_lattice(p, *test_model(test)));
}

BigInt ClassTable::total() const {
  BigInt sum = 0;
  for (const auto& [key, size] : sizes) sum += size;
  return sum;
}

ClassTable class_sizes(const RankTest& test, Backend backend) {
  switch (backend) {
    case Backend::kAuto:
      return std::holds_alternative<Graph>(test) ? gtree_table(test) : lattice_table(test);
    case Backend::kBruteForce:
      return brute_force_table(test);
    case Backend::kLattice:
      return lattice_table(test);
    case Backend::kGTree:
      return gtree_table(test);
  }
  throw std::logic_error("unknown backend");
}

Rational p_value(const ClassTable& table, const BigInt& size) {
  BigInt mass = 0;
  for (const auto& [key, s] : table.sizes) {
    if (s <= size) mass += s;
  }
  Rational p(mass, factorial(table.n));
  p.canonicalize();
  return p;
}

Rational p_value(const RankTest& test, const Permutation& p) {
  return p_value(class_sizes(test), class_size(test, p));
}

}  // namespace ranktest
