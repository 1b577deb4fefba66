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

#include "fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ranktest::fixtures {

namespace {

std::vector<CIStatement> with_size(int n, int k) {
  std::vector<CIStatement> out;
  for (const CIStatement& s : all_statements(n)) {
    if (cardinality(s.conditioning) == k) out.push_back(s);
  }
  return out;
}

std::vector<CIStatement> all_but(int n, int k, const std::vector<CIStatement>& dropped) {
  std::vector<CIStatement> out;
  for (const CIStatement& s : with_size(n, k)) {
    if (std::find(dropped.begin(), dropped.end(), s) == dropped.end()) out.push_back(s);
  }
  return out;
}

Semigraphoid join(std::initializer_list<std::vector<CIStatement>> parts) {
  std::vector<CIStatement> all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return Semigraphoid(4, std::move(all));
}

}  // namespace

CIStatement st(std::string_view text) {
  if (text.size() < 3 || text[2] != '|') throw std::invalid_argument("bad statement text");
  Mask k = 0;
  for (char c : text.substr(3)) k |= element_bit(c - '0');
  return CIStatement::make(text[0] - '0', text[1] - '0', k);
}

std::vector<CIStatement> sts(std::initializer_list<std::string_view> texts) {
  std::vector<CIStatement> out;
  for (std::string_view t : texts) out.push_back(st(t));
  return out;
}

Semigraphoid nonstructural_model() {
  return Semigraphoid(4, sts({"23|14", "14|23", "12|", "34|"}));
}

std::vector<Semigraphoid> maximal_semigraphoids_4() {
  return {
      join({with_size(4, 0), with_size(4, 1)}),
      join({with_size(4, 0), all_but(4, 1, sts({"23|1", "13|2", "12|3"})),
            sts({"34|12", "24|13", "14|23"})}),
      join({all_but(4, 0, sts({"12|"})), all_but(4, 1, sts({"12|3", "12|4"})),
            all_but(4, 2, sts({"12|34"}))}),
      join({with_size(4, 0), sts({"23|4", "24|3", "34|2"}), sts({"34|12", "24|13", "23|14"})}),
      join({with_size(4, 0), with_size(4, 2)}),
      join({all_but(4, 0, sts({"12|"})), sts({"23|1", "24|1", "13|2", "14|2"}),
            all_but(4, 2, sts({"34|12"}))}),
      join({sts({"34|"}), all_but(4, 1, sts({"23|4", "24|3", "14|3", "13|4"})),
            sts({"12|34"})}),
  };
}

std::vector<std::size_t> maximal_orbit_sizes_4() { return {2, 8, 6, 8, 1, 6, 6}; }

Semigraphoid random_semigraphoid(int n, std::mt19937& rng, int max_generators) {
  const std::vector<CIStatement> pool = all_statements(n);
  std::uniform_int_distribution<int> count(1, max_generators);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<CIStatement> gens;
  for (int k = count(rng); k > 0; --k) gens.push_back(pool[pick(rng)]);
  return Semigraphoid::closure_of(n, gens);
}

Graph random_graph(int n, std::mt19937& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::pair<int, int>> edges;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  return Graph(n, edges);
}

Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> d(n);
  std::iota(d.begin(), d.end(), 1);
  std::shuffle(d.begin(), d.end(), rng);
  return Permutation(std::move(d));
}

}  // namespace ranktest::fixtures
