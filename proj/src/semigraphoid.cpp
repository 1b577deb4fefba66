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

#include "ranktest/semigraphoid.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

#include "ranktest/error.hpp"

namespace ranktest {

namespace {

std::vector<CIStatement> sorted_unique(std::span<const CIStatement> statements) {
  std::vector<CIStatement> out(statements.begin(), statements.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_ground_set(int n, std::span<const CIStatement> statements) {
  if (n < 1 || n > kMaxGroundSet) {
    throw ValidationError("ground set size must be between 1 and " +
                          std::to_string(kMaxGroundSet));
  }
  for (const CIStatement& s : statements) {
    if (s.i < 1 || s.i >= s.j || (s.conditioning & (element_bit(s.i) | element_bit(s.j))) != 0) {
      throw ValidationError("malformed CI statement " + s.to_string());
    }
    if (s.max_element() > n) {
      throw ValidationError("statement " + s.to_string() + " mentions an element outside [" +
                            std::to_string(n) + "]");
    }
  }
}

// Calls emit(conclusion) for every conclusion of an axiom instance in which
// `s` is one of the two premises and the other premise satisfies `has`.
template <typename Has, typename Emit>
void derive(int n, const CIStatement& s, const Has& has, Emit&& emit) {
  const int ends[2][2] = {{s.i, s.j}, {s.j, s.i}};
  for (const auto& end : ends) {
    const int i = end[0];
    const int other = end[1];
    // s = i _||_ j | K u l is the first premise; the second is i _||_ l | K.
    for (int l : elements_of(s.conditioning)) {
      const Mask k = s.conditioning & ~element_bit(l);
      if (has(CIStatement::make(i, l, k))) {
        emit(CIStatement::make(i, other, k));
        emit(CIStatement::make(i, l, k | element_bit(other)));
      }
    }
    // s = i _||_ l | K is the second premise; the first is i _||_ j | K u l.
    const int l = other;
    const Mask k = s.conditioning;
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == l || contains(k, j)) continue;
      if (has(CIStatement::make(i, j, k | element_bit(l)))) {
        emit(CIStatement::make(i, j, k));
        emit(CIStatement::make(i, l, k | element_bit(j)));
      }
    }
  }
}

}  // namespace

bool is_semigraphoid(int n, std::span<const CIStatement> statements) {
  check_ground_set(n, statements);
  const std::vector<CIStatement> sorted = sorted_unique(statements);
  auto has = [&](const CIStatement& t) {
    return std::binary_search(sorted.begin(), sorted.end(), t);
  };
  bool closed = true;
  for (const CIStatement& s : sorted) {
    derive(n, s, has, [&](const CIStatement& t) { closed = closed && has(t); });
    if (!closed) return false;
  }
  return true;
}

std::vector<CIStatement> sg_closure(int n, std::span<const CIStatement> statements) {
  check_ground_set(n, statements);
  std::set<CIStatement> closed(statements.begin(), statements.end());
  std::deque<CIStatement> work(closed.begin(), closed.end());
  auto has = [&](const CIStatement& t) { return closed.count(t) != 0; };
  while (!work.empty()) {
    const CIStatement s = work.front();
    work.pop_front();
    derive(n, s, has, [&](const CIStatement& t) {
      if (closed.insert(t).second) work.push_back(t);
    });
  }
  return {closed.begin(), closed.end()};
}

Semigraphoid::Semigraphoid(int n, std::vector<CIStatement> statements)
    : n_(n), statements_(sorted_unique(statements)) {
  if (!is_semigraphoid(n_, statements_)) {
    throw ValidationError("statement set is not closed under the semigraphoid axiom");
  }
}

Semigraphoid::Semigraphoid(int n, std::vector<CIStatement> sorted, Trusted)
    : n_(n), statements_(std::move(sorted)) {}

Semigraphoid Semigraphoid::closure_of(int n, std::span<const CIStatement> statements) {
  return Semigraphoid(n, sg_closure(n, statements), Trusted{});
}

Semigraphoid Semigraphoid::empty(int n) {
  check_ground_set(n, {});
  return Semigraphoid(n, {}, Trusted{});
}

Semigraphoid Semigraphoid::full(int n) {
  check_ground_set(n, {});
  return Semigraphoid(n, all_statements(n), Trusted{});
}

bool Semigraphoid::contains(const CIStatement& s) const {
  return std::binary_search(statements_.begin(), statements_.end(), s);
}

Semigraphoid Semigraphoid::dual() const {
  std::vector<CIStatement> out;
  out.reserve(statements_.size());
  for (const CIStatement& s : statements_) out.push_back(s.dual(n_));
  std::sort(out.begin(), out.end());
  return Semigraphoid(n_, std::move(out));
}

Semigraphoid Semigraphoid::relabeled(std::span<const int> sigma) const {
  std::vector<CIStatement> out;
  out.reserve(statements_.size());
  for (const CIStatement& s : statements_) {
    Mask k = 0;
    for (int e : elements_of(s.conditioning)) k |= element_bit(sigma[e - 1]);
    out.push_back(CIStatement::make(sigma[s.i - 1], sigma[s.j - 1], k));
  }
  std::sort(out.begin(), out.end());
  return Semigraphoid(n_, std::move(out), Trusted{});
}

std::vector<Permutation> class_of(const Semigraphoid& model, const Permutation& p,
                                  std::optional<std::size_t> max_size) {
  const int n = model.size();
  if (p.size() != n) throw ValidationError("permutation size does not match the model");
  if (!max_size && n > kMaxClassEnumerationN) {
    throw GuardError("class enumeration needs n <= " + std::to_string(kMaxClassEnumerationN) +
                     " or an explicit bound");
  }
  if (n > 20) throw GuardError("class enumeration needs n <= 20");
  std::unordered_set<std::uint64_t> seen{p.index()};
  std::vector<Permutation> members{p};
  for (std::size_t head = 0; head < members.size(); ++head) {
    const Permutation current = members[head];
    for (int k = 1; k < n; ++k) {
      if (!model.contains(current.edge_label(k))) continue;
      Permutation next = current.swapped(k);
      if (!seen.insert(next.index()).second) continue;
      members.push_back(std::move(next));
      if (max_size && members.size() > *max_size) {
        throw GuardError("class exceeds " + std::to_string(*max_size) + " permutations");
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

RankPartition all_classes(const Semigraphoid& model) {
  const int n = model.size();
  if (n > kMaxClassEnumerationN) {
    throw GuardError("all_classes needs n <= " + std::to_string(kMaxClassEnumerationN));
  }
  std::uint64_t total = 1;
  for (int k = 2; k <= n; ++k) total *= static_cast<std::uint64_t>(k);
  std::vector<bool> visited(total, false);
  RankPartition out{n, {}};
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (visited[idx]) continue;
    std::vector<Permutation> block = class_of(model, Permutation::from_index(n, idx));
    for (const Permutation& q : block) visited[q.index()] = true;
    out.blocks.push_back(std::move(block));
  }
  return out;
}

std::vector<Semigraphoid> enumerate_semigraphoids(int n) {
  if (n < 1 || n > 3) throw GuardError("enumerate_semigraphoids needs 1 <= n <= 3");
  const std::vector<CIStatement> ground = all_statements(n);
  std::vector<Semigraphoid> out;
  for (std::uint32_t pick = 0; pick < (1u << ground.size()); ++pick) {
    std::vector<CIStatement> subset;
    for (std::size_t t = 0; t < ground.size(); ++t) {
      if ((pick >> t) & 1u) subset.push_back(ground[t]);
    }
    if (is_semigraphoid(n, subset)) out.emplace_back(n, std::move(subset));
  }
  return out;
}

std::size_t count_orbits(std::span<const Semigraphoid> models, bool with_duality) {
  std::set<std::vector<CIStatement>> canonical;
  for (const Semigraphoid& m : models) {
    std::vector<int> sigma(m.size());
    std::iota(sigma.begin(), sigma.end(), 1);
    std::vector<CIStatement> best;
    bool first = true;
    do {
      const Semigraphoid image = m.relabeled(sigma);
      std::vector<std::vector<CIStatement>> candidates{
          {image.statements().begin(), image.statements().end()}};
      if (with_duality) {
        const Semigraphoid d = image.dual();
        candidates.emplace_back(d.statements().begin(), d.statements().end());
      }
      for (auto& c : candidates) {
        if (first || c < best) {
          best = std::move(c);
          first = false;
        }
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    canonical.insert(std::move(best));
  }
  return canonical.size();
}

Semigraphoid updown_model(int n) {
  std::vector<CIStatement> out;
  for (const CIStatement& s : all_statements(n)) {
    if (s.j - s.i >= 2) out.push_back(s);
  }
  return Semigraphoid(n, std::move(out));
}

bool satisfies_square_hexagon(int n, const EdgeSet& edges) {
  if (n < 1 || n > 8) throw GuardError("square/hexagon check needs 1 <= n <= 8");
  auto present = [&](const Permutation& p, int k) {
    const Permutation q = p.swapped(k);
    return edges(p < q ? p : q, k);
  };
  for (const Permutation& p : all_permutations(n)) {
    // Squares: commuting swaps at positions k and m >= k + 2.
    for (int k = 1; k < n; ++k) {
      for (int m = k + 2; m < n; ++m) {
        if (present(p, k) != present(p.swapped(m), k)) return false;
        if (present(p, m) != present(p.swapped(k), m)) return false;
      }
    }
    // Hexagons: alternate swaps at k and k + 1.
    for (int k = 1; k + 1 < n; ++k) {
      std::vector<Permutation> v{p};
      std::vector<int> pos;
      for (int t = 0; t < 6; ++t) {
        const int swap_at = (t % 2 == 0) ? k : k + 1;
        pos.push_back(swap_at);
        v.push_back(v.back().swapped(swap_at));
      }
      bool in[6];
      for (int t = 0; t < 6; ++t) in[t] = present(v[t], pos[t]);
      for (int t = 0; t < 6; ++t) {
        if (in[t] && in[(t + 1) % 6] && !(in[(t + 3) % 6] && in[(t + 4) % 6])) return false;
      }
    }
  }
  return true;
}

EdgeSet labeled_edges(std::span<const CIStatement> statements) {
  auto sorted = std::make_shared<std::vector<CIStatement>>(sorted_unique(statements));
  return [sorted](const Permutation& p, int k) {
    return std::binary_search(sorted->begin(), sorted->end(), p.edge_label(k));
  };
}

}  // namespace ranktest
