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

#include "ranktest/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ranktest/error.hpp"

namespace ranktest {

namespace {

void require_bijection(std::span<const int> values, const char* what) {
  const int n = static_cast<int>(values.size());
  if (n < 1 || n > kMaxGroundSet) {
    throw ValidationError(std::string(what) + " must have between 1 and " +
                          std::to_string(kMaxGroundSet) + " entries");
  }
  std::vector<bool> seen(n + 1, false);
  for (int v : values) {
    if (v < 1 || v > n || seen[v]) {
      throw ValidationError(std::string(what) + " is not a bijection on [" +
                            std::to_string(n) + "]");
    }
    seen[v] = true;
  }
}

void check_position(int k, int n) {
  if (k < 1 || k > n - 1) {
    throw std::out_of_range("edge position " + std::to_string(k) + " outside 1.." +
                            std::to_string(n - 1));
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> descent) : descent_(std::move(descent)) {
  require_bijection(descent_, "descent vector");
}

Permutation Permutation::identity(int n) {
  std::vector<int> d(n);
  std::iota(d.begin(), d.end(), 1);
  return Permutation(std::move(d));
}

Permutation Permutation::from_rank_vector(std::span<const int> ranks) {
  require_bijection(ranks, "rank vector");
  const int n = static_cast<int>(ranks.size());
  std::vector<int> d(n);
  // Rank n is the largest value, which comes first in the descent vector.
  for (int pos = 1; pos <= n; ++pos) d[n - ranks[pos - 1]] = pos;
  return Permutation(std::move(d));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> d;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = text.find('|', start);
    std::string_view token = text.substr(start, bar == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : bar - start);
    while (!token.empty() && (token.front() == ' ' || token.front() == '(')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == ' ' || token.back() == ')')) token.remove_suffix(1);
    if (token.empty() || token.size() > 3 ||
        !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError("invalid descent vector '" + std::string(text) + "'");
    }
    d.push_back(std::stoi(std::string(token)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  try {
    return Permutation(std::move(d));
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

Permutation Permutation::from_index(int n, std::uint64_t index) {
  if (n < 1 || n > 20) throw std::out_of_range("permutation index needs 1 <= n <= 20");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<std::uint64_t> fact(n + 1, 1);
  for (int k = 1; k <= n; ++k) fact[k] = fact[k - 1] * k;
  if (index >= fact[n]) throw std::out_of_range("permutation index too large");
  std::vector<int> d;
  d.reserve(n);
  for (int k = n; k >= 1; --k) {
    const std::uint64_t q = index / fact[k - 1];
    index %= fact[k - 1];
    d.push_back(pool[q]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(q));
  }
  return Permutation(std::move(d));
}

std::vector<int> Permutation::rank_vector() const {
  const int n = size();
  std::vector<int> rho(n);
  for (int k = 1; k <= n; ++k) rho[at(k) - 1] = n - k + 1;
  return rho;
}

std::vector<std::pair<int, int>> Permutation::order_pairs() const {
  const std::vector<int> rho = rank_vector();
  std::vector<std::pair<int, int>> out;
  const int n = size();
  out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (rho[i - 1] < rho[j - 1]) out.emplace_back(i, j);
    }
  }
  return out;
}

CIStatement Permutation::edge_label(int k) const {
  check_position(k, size());
  return CIStatement::make(at(k), at(k + 1), prefix(k - 1));
}

Permutation Permutation::swapped(int k) const {
  check_position(k, size());
  Permutation out = *this;
  std::swap(out.descent_[k - 1], out.descent_[k]);
  return out;
}

std::vector<Permutation> Permutation::neighbors() const {
  std::vector<Permutation> out;
  out.reserve(size() - 1);
  for (int k = 1; k < size(); ++k) out.push_back(swapped(k));
  return out;
}

Mask Permutation::prefix(int k) const {
  Mask out = 0;
  for (int m = 1; m <= k; ++m) out |= element_bit(at(m));
  return out;
}

Mask Permutation::descent_set() const {
  const std::vector<int> rho = rank_vector();
  Mask out = 0;
  for (int i = 1; i < size(); ++i) {
    if (rho[i - 1] > rho[i]) out |= element_bit(i);
  }
  return out;
}

std::uint64_t Permutation::index() const {
  const int n = size();
  if (n > 20) throw std::out_of_range("permutation index needs n <= 20");
  std::uint64_t out = 0;
  Mask used = 0;
  for (int k = 1; k <= n; ++k) {
    const int v = at(k);
    // Number of unused values smaller than v.
    const int smaller = (v - 1) - cardinality(used & full_set(v - 1));
    out = out * static_cast<std::uint64_t>(n - k + 1) + static_cast<std::uint64_t>(smaller);
    used |= element_bit(v);
  }
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  for (int k = 1; k <= size(); ++k) {
    if (k > 1) out += '|';
    out += std::to_string(at(k));
  }
  return out;
}

Permutation permutation_from_data(std::span<const double> data, TiePolicy policy) {
  const int n = static_cast<int>(data.size());
  if (n < 1) throw ValidationError("empty data vector");
  std::vector<int> d(n);
  std::iota(d.begin(), d.end(), 1);
  // Stable sort keeps the lower index first among equal values.
  std::stable_sort(d.begin(), d.end(),
                   [&](int a, int b) { return data[a - 1] > data[b - 1]; });
  if (policy == TiePolicy::kReject) {
    for (int k = 1; k < n; ++k) {
      if (data[d[k - 1] - 1] == data[d[k] - 1]) {
        throw TiesError("data coordinates " + std::to_string(std::min(d[k - 1], d[k])) +
                        " and " + std::to_string(std::max(d[k - 1], d[k])) + " are tied");
      }
    }
  }
  return Permutation(std::move(d));
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1 || n > 12) throw std::out_of_range("all_permutations needs 1 <= n <= 12");
  std::vector<int> d(n);
  std::iota(d.begin(), d.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(d);
  } while (std::next_permutation(d.begin(), d.end()));
  return out;
}

}  // namespace ranktest
