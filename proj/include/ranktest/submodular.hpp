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

#ifndef RANKTEST_SUBMODULAR_HPP_
#define RANKTEST_SUBMODULAR_HPP_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ranktest/ci_statement.hpp"
#include "ranktest/numeric.hpp"
#include "ranktest/permutation.hpp"
#include "ranktest/semigraphoid.hpp"
#include "ranktest/subset.hpp"

namespace ranktest {

inline constexpr int kMaxSetFunctionN = 20;

/// Exact-rational function on all subsets of [n] with w(empty) = 0.
class SetFunction {
 public:
  /// The zero function. Throws ValidationError unless 1 <= n <= 20.
  explicit SetFunction(int n);

  /// `values` is indexed by subset mask and has 2^n entries; values[0] must
  /// be zero.
  SetFunction(int n, std::vector<Rational> values);

  /// w(I) = sum of weights[a - 1] over a in I.
  static SetFunction modular(std::span<const Rational> weights);

  int size() const { return n_; }
  const Rational& operator()(Mask subset) const { return values_[subset]; }

  /// Throws ValidationError when setting a nonzero value on the empty set.
  void set(Mask subset, Rational value);

  std::span<const Rational> values() const { return values_; }

  SetFunction scaled(const Rational& factor) const;

  friend SetFunction operator+(const SetFunction& a, const SetFunction& b);
  friend bool operator==(const SetFunction&, const SetFunction&) = default;

 private:
  int n_;
  std::vector<Rational> values_;
};

/// w(K u i) + w(K u j) - w(K) - w(K u ij).
Rational ci_delta(const SetFunction& w, const CIStatement& s);

/// ci_delta >= 0 on all of T_n, which is equivalent to the pairwise
/// definition w(I) + w(J) >= w(I n J) + w(I u J).
bool is_submodular(const SetFunction& w);

/// A pair (I, J) with w(I) + w(J) < w(I n J) + w(I u J), if any.
std::optional<std::pair<Mask, Mask>> find_submodularity_violation(
    const SetFunction& w);

/// Statements whose elementary inequality is tight. Throws ValidationError if
/// w is not submodular.
Semigraphoid induced_model(const SetFunction& w);

/// Vertex of Q_w maximizing u . x for data u with descent vector p:
/// x_{d_k} = w({d_1..d_k}) - w({d_1..d_{k-1}}). Indexed by element - 1.
/// Throws ValidationError if w is not submodular.
std::vector<Rational> greedy_vertex(const SetFunction& w, const Permutation& p);

/// A submodular function realizing a model: zero on the model's statements,
/// at least `slack` > 0 on every other statement.
struct StructuralWitness {
  SetFunction weight;
  Rational slack;
};

/// Solves max t s.t. delta_s(w) = 0 on the model, delta_s(w) >= t off it,
/// t <= 1, with w(empty) = w({a}) = 0. Returns a witness iff the optimum is
/// positive.
std::optional<StructuralWitness> is_structural(const Semigraphoid& model);

}  // namespace ranktest

#endif  // RANKTEST_SUBMODULAR_HPP_
