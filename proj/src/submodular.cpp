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

#include "ranktest/submodular.hpp"

#include <map>
#include <string>

#include "ranktest/error.hpp"
#include "ranktest/exact_lp.hpp"

namespace ranktest {

namespace {

void require_submodular(const SetFunction& w) {
  if (!is_submodular(w)) throw ValidationError("set function is not submodular");
}

}  // namespace

SetFunction::SetFunction(int n) : n_(n) {
  if (n < 1 || n > kMaxSetFunctionN) {
    throw ValidationError("set function size must be between 1 and " +
                          std::to_string(kMaxSetFunctionN));
  }
  values_.assign(std::size_t{1} << n, 0);
}

SetFunction::SetFunction(int n, std::vector<Rational> values) : SetFunction(n) {
  if (values.size() != values_.size()) {
    throw ValidationError("set function needs 2^n values");
  }
  for (Rational& v : values) v.canonicalize();
  if (values[0] != 0) throw ValidationError("set function must vanish on the empty set");
  values_ = std::move(values);
}

SetFunction SetFunction::modular(std::span<const Rational> weights) {
  SetFunction out(static_cast<int>(weights.size()));
  for (Mask s = 1; s < out.values_.size(); ++s) {
    for (int a : elements_of(s)) out.values_[s] += weights[a - 1];
    out.values_[s].canonicalize();
  }
  return out;
}

void SetFunction::set(Mask subset, Rational value) {
  value.canonicalize();
  if (subset >= values_.size()) throw ValidationError("subset outside the ground set");
  if (subset == 0 && value != 0) {
    throw ValidationError("set function must vanish on the empty set");
  }
  values_[subset] = std::move(value);
}

SetFunction SetFunction::scaled(const Rational& factor) const {
  SetFunction out(*this);
  for (Rational& v : out.values_) v *= factor;
  return out;
}

SetFunction operator+(const SetFunction& a, const SetFunction& b) {
  if (a.n_ != b.n_) throw ValidationError("adding set functions on different ground sets");
  SetFunction out(a);
  for (std::size_t s = 0; s < out.values_.size(); ++s) out.values_[s] += b.values_[s];
  return out;
}

Rational ci_delta(const SetFunction& w, const CIStatement& s) {
  if (s.max_element() > w.size()) throw ValidationError("statement outside the ground set");
  const Mask k = s.conditioning;
  const Mask ki = k | element_bit(s.i);
  const Mask kj = k | element_bit(s.j);
  return w(ki) + w(kj) - w(k) - w(ki | kj);
}

bool is_submodular(const SetFunction& w) {
  return !find_submodularity_violation(w).has_value();
}

std::optional<std::pair<Mask, Mask>> find_submodularity_violation(const SetFunction& w) {
  for (const CIStatement& s : all_statements(w.size())) {
    if (ci_delta(w, s) < 0) {
      return std::make_pair(s.conditioning | element_bit(s.i),
                            s.conditioning | element_bit(s.j));
    }
  }
  return std::nullopt;
}

Semigraphoid induced_model(const SetFunction& w) {
  require_submodular(w);
  std::vector<CIStatement> tight;
  for (const CIStatement& s : all_statements(w.size())) {
    if (ci_delta(w, s) == 0) tight.push_back(s);
  }
  return Semigraphoid(w.size(), std::move(tight));
}

std::vector<Rational> greedy_vertex(const SetFunction& w, const Permutation& p) {
  require_submodular(w);
  if (p.size() != w.size()) throw ValidationError("permutation size does not match");
  std::vector<Rational> x(w.size());
  Mask prefix = 0;
  for (int k = 1; k <= p.size(); ++k) {
    const Mask next = prefix | element_bit(p.at(k));
    x[p.at(k) - 1] = w(next) - w(prefix);
    prefix = next;
  }
  return x;
}

std::optional<StructuralWitness> is_structural(const Semigraphoid& model) {
  const int n = model.size();
  if (n > kMaxSetFunctionN) throw GuardError("structurality test needs n <= 20");
  // Unknowns: w(S) for |S| >= 2; singletons and the empty set are pinned to
  // zero, which removes the lineality space.
  std::map<Mask, std::size_t> column;
  for (Mask s = 0; s <= full_set(n); ++s) {
    if (cardinality(s) >= 2) column.emplace(s, column.size());
  }
  auto add = [&](std::vector<Rational>& row, Mask s, int coefficient) {
    if (cardinality(s) >= 2) row[column.at(s)] += coefficient;
  };

  lp::MaxSlackProblem lp{column.size(), {}, {}};
  for (const CIStatement& s : all_statements(n)) {
    std::vector<Rational> row(column.size(), 0);
    const Mask k = s.conditioning;
    add(row, k | element_bit(s.i), 1);
    add(row, k | element_bit(s.j), 1);
    add(row, k, -1);
    add(row, k | element_bit(s.i) | element_bit(s.j), -1);
    if (model.contains(s)) {
      lp.equalities.push_back(std::move(row));
    } else {
      lp.slack_rows.push_back(std::move(row));
    }
  }

  const lp::Solution solution = lp::max_slack(lp);
  if (solution.status != lp::Status::kOptimal || solution.objective_value <= 0) {
    return std::nullopt;
  }
  SetFunction w(n);
  for (const auto& [s, c] : column) w.set(s, solution.values[c]);
  return StructuralWitness{std::move(w), solution.objective_value};
}

}  // namespace ranktest
