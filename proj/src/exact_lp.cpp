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

#include "ranktest/exact_lp.hpp"

#include <optional>
#include <stdexcept>

namespace ranktest::lp {

namespace {

// Dense simplex tableau: rows are constraints in canonical form with respect
// to `basis`; the last column holds the right-hand side.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t columns)
      : columns_(columns), cells_(rows, std::vector<Rational>(columns + 1)), basis_(rows) {}

  std::size_t rows() const { return cells_.size(); }
  std::size_t columns() const { return columns_; }
  Rational& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return cells_[r][c]; }
  Rational& rhs(std::size_t r) { return cells_[r][columns_]; }
  const Rational& rhs(std::size_t r) const { return cells_[r][columns_]; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / cells_[row][col];
    for (Rational& v : cells_[row]) v *= inv;
    for (std::size_t r = 0; r < cells_.size(); ++r) {
      if (r == row || cells_[r][col] == 0) continue;
      const Rational factor = cells_[r][col];
      for (std::size_t c = 0; c <= columns_; ++c) {
        if (cells_[row][c] != 0) cells_[r][c] -= factor * cells_[row][c];
      }
    }
    basis_[row] = col;
  }

  void erase_row(std::size_t row) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational out = 0;
    for (std::size_t r = 0; r < rows(); ++r) out += cost[basis_[r]] * rhs(r);
    return out;
  }

 private:
  std::size_t columns_;
  std::vector<std::vector<Rational>> cells_;
  std::vector<std::size_t> basis_;
};

enum class RunResult { kOptimal, kUnbounded };

// Maximizes cost . y over the allowed columns using Bland's rule: the entering
// column is the lowest-indexed one with positive reduced cost, the leaving
// row the one with minimum ratio and, among ties, the lowest basic index.
RunResult run_simplex(Tableau& t, const std::vector<Rational>& cost,
                      const std::vector<bool>& allowed) {
  while (true) {
    std::optional<std::size_t> entering;
    for (std::size_t c = 0; c < t.columns() && !entering; ++c) {
      if (!allowed[c]) continue;
      Rational reduced = cost[c];
      for (std::size_t r = 0; r < t.rows(); ++r) {
        if (t.at(r, c) != 0) reduced -= cost[t.basis()[r]] * t.at(r, c);
      }
      if (reduced > 0) entering = c;
    }
    if (!entering) return RunResult::kOptimal;

    std::optional<std::size_t> leaving;
    Rational best_ratio;
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (t.at(r, *entering) <= 0) continue;
      const Rational ratio = t.rhs(r) / t.at(r, *entering);
      if (!leaving || ratio < best_ratio ||
          (ratio == best_ratio && t.basis()[r] < t.basis()[*leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (!leaving) return RunResult::kUnbounded;
    t.pivot(*leaving, *entering);
  }
}

}  // namespace

Solution maximize(const Problem& problem) {
  const std::size_t nv = problem.num_variables;
  if (problem.objective.size() != nv) throw std::invalid_argument("objective size mismatch");
  if (!problem.nonnegative.empty() && problem.nonnegative.size() != nv) {
    throw std::invalid_argument("sign restriction size mismatch");
  }
  for (const Constraint& c : problem.constraints) {
    if (c.coefficients.size() != nv) throw std::invalid_argument("constraint size mismatch");
  }

  // Column layout: [pos/neg pairs][slacks][artificials].
  const std::size_t m = problem.constraints.size();
  std::size_t num_slacks = 0;
  std::size_t num_artificials = 0;
  std::vector<Relation> relation(m);
  std::vector<bool> flip(m, false);
  for (std::size_t r = 0; r < m; ++r) {
    const Constraint& c = problem.constraints[r];
    relation[r] = c.relation;
    if (c.rhs < 0) {
      flip[r] = true;
      if (c.relation == Relation::kLessEqual) relation[r] = Relation::kGreaterEqual;
      if (c.relation == Relation::kGreaterEqual) relation[r] = Relation::kLessEqual;
    }
    if (relation[r] != Relation::kEqual) ++num_slacks;
    if (relation[r] != Relation::kLessEqual) ++num_artificials;
  }
  const std::size_t first_slack = 2 * nv;
  const std::size_t first_artificial = first_slack + num_slacks;
  const std::size_t columns = first_artificial + num_artificials;

  Tableau t(m, columns);
  std::size_t next_slack = first_slack;
  std::size_t next_artificial = first_artificial;
  for (std::size_t r = 0; r < m; ++r) {
    const Constraint& c = problem.constraints[r];
    const int sign = flip[r] ? -1 : 1;
    for (std::size_t v = 0; v < nv; ++v) {
      t.at(r, 2 * v) = sign * c.coefficients[v];
      t.at(r, 2 * v).canonicalize();
      t.at(r, 2 * v + 1) = -t.at(r, 2 * v);
    }
    t.rhs(r) = sign * c.rhs;
    t.rhs(r).canonicalize();
    switch (relation[r]) {
      case Relation::kLessEqual:
        t.at(r, next_slack) = 1;
        t.basis()[r] = next_slack++;
        break;
      case Relation::kGreaterEqual:
        t.at(r, next_slack++) = -1;
        t.at(r, next_artificial) = 1;
        t.basis()[r] = next_artificial++;
        break;
      case Relation::kEqual:
        t.at(r, next_artificial) = 1;
        t.basis()[r] = next_artificial++;
        break;
    }
  }

  std::vector<bool> allowed(columns, true);
  for (std::size_t v = 0; v < nv; ++v) {
    if (!problem.nonnegative.empty() && problem.nonnegative[v]) allowed[2 * v + 1] = false;
  }

  Solution out;
  if (num_artificials > 0) {
    std::vector<Rational> phase1(columns, 0);
    for (std::size_t c = first_artificial; c < columns; ++c) phase1[c] = -1;
    run_simplex(t, phase1, allowed);  // bounded above by zero
    if (t.objective(phase1) < 0) {
      out.status = Status::kInfeasible;
      return out;
    }
    // Pivot remaining zero-level artificials out of the basis, dropping rows
    // that turn out to be redundant.
    for (std::size_t r = t.rows(); r-- > 0;) {
      if (t.basis()[r] < first_artificial) continue;
      std::optional<std::size_t> col;
      for (std::size_t c = 0; c < first_artificial && !col; ++c) {
        if (allowed[c] && t.at(r, c) != 0) col = c;
      }
      if (col) {
        t.pivot(r, *col);
      } else {
        t.erase_row(r);
      }
    }
    for (std::size_t c = first_artificial; c < columns; ++c) allowed[c] = false;
  }

  std::vector<Rational> phase2(columns, 0);
  for (std::size_t v = 0; v < nv; ++v) {
    phase2[2 * v] = problem.objective[v];
    phase2[2 * v].canonicalize();
    phase2[2 * v + 1] = -phase2[2 * v];
  }
  if (run_simplex(t, phase2, allowed) == RunResult::kUnbounded) {
    out.status = Status::kUnbounded;
    return out;
  }

  out.status = Status::kOptimal;
  out.objective_value = t.objective(phase2);
  out.values.assign(nv, 0);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const std::size_t c = t.basis()[r];
    if (c >= first_slack) continue;
    if (c % 2 == 0) {
      out.values[c / 2] += t.rhs(r);
    } else {
      out.values[c / 2] -= t.rhs(r);
    }
  }
  out.basis = t.basis();
  return out;
}

Solution max_slack(const MaxSlackProblem& problem) {
  const std::size_t nv = problem.num_variables;
  Problem lp;
  lp.num_variables = nv + 1;
  lp.objective.assign(nv + 1, 0);
  lp.objective[nv] = 1;
  for (const auto& row : problem.equalities) {
    if (row.size() != nv) throw std::invalid_argument("equality row size mismatch");
    Constraint c{row, Relation::kEqual, 0};
    c.coefficients.push_back(0);
    lp.constraints.push_back(std::move(c));
  }
  for (const auto& row : problem.slack_rows) {
    if (row.size() != nv) throw std::invalid_argument("slack row size mismatch");
    Constraint c{row, Relation::kGreaterEqual, 0};
    c.coefficients.push_back(-1);
    lp.constraints.push_back(std::move(c));
  }
  Constraint cap{std::vector<Rational>(nv + 1, 0), Relation::kLessEqual, 1};
  cap.coefficients[nv] = 1;
  lp.constraints.push_back(std::move(cap));
  return maximize(lp);
}

}  // namespace ranktest::lp
