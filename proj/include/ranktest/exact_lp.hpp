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

// Dense two-phase simplex over exact rationals with Bland's rule. Meant for
// the small systems arising from structurality tests (tens of variables).

#ifndef RANKTEST_EXACT_LP_HPP_
#define RANKTEST_EXACT_LP_HPP_

#include <cstddef>
#include <vector>

#include "ranktest/numeric.hpp"

namespace ranktest::lp {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

struct Problem {
  std::size_t num_variables = 0;
  std::vector<Rational> objective;  // maximized
  std::vector<Constraint> constraints;
  // Per-variable sign restriction; empty means every variable is free.
  std::vector<bool> nonnegative;
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Solution {
  Status status = Status::kInfeasible;
  Rational objective_value;
  std::vector<Rational> values;
  // Basic columns of the final tableau. Column c < 2 * num_variables encodes
  // the positive (even) or negative (odd) part of variable c / 2; higher
  // columns are slacks in constraint order.
  std::vector<std::size_t> basis;
};

/// Throws std::invalid_argument on dimension mismatches.
Solution maximize(const Problem& problem);

/// max t  s.t.  E x = 0,  S x >= t (row-wise),  t <= 1,  x free.
/// Always feasible (x = 0, t = 0), so the status is kOptimal and the
/// optimum lies in [0, 1]. `values` holds x followed by t.
struct MaxSlackProblem {
  std::size_t num_variables = 0;
  std::vector<std::vector<Rational>> equalities;
  std::vector<std::vector<Rational>> slack_rows;
};

Solution max_slack(const MaxSlackProblem& problem);

}  // namespace ranktest::lp

#endif  // RANKTEST_EXACT_LP_HPP_
