// Copyright 2026 The Dominia Authors
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

#ifndef DOMINIA_EXACT_LP_H_
#define DOMINIA_EXACT_LP_H_

#include <cstdint>
#include <vector>

#include "dominia/rational.h"

namespace dominia {

enum class ConstraintOp { kLe, kEq, kGe };

struct LinearConstraint {
  std::vector<Rational> coefficients;
  ConstraintOp op = ConstraintOp::kLe;
  Rational rhs;
};

enum class Sense { kMax, kMin };

struct LpProblem {
  int num_variables = 0;
  std::vector<LinearConstraint> constraints;
  std::vector<Rational> objective;  // empty means all zero
  Sense sense = Sense::kMax;
  std::vector<bool> nonneg;         // empty means all non-negative
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> point;

  bool optimal() const { return status == LpStatus::kOptimal; }
};

// Exact two-phase simplex with Bland's rule. Free variables are split into
// a difference of two non-negative ones. The optimal point is checked
// against every constraint before it is returned.
// Errors: kDimensionMismatch.
LpOutcome solve(const LpProblem& p);

// Phase one only: Optimal with value 0 and some feasible point, or
// Infeasible.
LpOutcome feasible_point(const std::vector<LinearConstraint>& constraints,
                         int num_variables, const std::vector<bool>& nonneg = {});

// Whether `point` satisfies every constraint and sign restriction exactly.
bool SatisfiesAll(const LpProblem& p, const std::vector<Rational>& point);

// Total pivots performed by solve() in this thread, for tests.
uint64_t PivotCount();

}  // namespace dominia

#endif  // DOMINIA_EXACT_LP_H_
