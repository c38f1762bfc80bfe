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

#include "dominia/exact_lp.h"

#include <gtest/gtest.h>

#include <random>

#include "dominia/errors.h"

namespace dominia {
namespace {

LinearConstraint Row(std::vector<Rational> c, ConstraintOp op, Rational rhs) {
  return LinearConstraint{std::move(c), op, std::move(rhs)};
}

TEST(ExactLpTest, SingleVariableMax) {
  LpProblem p;
  p.num_variables = 1;
  p.constraints = {Row({1}, ConstraintOp::kLe, 3)};
  p.objective = {1};
  const LpOutcome out = solve(p);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(out.value, Rational(3));
  EXPECT_EQ(out.point, std::vector<Rational>{Rational(3)});
}

TEST(ExactLpTest, Unbounded) {
  LpProblem p;
  p.num_variables = 1;
  p.objective = {1};
  EXPECT_EQ(solve(p).status, LpStatus::kUnbounded);
}

TEST(ExactLpTest, ContradictoryEqualities) {
  LpProblem p;
  p.num_variables = 1;
  p.constraints = {Row({1}, ConstraintOp::kEq, 1), Row({1}, ConstraintOp::kEq, 2)};
  EXPECT_EQ(solve(p).status, LpStatus::kInfeasible);
}

TEST(ExactLpTest, FeasiblePoints) {
  const std::vector<LinearConstraint> simplex = {Row({1, 1}, ConstraintOp::kEq, 1)};
  const LpOutcome a = feasible_point(simplex, 2);
  ASSERT_TRUE(a.optimal());
  EXPECT_EQ(a.point[0] + a.point[1], Rational(1));
  EXPECT_GE(a.point[0], Rational(0));
  EXPECT_GE(a.point[1], Rational(0));

  std::vector<LinearConstraint> bad = simplex;
  bad.push_back(Row({1, 0}, ConstraintOp::kGe, 2));
  EXPECT_EQ(feasible_point(bad, 2).status, LpStatus::kInfeasible);

  EXPECT_TRUE(feasible_point({}, 0).optimal());
}

TEST(ExactLpTest, FreeVariablesAndMinimize) {
  LpProblem p;
  p.num_variables = 2;
  p.nonneg = {false, true};
  // min x0 s.t. x0 + x1 >= -5, x1 <= 2  ->  x0 = -7.
  p.constraints = {Row({1, 1}, ConstraintOp::kGe, -5), Row({0, 1}, ConstraintOp::kLe, 2)};
  p.objective = {1, 0};
  p.sense = Sense::kMin;
  const LpOutcome out = solve(p);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(out.value, Rational(-7));
  EXPECT_TRUE(SatisfiesAll(p, out.point));
}

TEST(ExactLpTest, RedundantEqualitiesAndDegeneracy) {
  LpProblem p;
  p.num_variables = 3;
  p.constraints = {Row({1, 1, 1}, ConstraintOp::kEq, 1), Row({2, 2, 2}, ConstraintOp::kEq, 2),
                   Row({1, -1, 0}, ConstraintOp::kEq, 0), Row({1, 0, 0}, ConstraintOp::kLe, 0)};
  p.objective = {0, 0, 1};
  const LpOutcome out = solve(p);
  ASSERT_TRUE(out.optimal());
  EXPECT_EQ(out.value, Rational(1));
}

TEST(ExactLpTest, DimensionMismatch) {
  LpProblem p;
  p.num_variables = 2;
  p.constraints = {Row({1}, ConstraintOp::kLe, 1)};
  try {
    (void)solve(p);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionMismatch);
  }
}

// max c x, A x <= b, x >= 0 against min b y, A^T y >= c, y >= 0.
TEST(ExactLpTest, DualitySpotCheck) {
  std::mt19937_64 rng(7);
  auto draw = [&](long lo, long hi) {
    return Rational(lo + static_cast<long>(rng() % static_cast<uint64_t>(hi - lo + 1)));
  };
  int optimal = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 4);
    const bool bounded = trial % 2 == 0;
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n));
    std::vector<Rational> b(m), c(n);
    for (auto& row : a) {
      for (auto& v : row) v = bounded ? draw(1, 5) : draw(-3, 3);
    }
    for (auto& v : b) v = bounded ? draw(1, 6) : draw(-3, 3);
    for (auto& v : c) v = draw(-3, 3);

    LpProblem primal;
    primal.num_variables = n;
    primal.objective = c;
    for (int r = 0; r < m; ++r) primal.constraints.push_back(Row(a[r], ConstraintOp::kLe, b[r]));
    LpProblem dual;
    dual.num_variables = m;
    dual.objective = b;
    dual.sense = Sense::kMin;
    for (int k = 0; k < n; ++k) {
      std::vector<Rational> col(m);
      for (int r = 0; r < m; ++r) col[r] = a[r][k];
      dual.constraints.push_back(Row(col, ConstraintOp::kGe, c[k]));
    }
    const LpOutcome p = solve(primal);
    const LpOutcome d = solve(dual);
    if (bounded) {
      ASSERT_TRUE(p.optimal());
    }
    if (p.optimal()) {
      ASSERT_TRUE(d.optimal());
      EXPECT_EQ(p.value, d.value);
      EXPECT_TRUE(SatisfiesAll(primal, p.point));
      EXPECT_TRUE(SatisfiesAll(dual, d.point));
      ++optimal;
    } else if (p.status == LpStatus::kUnbounded) {
      EXPECT_EQ(d.status, LpStatus::kInfeasible);
    } else {
      EXPECT_NE(d.status, LpStatus::kOptimal);
    }
  }
  EXPECT_GE(optimal, 150);
}

TEST(ExactLpTest, PivotCountStaysSmall) {
  const uint64_t before = PivotCount();
  LpProblem p;
  p.num_variables = 6;
  p.objective.assign(6, Rational(1));
  for (int k = 0; k < 6; ++k) {
    std::vector<Rational> row(6, Rational(1));
    row[k] = Rational(2);
    p.constraints.push_back(Row(row, ConstraintOp::kLe, 10));
  }
  ASSERT_TRUE(solve(p).optimal());
  const uint64_t used = PivotCount() - before;
  EXPECT_GT(used, 0u);
  EXPECT_LT(used, 200u);
}

}  // namespace
}  // namespace dominia
