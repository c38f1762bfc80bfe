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

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "dominia/errors.h"

namespace dominia {
namespace {

thread_local uint64_t pivot_count = 0;

// Pivot budget per solve. Desk-scale problems need a few hundred at most.
constexpr uint64_t kPivotBudget = 2'000'000;

void Validate(const LpProblem& p) {
  auto bad = [](const std::string& what) {
    throw Error(ErrorKind::kDimensionMismatch, what);
  };
  if (p.num_variables < 0) bad("negative variable count");
  const std::size_t nv = static_cast<std::size_t>(p.num_variables);
  if (!p.objective.empty() && p.objective.size() != nv) bad("objective length");
  if (!p.nonneg.empty() && p.nonneg.size() != nv) bad("nonneg length");
  for (const auto& c : p.constraints) {
    if (c.coefficients.size() != nv) bad("constraint length");
  }
}

// Dense tableau in equality form: rows of A | b with b >= 0 and one basic
// variable per row. Columns [0, n_real) are structural and slack columns,
// [n_real, n_cols) are artificial.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t n_real, std::size_t n_cols)
      : n_real_(n_real), n_cols_(n_cols), a_(rows, std::vector<mpq_class>(n_cols + 1)),
        basis_(rows), cost_(n_cols + 1) {}

  std::vector<mpq_class>& row(std::size_t r) { return a_[r]; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return a_.size(); }

  // Installs reduced costs for minimizing c . x over the current basis.
  void SetCost(const std::vector<mpq_class>& c) {
    for (std::size_t j = 0; j <= n_cols_; ++j) cost_[j] = j < n_cols_ ? c[j] : 0;
    for (std::size_t r = 0; r < rows(); ++r) {
      const mpq_class cb = c[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= n_cols_; ++j) cost_[j] -= cb * a_[r][j];
    }
  }

  // Minimizes the installed cost, entering only columns below `limit`.
  // Returns false when unbounded.
  bool Run(std::size_t limit) {
    uint64_t steps = 0;
    while (true) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (sgn(cost_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;
      std::size_t leave = rows();
      mpq_class best;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (sgn(a_[r][enter]) <= 0) continue;
        mpq_class ratio = a_[r][n_cols_] / a_[r][enter];
        if (leave == rows() || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == rows()) return false;
      Pivot(leave, enter);
      if (++steps > kPivotBudget) throw std::logic_error("simplex pivot budget exceeded");
    }
  }

  void Pivot(std::size_t r, std::size_t c) {
    ++pivot_count;
    auto& pr = a_[r];
    const mpq_class inv = 1 / pr[c];
    for (auto& v : pr) {
      if (sgn(v) != 0) v *= inv;
    }
    auto eliminate = [&](std::vector<mpq_class>& target) {
      if (sgn(target[c]) == 0) return;
      const mpq_class f = target[c];
      for (std::size_t j = 0; j <= n_cols_; ++j) {
        if (sgn(pr[j]) != 0) target[j] -= f * pr[j];
      }
    };
    for (std::size_t k = 0; k < rows(); ++k) {
      if (k != r) eliminate(a_[k]);
    }
    eliminate(cost_);
    basis_[r] = c;
  }

  // Objective value of the current basis for the installed cost.
  mpq_class Value() const { return -cost_[n_cols_]; }

  void DropRow(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  std::vector<mpq_class> Solution() const {
    std::vector<mpq_class> x(n_cols_);
    for (std::size_t r = 0; r < rows(); ++r) x[basis_[r]] = a_[r][n_cols_];
    return x;
  }

  std::size_t n_real() const { return n_real_; }
  std::size_t n_cols() const { return n_cols_; }

 private:
  std::size_t n_real_;
  std::size_t n_cols_;
  std::vector<std::vector<mpq_class>> a_;
  std::vector<std::size_t> basis_;
  std::vector<mpq_class> cost_;
};

struct Prepared {
  Tableau tableau;
  // Column of x_k^+ and, for free variables, x_k^- (or npos).
  std::vector<std::pair<std::size_t, std::size_t>> var_cols;
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Builds the tableau into `out` and runs phase one. False when infeasible.
bool PhaseOne(const LpProblem& p, std::unique_ptr<Prepared>& out) {
  const std::size_t nv = static_cast<std::size_t>(p.num_variables);
  std::vector<std::pair<std::size_t, std::size_t>> var_cols(nv);
  std::size_t col = 0;
  for (std::size_t k = 0; k < nv; ++k) {
    const bool free = !p.nonneg.empty() && !p.nonneg[k];
    var_cols[k].first = col++;
    var_cols[k].second = free ? col++ : kNone;
  }
  const std::size_t m = p.constraints.size();
  // Normalize signs so every rhs is non-negative.
  std::vector<int> sign(m, 1);
  std::vector<ConstraintOp> ops(m);
  std::size_t n_slack = 0;
  std::size_t n_art = 0;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& c = p.constraints[r];
    ops[r] = c.op;
    if (c.rhs.sign() < 0) {
      sign[r] = -1;
      if (c.op == ConstraintOp::kLe) ops[r] = ConstraintOp::kGe;
      else if (c.op == ConstraintOp::kGe) ops[r] = ConstraintOp::kLe;
    }
    if (ops[r] != ConstraintOp::kEq) ++n_slack;
    if (ops[r] != ConstraintOp::kLe) ++n_art;
  }
  const std::size_t n_real = col + n_slack;
  const std::size_t n_cols = n_real + n_art;
  out = std::make_unique<Prepared>(Prepared{Tableau(m, n_real, n_cols), std::move(var_cols)});
  Tableau& t = out->tableau;
  std::size_t slack = col;
  std::size_t art = n_real;
  for (std::size_t r = 0; r < m; ++r) {
    const auto& c = p.constraints[r];
    auto& row = t.row(r);
    for (std::size_t k = 0; k < nv; ++k) {
      const mpq_class v = c.coefficients[k].raw() * sign[r];
      row[out->var_cols[k].first] = v;
      if (out->var_cols[k].second != kNone) row[out->var_cols[k].second] = -v;
    }
    row[n_cols] = c.rhs.raw() * sign[r];
    if (ops[r] == ConstraintOp::kLe) {
      row[slack] = 1;
      t.basis(r) = slack++;
    } else {
      if (ops[r] == ConstraintOp::kGe) row[slack++] = -1;
      row[art] = 1;
      t.basis(r) = art++;
    }
  }
  std::vector<mpq_class> c1(n_cols);
  for (std::size_t j = n_real; j < n_cols; ++j) c1[j] = 1;
  t.SetCost(c1);
  t.Run(n_cols);
  if (sgn(t.Value()) != 0) return false;
  // Drive remaining zero-level artificials out of the basis.
  for (std::size_t r = 0; r < t.rows();) {
    if (t.basis(r) < n_real) {
      ++r;
      continue;
    }
    std::size_t j = 0;
    while (j < n_real && sgn(t.row(r)[j]) == 0) ++j;
    if (j < n_real) {
      t.Pivot(r, j);
      ++r;
    } else {
      t.DropRow(r);
    }
  }
  return true;
}

std::vector<Rational> Extract(const Prepared& prep) {
  auto x = prep.tableau.Solution();
  std::vector<Rational> point;
  point.reserve(prep.var_cols.size());
  for (const auto& [pos, neg] : prep.var_cols) {
    mpq_class v = x[pos];
    if (neg != kNone) v -= x[neg];
    point.emplace_back(v);
  }
  return point;
}

Rational Evaluate(const LpProblem& p, const std::vector<Rational>& x) {
  Rational v;
  if (p.objective.empty()) return v;
  for (std::size_t k = 0; k < x.size(); ++k) v += p.objective[k] * x[k];
  return v;
}

}  // namespace

bool SatisfiesAll(const LpProblem& p, const std::vector<Rational>& point) {
  if (point.size() != static_cast<std::size_t>(p.num_variables)) return false;
  for (std::size_t k = 0; k < point.size(); ++k) {
    const bool nonneg = p.nonneg.empty() || p.nonneg[k];
    if (nonneg && point[k].sign() < 0) return false;
  }
  for (const auto& c : p.constraints) {
    Rational lhs;
    for (std::size_t k = 0; k < point.size(); ++k) lhs += c.coefficients[k] * point[k];
    switch (c.op) {
      case ConstraintOp::kLe: if (lhs > c.rhs) return false; break;
      case ConstraintOp::kEq: if (lhs != c.rhs) return false; break;
      case ConstraintOp::kGe: if (lhs < c.rhs) return false; break;
    }
  }
  return true;
}

LpOutcome solve(const LpProblem& p) {
  Validate(p);
  std::unique_ptr<Prepared> prep;
  if (!PhaseOne(p, prep)) return LpOutcome{LpStatus::kInfeasible, Rational(), {}};
  Tableau& t = prep->tableau;
  std::vector<mpq_class> c(t.n_cols());
  if (!p.objective.empty()) {
    for (std::size_t k = 0; k < prep->var_cols.size(); ++k) {
      mpq_class v = p.objective[k].raw();
      if (p.sense == Sense::kMax) v = -v;
      c[prep->var_cols[k].first] = v;
      if (prep->var_cols[k].second != kNone) c[prep->var_cols[k].second] = -v;
    }
  }
  t.SetCost(c);
  if (!t.Run(t.n_real())) return LpOutcome{LpStatus::kUnbounded, Rational(), {}};
  LpOutcome out{LpStatus::kOptimal, Rational(), Extract(*prep)};
  out.value = Evaluate(p, out.point);
  if (!SatisfiesAll(p, out.point)) {
    throw std::logic_error("simplex returned a point violating a constraint");
  }
  return out;
}

LpOutcome feasible_point(const std::vector<LinearConstraint>& constraints,
                         int num_variables, const std::vector<bool>& nonneg) {
  LpProblem p;
  p.num_variables = num_variables;
  p.constraints = constraints;
  p.nonneg = nonneg;
  Validate(p);
  std::unique_ptr<Prepared> prep;
  if (!PhaseOne(p, prep)) return LpOutcome{LpStatus::kInfeasible, Rational(), {}};
  LpOutcome out{LpStatus::kOptimal, Rational(), Extract(*prep)};
  if (!SatisfiesAll(p, out.point)) {
    throw std::logic_error("phase one returned an infeasible point");
  }
  return out;
}

uint64_t PivotCount() { return pivot_count; }

}  // namespace dominia
