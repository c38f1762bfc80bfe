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

#include "dominia/mixed.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "dominia/errors.h"
#include "dominia/exact_lp.h"

namespace dominia {

MixedStrategy::MixedStrategy(int player, std::map<int, Rational> weights)
    : player_(player) {
  Rational total;
  for (auto& [s, w] : weights) {
    if (w.sign() < 0) throw Error(ErrorKind::kInvalidParams, "negative mixing weight");
    if (s < 0) throw Error(ErrorKind::kIndexOutOfRange, "negative strategy index");
    total += w;
    if (w.sign() > 0) weights_.emplace(s, std::move(w));
  }
  if (weights_.empty()) throw Error(ErrorKind::kEmptySupport, "mixed strategy has no support");
  if (total != Rational(1)) {
    throw Error(ErrorKind::kInvalidParams, "mixing weights sum to " + total.ToString());
  }
}

MixedStrategy MixedStrategy::PointMass(int player, int s) {
  return MixedStrategy(player, {{s, Rational(1)}});
}

Rational MixedStrategy::weight(int s) const {
  auto it = weights_.find(s);
  return it == weights_.end() ? Rational() : it->second;
}

StrategySet MixedStrategy::support() const {
  StrategySet out;
  for (const auto& [s, w] : weights_) out = out.with(s);
  return out;
}

std::string MixedStrategy::ToString() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, w] : weights_) {
    if (!first) os << " + ";
    first = false;
    os << w << "*" << s;
  }
  return os.str();
}

Rational mixed_payoff(const Game& g, const std::vector<MixedStrategy>& profile, int i) {
  const int n = g.num_players();
  if (static_cast<int>(profile.size()) != n) {
    throw Error(ErrorKind::kDimensionMismatch, "profile length differs from player count");
  }
  if (i < 0 || i >= n) throw Error(ErrorKind::kIndexOutOfRange, "player out of range");
  std::vector<std::vector<std::pair<int, Rational>>> atoms(n);
  for (int p = 0; p < n; ++p) {
    for (const auto& [s, w] : profile[p].weights()) {
      if (s >= g.num_strategies(p)) {
        throw Error(ErrorKind::kIndexOutOfRange, "mixed strategy outside the game");
      }
      atoms[p].emplace_back(s, w);
    }
  }
  Rational total;
  std::vector<std::size_t> pos(n, 0);
  while (true) {
    Rational weight(1);
    std::size_t offset = 0;
    for (int p = 0; p < n; ++p) {
      weight *= atoms[p][pos[p]].second;
      offset += static_cast<std::size_t>(atoms[p][pos[p]].first) * g.stride(p);
    }
    total += weight * g.flat_payoff(offset, i);
    int p = n - 1;
    for (; p >= 0; --p) {
      if (++pos[p] < atoms[p].size()) break;
      pos[p] = 0;
    }
    if (p < 0) break;
  }
  return total;
}

MixedStrategy substitute(const MixedStrategy& m2, int t1, const MixedStrategy& m1) {
  if (m1.player() != m2.player()) {
    throw Error(ErrorKind::kInvalidParams, "substitution across players");
  }
  const Rational a = m2.weight(t1);
  if (a.is_zero()) return m2;
  const Rational denom = Rational(1) - a * m1.weight(t1);
  if (denom.is_zero()) {
    throw Error(ErrorKind::kDegenerateSubstitution, "substitution normalizer is zero");
  }
  std::map<int, Rational> out;
  for (const auto& [x, w] : m2.weights()) {
    if (x != t1) out[x] += w;
  }
  for (const auto& [x, w] : m1.weights()) {
    if (x != t1) out[x] += a * w;
  }
  for (auto& [x, w] : out) w /= denom;
  return MixedStrategy(m2.player(), std::move(out));
}

MixedStrategy shrink_self_weight(int s, const MixedStrategy& m) {
  const Rational a = m.weight(s);
  if (a.is_zero()) return m;
  if (a == Rational(1)) {
    throw Error(ErrorKind::kDegenerateSubstitution, "mixed strategy is a point mass on s");
  }
  const Rational denom = Rational(1) - a;
  std::map<int, Rational> out;
  for (const auto& [x, w] : m.weights()) {
    if (x != s) out.emplace(x, w / denom);
  }
  return MixedStrategy(m.player(), std::move(out));
}

MixedStrategy ToParent(const Restriction& view, const MixedStrategy& m) {
  std::map<int, Rational> out;
  for (const auto& [x, w] : m.weights()) out.emplace(view.parent_index(m.player(), x), w);
  return MixedStrategy(m.player(), std::move(out));
}

std::optional<MixedStrategy> ToLocal(const Restriction& view, const MixedStrategy& m) {
  const auto& kept = view.kept(m.player());
  std::map<int, Rational> out;
  for (const auto& [x, w] : m.weights()) {
    auto it = std::lower_bound(kept.begin(), kept.end(), x);
    if (it == kept.end() || *it != x) return std::nullopt;
    out.emplace(static_cast<int>(it - kept.begin()), w);
  }
  return MixedStrategy(m.player(), std::move(out));
}

namespace {

// p_j(m, x) for every listed opponents' profile and every player j,
// indexed [x * n + j].
std::vector<Rational> MixedRows(const Restriction& view, int i, const MixedStrategy& m,
                                std::span<const std::size_t> opponents) {
  const int n = view.num_players();
  std::vector<Rational> out(opponents.size() * n);
  for (std::size_t x = 0; x < opponents.size(); ++x) {
    for (const auto& [k, w] : m.weights()) {
      for (int j = 0; j < n; ++j) out[x * n + j] += w * view.payoff_at(i, k, opponents[x], j);
    }
  }
  return out;
}

}  // namespace

std::vector<ProfileFacts> MixedFacts(const Restriction& view, int i, int s,
                                     const MixedStrategy& m,
                                     std::span<const std::size_t> opponents) {
  const int n = view.num_players();
  auto rows = MixedRows(view, i, m, opponents);
  std::vector<ProfileFacts> facts(opponents.size());
  for (std::size_t x = 0; x < opponents.size(); ++x) {
    ProfileFacts& f = facts[x];
    f.cmp = CompareDifference(rows[x * n + i], view.payoff_at(i, s, opponents[x], i));
    f.all_equal = f.cmp == 0;
    for (int j = 0; j < n && f.all_equal; ++j) {
      f.all_equal = rows[x * n + j] == view.payoff_at(i, s, opponents[x], j);
    }
  }
  return facts;
}

bool VerifyMixed(const Restriction& view, Tag tag, int i, int s, const MixedStrategy& m,
                 std::span<const std::size_t> opponents) {
  if (m.player() != i) return false;
  for (const auto& [k, w] : m.weights()) {
    if (k >= view.num_strategies(i)) return false;
  }
  if (tag == Tag::kPEM && m.support().contains(s)) return false;
  return HoldsOn(tag, MixedFacts(view, i, s, m, opponents));
}

namespace {

// Coefficient tables for one (i, s) over a candidate support.
struct DiffTable {
  std::vector<int> support;  // local strategy indices
  int n = 0;
  // diff[(x * n + j) * |support| + k] = p_j(support_k, x) - p_j(s, x)
  std::vector<Rational> diff;

  std::vector<Rational> Row(std::size_t x, int j) const {
    const std::size_t a = support.size();
    auto first = diff.begin() + static_cast<std::ptrdiff_t>((x * n + j) * a);
    return std::vector<Rational>(first, first + static_cast<std::ptrdiff_t>(a));
  }
};

DiffTable BuildDiffs(const Restriction& view, int i, int s, StrategySet allowed,
                     std::span<const std::size_t> opponents) {
  DiffTable t;
  t.n = view.num_players();
  for (int k : allowed.indices()) {
    if (k < view.num_strategies(i)) t.support.push_back(k);
  }
  const std::size_t a = t.support.size();
  t.diff.resize(opponents.size() * t.n * a);
  for (std::size_t x = 0; x < opponents.size(); ++x) {
    for (int j = 0; j < t.n; ++j) {
      const Rational& base = view.payoff_at(i, s, opponents[x], j);
      for (std::size_t k = 0; k < a; ++k) {
        t.diff[(x * t.n + j) * a + k] = view.payoff_at(i, t.support[k], opponents[x], j) - base;
      }
    }
  }
  return t;
}

// Pads `row` with zeros up to `width` columns.
std::vector<Rational> Padded(std::vector<Rational> row, std::size_t width) {
  row.resize(width);
  return row;
}

LinearConstraint Simplex(std::size_t a, std::size_t width) {
  LinearConstraint c;
  c.coefficients.assign(width, Rational());
  for (std::size_t k = 0; k < a; ++k) c.coefficients[k] = Rational(1);
  c.op = ConstraintOp::kEq;
  c.rhs = Rational(1);
  return c;
}

MixedStrategy FromPoint(int i, const std::vector<int>& support,
                        const std::vector<Rational>& point) {
  Rational total;
  for (std::size_t k = 0; k < support.size(); ++k) total += point[k];
  std::map<int, Rational> w;
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (point[k].sign() > 0) w.emplace(support[k], point[k] / total);
  }
  return MixedStrategy(i, std::move(w));
}

std::optional<MixedStrategy> SolveStrictOrWeak(const DiffTable& t, int i, std::size_t nx,
                                               Tag shape) {
  const std::size_t a = t.support.size();
  LpProblem p;
  const bool strict = shape == Tag::kS;
  const std::size_t width = a + (strict ? 1 : 0);
  p.num_variables = static_cast<int>(width);
  p.constraints.push_back(Simplex(a, width));
  p.objective.assign(width, Rational());
  p.nonneg.assign(width, true);
  if (strict) {
    p.nonneg[a] = false;
    p.objective[a] = Rational(1);
  }
  for (std::size_t x = 0; x < nx; ++x) {
    LinearConstraint c{Padded(t.Row(x, i), width), ConstraintOp::kGe, Rational()};
    if (strict) c.coefficients[a] = Rational(-1);
    if (shape == Tag::kW) {
      for (std::size_t k = 0; k < a; ++k) p.objective[k] += c.coefficients[k];
    }
    p.constraints.push_back(std::move(c));
  }
  LpOutcome out = solve(p);
  if (!out.optimal()) return std::nullopt;
  if (shape != Tag::kVW && out.value.sign() <= 0) return std::nullopt;
  return FromPoint(i, t.support, out.point);
}

std::optional<MixedStrategy> SolvePayoffEquivalent(const DiffTable& t, int i,
                                                   std::size_t nx) {
  const std::size_t a = t.support.size();
  std::vector<LinearConstraint> cs{Simplex(a, a)};
  for (std::size_t x = 0; x < nx; ++x) {
    for (int j = 0; j < t.n; ++j) cs.push_back({t.Row(x, j), ConstraintOp::kEq, Rational()});
  }
  LpOutcome out = feasible_point(cs, static_cast<int>(a));
  if (!out.optimal()) return std::nullopt;
  return FromPoint(i, t.support, out.point);
}

// Nice weak dominance. Variables are an unnormalized weight vector w >= 0
// and t_x in [0, 1] with slack_x(w) >= t_x; maximizing sum t marks the
// largest set P of profiles that can be strictly positive together. Every
// profile outside P is forced to tie, so it must also satisfy the
// compatibility equalities. Adding them can only shrink P; at the fixpoint
// a non-empty P yields a witness.
std::optional<MixedStrategy> SolveNiceWeak(const DiffTable& t, int i, std::size_t nx) {
  const std::size_t a = t.support.size();
  const std::size_t width = a + nx;
  std::vector<char> tie(nx, 0);
  while (true) {
    LpProblem p;
    p.num_variables = static_cast<int>(width);
    p.objective.assign(width, Rational());
    for (std::size_t x = 0; x < nx; ++x) {
      LinearConstraint c{Padded(t.Row(x, i), width), ConstraintOp::kGe, Rational()};
      c.coefficients[a + x] = Rational(-1);
      p.constraints.push_back(std::move(c));
      LinearConstraint cap{std::vector<Rational>(width), ConstraintOp::kLe, Rational(1)};
      cap.coefficients[a + x] = Rational(1);
      p.constraints.push_back(std::move(cap));
      p.objective[a + x] = Rational(1);
      if (!tie[x]) continue;
      for (int j = 0; j < t.n; ++j) {
        p.constraints.push_back({Padded(t.Row(x, j), width), ConstraintOp::kEq, Rational()});
      }
    }
    LpOutcome out = solve(p);
    if (!out.optimal()) return std::nullopt;
    bool changed = false;
    bool any_positive = false;
    for (std::size_t x = 0; x < nx; ++x) {
      const bool positive = out.point[a + x] == Rational(1);
      any_positive = any_positive || positive;
      if (!positive && !tie[x]) {
        tie[x] = 1;
        changed = true;
      }
    }
    if (!any_positive) return std::nullopt;
    if (!changed) return FromPoint(i, t.support, out.point);
  }
}

}  // namespace

std::optional<MixedStrategy> SolveMixed(const Restriction& view, Tag tag, int i, int s,
                                        StrategySet allowed,
                                        std::span<const std::size_t> opponents) {
  if (tag == Tag::kPEM) allowed = allowed.without(s);
  if (view.is_degenerate() || opponents.empty()) return std::nullopt;
  DiffTable t = BuildDiffs(view, i, s, allowed, opponents);
  if (t.support.empty()) return std::nullopt;
  std::optional<MixedStrategy> m;
  const Tag shape = PureShape(tag);
  switch (shape) {
    case Tag::kS:
    case Tag::kW:
    case Tag::kVW: m = SolveStrictOrWeak(t, i, opponents.size(), shape); break;
    case Tag::kPE: m = SolvePayoffEquivalent(t, i, opponents.size()); break;
    case Tag::kNW: m = SolveNiceWeak(t, i, opponents.size()); break;
    default: throw Error(ErrorKind::kInvalidRelation, "no mixed procedure for this relation");
  }
  if (m && !VerifyMixed(view, tag, i, s, *m, opponents)) {
    throw std::logic_error("mixed witness failed direct verification");
  }
  return m;
}

std::optional<MixedWitness> FindDominator(const Restriction& view, const RelationId& r,
                                          int i, int s, StrategySet allowed) {
  if (r.inherent) throw Error(ErrorKind::kInvalidRelation, "inherent relation in a binary check");
  for (Tag tag : r.members) {
    if (!IsMixed(tag)) {
      if (auto w = FindPureDominator(view, RelationId::Of(tag), i, s, allowed)) {
        return MixedWitness{i, s, MixedStrategy::PointMass(i, w->dominator), tag};
      }
      continue;
    }
    if (auto m = SolveMixed(view, tag, i, s, allowed, view.opponent_offsets(i))) {
      return MixedWitness{i, s, std::move(*m), tag};
    }
  }
  return std::nullopt;
}

std::optional<MixedWitness> find_dominator(const Game& g, const RelationId& r, int i,
                                           int s, StrategySet allowed_support) {
  if (i < 0 || i >= g.num_players() || s < 0 || s >= g.num_strategies(i) ||
      !allowed_support.subset_of(StrategySet::All(g.num_strategies(i)))) {
    throw Error(ErrorKind::kIndexOutOfRange, "strategy index out of range");
  }
  if (allowed_support.empty()) throw Error(ErrorKind::kEmptySupport, "empty allowed support");
  return FindDominator(Restriction(g), r, i, s, allowed_support);
}

std::vector<std::vector<MixedWitness>> mixed_dominated_set(
    const Game& g, const RelationId& r, const std::vector<StrategySet>& survivors) {
  if (static_cast<int>(survivors.size()) != g.num_players()) {
    throw Error(ErrorKind::kDimensionMismatch, "one survivor set per player expected");
  }
  Restriction view(g);
  std::vector<std::vector<MixedWitness>> out(g.num_players());
  for (int i = 0; i < g.num_players(); ++i) {
    if (!survivors[i].subset_of(StrategySet::All(g.num_strategies(i)))) {
      throw Error(ErrorKind::kIndexOutOfRange, "survivor outside the strategy set");
    }
    for (int s = 0; s < g.num_strategies(i); ++s) {
      if (auto w = FindDominator(view, r, i, s, survivors[i].without(s))) {
        out[i].push_back(std::move(*w));
      }
    }
  }
  return out;
}

namespace {

bool VerifyUnion(const Restriction& view, const RelationId& r, int i, int s,
                 const MixedStrategy& m) {
  for (Tag tag : r.members) {
    if (VerifyMixed(view, tag, i, s, m, view.opponent_offsets(i))) return true;
  }
  return false;
}

}  // namespace

std::optional<MixedRestrictionViolation> check_mixed_hereditary(const Game& g,
                                                                const RelationId& r,
                                                                const Limits& limits) {
  CheckTotalStrategies(g, limits);
  Restriction full(g);
  std::optional<MixedRestrictionViolation> found;
  ForEachRestriction(g, [&](const std::vector<StrategySet>& kept) {
    Restriction view(g, kept);
    for (int i = 0; i < g.num_players() && !found; ++i) {
      for (int s : kept[i].indices()) {
        auto w = FindDominator(full, r, i, s, kept[i].without(s));
        if (!w) continue;
        auto local = ToLocal(view, w->dominator);
        const int ls = static_cast<int>(
            std::lower_bound(view.kept(i).begin(), view.kept(i).end(), s) -
            view.kept(i).begin());
        if (!VerifyUnion(view, r, i, ls, *local)) {
          found = MixedRestrictionViolation{kept, i, s, w->dominator};
          break;
        }
      }
    }
    return !found;
  });
  return found;
}

std::optional<MixedIiiaViolation> check_mixed_iiia(const Game& g, const RelationId& r,
                                                   const Limits& limits) {
  CheckTotalStrategies(g, limits);
  Restriction full(g);
  for (int i = 0; i < g.num_players(); ++i) {
    std::vector<StrategySet> kept;
    for (int p = 0; p < g.num_players(); ++p) kept.push_back(StrategySet::All(g.num_strategies(p)));
    for (uint64_t mask = 1; mask <= StrategySet::All(g.num_strategies(i)).bits(); ++mask) {
      kept[i] = StrategySet(mask);
      Restriction view(g, kept);
      for (int ls = 0; ls < view.num_strategies(i); ++ls) {
        const int s = view.parent_index(i, ls);
        const bool in_full = FindDominator(full, r, i, s, kept[i].without(s)).has_value();
        const bool in_sub =
            FindDominator(view, r, i, ls, StrategySet::All(view.num_strategies(i)).without(ls))
                .has_value();
        if (in_full != in_sub) return MixedIiiaViolation{i, kept[i], s, in_full};
      }
    }
  }
  return std::nullopt;
}

namespace {

// Points of the simplex over player i's strategies in `view` obeying
// `rows` (each a constraint over those weights), maximizing or minimizing
// `objective`. Returns the optimal point when its value has the requested
// strict sign.
std::optional<std::vector<Rational>> SignedOptimum(std::size_t a,
                                                   const std::vector<LinearConstraint>& rows,
                                                   const std::vector<Rational>& objective,
                                                   bool want_positive) {
  LpProblem p;
  p.num_variables = static_cast<int>(a);
  p.constraints = rows;
  p.constraints.push_back(Simplex(a, a));
  p.objective = objective;
  p.sense = want_positive ? Sense::kMax : Sense::kMin;
  LpOutcome out = solve(p);
  if (!out.optimal()) return std::nullopt;
  if (want_positive ? out.value.sign() > 0 : out.value.sign() < 0) return out.point;
  return std::nullopt;
}

// A point of the constrained simplex where `objective` is non-zero.
std::optional<std::vector<Rational>> NonZeroPoint(std::size_t a,
                                                  const std::vector<LinearConstraint>& rows,
                                                  const std::vector<Rational>& objective) {
  if (auto p = SignedOptimum(a, rows, objective, true)) return p;
  return SignedOptimum(a, rows, objective, false);
}

Rational Dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational v;
  for (std::size_t k = 0; k < a.size(); ++k) v += a[k] * b[k];
  return v;
}

MixedStrategy ParentStrategy(const Restriction& view, int i, const DiffTable& t,
                             const std::vector<Rational>& point) {
  return ToParent(view, FromPoint(i, t.support, point));
}

}  // namespace

std::optional<TdimViolation> check_tdim(const Game& g) {
  Restriction view(g);
  for (int i = 0; i < g.num_players(); ++i) {
    const auto& opp = view.opponent_offsets(i);
    const std::size_t a = static_cast<std::size_t>(g.num_strategies(i));
    for (int r = 0; r < g.num_strategies(i); ++r) {
      DiffTable t = BuildDiffs(view, i, r, StrategySet::All(g.num_strategies(i)), opp);
      for (int j = 0; j < g.num_players(); ++j) {
        if (j == i) continue;
        for (std::size_t x = 0; x < opp.size(); ++x) {
          std::vector<LinearConstraint> rows{{t.Row(x, i), ConstraintOp::kEq, Rational()}};
          if (auto point = NonZeroPoint(a, rows, t.Row(x, j))) {
            JointProfile profile = g.profile_at(opp[x]);
            profile[i] = r;
            return TdimViolation{i, j, r, std::move(profile), FromPoint(i, t.support, *point)};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<MixedRestrictionViolation> check_tdim_plus(const Game& g,
                                                         const Limits& limits) {
  CheckTotalStrategies(g, limits);
  std::optional<MixedRestrictionViolation> found;
  ForEachRestriction(g, [&](const std::vector<StrategySet>& kept) {
    Restriction view(g, kept);
    for (int i = 0; i < g.num_players() && !found; ++i) {
      const auto& opp = view.opponent_offsets(i);
      const std::size_t a = static_cast<std::size_t>(view.num_strategies(i));
      for (int r = 0; r < view.num_strategies(i) && !found; ++r) {
        DiffTable t = BuildDiffs(view, i, r, StrategySet::All(view.num_strategies(i)), opp);
        std::vector<Rational> total(a);
        std::vector<LinearConstraint> weak;
        for (std::size_t y = 0; y < opp.size(); ++y) {
          auto row = t.Row(y, i);
          for (std::size_t k = 0; k < a; ++k) total[k] += row[k];
          weak.push_back({std::move(row), ConstraintOp::kGe, Rational()});
        }
        for (std::size_t x = 0; x < opp.size() && !found; ++x) {
          // Weakly dominating mixtures that tie with r at x.
          auto rows = weak;
          rows[x].op = ConstraintOp::kEq;
          auto m1 = SignedOptimum(a, rows, total, true);
          if (!m1) continue;
          for (int j = 0; j < g.num_players() && !found; ++j) {
            if (j == i) continue;
            const auto b = t.Row(x, j);
            auto m2 = NonZeroPoint(a, rows, b);
            if (!m2) continue;
            // Some mixture of m1 and m2 keeps a positive margin and breaks
            // the tie at x for player j; b vanishes at most once on the
            // segment, so one of two interior points works.
            for (const Rational& lambda : {Rational(1, 2), Rational(1, 3)}) {
              std::vector<Rational> m(a);
              for (std::size_t k = 0; k < a; ++k) {
                m[k] = (Rational(1) - lambda) * (*m1)[k] + lambda * (*m2)[k];
              }
              if (!Dot(b, m).is_zero()) {
                found = MixedRestrictionViolation{kept, i, view.parent_index(i, r),
                                                  ParentStrategy(view, i, t, m)};
                break;
              }
            }
          }
        }
      }
    }
    return !found;
  });
  return found;
}

std::optional<MixedRestrictionViolation> check_tdi_star(const Game& g,
                                                        const Limits& limits) {
  CheckTotalStrategies(g, limits);
  std::optional<MixedRestrictionViolation> found;
  ForEachRestriction(g, [&](const std::vector<StrategySet>& kept) {
    Restriction view(g, kept);
    for (int i = 0; i < g.num_players() && !found; ++i) {
      const auto& opp = view.opponent_offsets(i);
      const std::size_t a = static_cast<std::size_t>(view.num_strategies(i));
      for (int r = 0; r < view.num_strategies(i) && !found; ++r) {
        DiffTable t = BuildDiffs(view, i, r, StrategySet::All(view.num_strategies(i)), opp);
        // Mixtures tying with r for player i everywhere.
        std::vector<LinearConstraint> rows;
        for (std::size_t x = 0; x < opp.size(); ++x) {
          rows.push_back({t.Row(x, i), ConstraintOp::kEq, Rational()});
        }
        for (std::size_t x = 0; x < opp.size() && !found; ++x) {
          for (int j = 0; j < g.num_players() && !found; ++j) {
            if (j == i) continue;
            if (auto point = NonZeroPoint(a, rows, t.Row(x, j))) {
              found = MixedRestrictionViolation{kept, i, view.parent_index(i, r),
                                                ParentStrategy(view, i, t, *point)};
            }
          }
        }
      }
    }
    return !found;
  });
  return found;
}

}  // namespace dominia
