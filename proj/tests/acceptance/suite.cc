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

#include "suite.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>

#include "dominia/dominance_pure.h"
#include "dominia/equivalence.h"
#include "dominia/errors.h"
#include "dominia/inherent.h"
#include "dominia/mixed.h"
#include "dominia/random_game.h"
#include "dominia/reduction.h"
#include "oracles.h"

namespace dominia::suite {
namespace {

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Game TwoPlayer(std::vector<std::string> rows, std::vector<std::string> cols,
               const std::vector<std::vector<std::pair<Rational, Rational>>>& cells) {
  std::map<JointProfile, std::vector<Rational>> payoffs;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      payoffs[{static_cast<int>(r), static_cast<int>(c)}] = {cells[r][c].first,
                                                             cells[r][c].second};
    }
  }
  return new_game(2, {std::move(rows), std::move(cols)}, payoffs);
}

std::vector<StrategySet> FullSets(const Game& g) {
  std::vector<StrategySet> out;
  for (int i = 0; i < g.num_players(); ++i) {
    out.push_back(StrategySet((uint64_t{1} << g.num_strategies(i)) - 1));
  }
  return out;
}

std::string KeptText(const Game& root, const std::vector<StrategySet>& kept) {
  std::string out;
  for (int i = 0; i < root.num_players(); ++i) {
    if (i > 0) out += "x";
    out += "{";
    bool first = true;
    for (int s : kept[i].indices()) {
      if (!first) out += ",";
      out += root.label(i, s);
      first = false;
    }
    out += "}";
  }
  return out;
}

// Runs fn(k) for every game index on all threads and collects the failure
// messages; the first exception is rethrown after the loop.
std::vector<std::optional<std::string>> ForGames(
    int n, const std::function<std::optional<std::string>(int)>& fn) {
  std::vector<std::optional<std::string>> out(n);
  std::exception_ptr error;
  std::mutex mu;
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < n; ++k) {
    try {
      out[k] = fn(k);
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

struct Tally {
  int failures = 0;
  std::string first;
};

Tally Count(const std::vector<std::optional<std::string>>& results) {
  Tally t;
  for (std::size_t k = 0; k < results.size(); ++k) {
    if (!results[k]) continue;
    if (t.failures == 0) t.first = "game " + std::to_string(k) + ": " + *results[k];
    ++t.failures;
  }
  return t;
}

std::vector<int> MixedSubSuite(const std::vector<Game>& games, int max_total) {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(games.size()); ++k) {
    if (games[k].total_strategies() <= max_total) out.push_back(k);
  }
  return out;
}

std::vector<StrategySet> EndpointKept(const Game& g, const ReductionPath& path) {
  return path.steps.empty() ? FullSets(g) : path.steps.back().result.kept;
}

CriterionResult TieGameRegression() {
  CriterionResult r{1, "tie-game regression under NW, NW|PE and weak confluence"};
  const Game g = TieGame();
  std::ostringstream detail;
  bool pass = true;

  const ConfluenceReport nw = normal_forms(g, StrictSpec(RelationId::Of(Tag::kNW)), false);
  const auto nw_classes = EquivalenceClasses([&] {
    std::vector<Game> v;
    for (const auto& s : nw.normal_forms) v.push_back(s.game);
    return v;
  }());
  detail << "NW any-subset: " << nw.normal_forms.size() << " normal forms in "
         << nw_classes.size() << " classes [";
  for (std::size_t k = 0; k < nw.normal_forms.size(); ++k) {
    detail << (k ? " " : "") << KeptText(g, nw.normal_forms[k].kept);
  }
  detail << "]";
  if (nw.normal_forms.size() != 2 || nw_classes.size() != 2) pass = false;

  const ConfluenceReport single = normal_forms(
      g, StrictSpec(RelationId::Of(Tag::kNW), Step::kSingleStrategy), false);
  detail << "; NW single-strategy: " << single.normal_forms.size() << " normal forms";

  const ConfluenceReport pe =
      normal_forms(g, StrictSpec(RelationId::Union({Tag::kNW, Tag::kPE})), true);
  const Game one = TwoPlayer({"T"}, {"L"}, {{{Rational(2), Rational(1)}}});
  const bool pe_ok = pe.classes.size() == 1 && !pe.normal_forms.empty() &&
                     equivalent(pe.normal_forms[pe.classes[0][0]].game, one).has_value();
  detail << "; NW|PE up to renaming: " << pe.classes.size() << " class(es)"
         << (pe_ok ? ", 1x1 (2,1)" : "");
  if (!pe_ok) pass = false;

  const auto split = check_weak_confluence(g, StrictSpec(RelationId::Of(Tag::kNW)), false);
  if (split) {
    const std::vector<StrategySet> a{StrategySet(0b01), StrategySet(0b11)};
    const std::vector<StrategySet> b{StrategySet(0b11), StrategySet(0b01)};
    const bool pair_ok = (split->left.kept == a && split->right.kept == b) ||
                         (split->left.kept == b && split->right.kept == a);
    detail << "; weak confluence fails at " << KeptText(g, split->left.kept) << " / "
           << KeptText(g, split->right.kept);
    if (!pair_ok) pass = false;
  } else {
    detail << "; weak confluence holds";
    pass = false;
  }
  r.pass = pass;
  r.detail = detail.str();
  return r;
}

CriterionResult InherentRegression() {
  CriterionResult r{2, "inherent versus pairwise weak dominance regression"};
  std::ostringstream detail;
  const Game a = InherentWeakGame();
  const InherentResult inh_m = is_inherently_dominated(a, {RelationId::Of(Tag::kW), 0, 1, {}});
  bool strict_m = false;
  for (int t = 0; t < a.num_strategies(0); ++t) {
    if (t != 1 && dominates(a, RelationId::Of(Tag::kS), 0, 1, t)) strict_m = true;
  }
  const Game b = WeakNotInherentGame();
  const bool weak_b = dominates(b, RelationId::Of(Tag::kW), 0, 1, 0);
  const InherentResult inh_b = is_inherently_dominated(b, {RelationId::Of(Tag::kW), 0, 1, {}});
  detail << "M inherently W-dominated: " << (inh_m.dominated ? "yes" : "no")
         << ", M strictly dominated: " << (strict_m ? "yes" : "no")
         << "; B weakly dominated: " << (weak_b ? "yes" : "no")
         << ", B inherently W-dominated: " << (inh_b.dominated ? "yes" : "no");
  r.pass = inh_m.dominated && !strict_m && weak_b && !inh_b.dominated;
  r.detail = detail.str();
  return r;
}

CriterionResult StrictElimination(const std::vector<Game>& games) {
  CriterionResult r{3, "strict elimination: unique normal form, maximal endpoint, one at a time"};
  const RelationId s = RelationId::Of(Tag::kS);
  const auto results = ForGames(static_cast<int>(games.size()), [&](int k)
                                                                    -> std::optional<std::string> {
    const Game& g = games[k];
    const ConfluenceReport nf = normal_forms(g, StrictSpec(s), false);
    if (nf.normal_forms.size() != 1) {
      return std::to_string(nf.normal_forms.size()) + " normal forms";
    }
    const ReductionPath path = maximal_reduce(g, RelationSpec{s, Arrow::kLoose, Step::kMaximal});
    if (EndpointKept(g, path) != nf.normal_forms[0].kept) {
      return "maximal endpoint " + KeptText(g, EndpointKept(g, path)) + " vs normal form " +
             KeptText(g, nf.normal_forms[0].kept);
    }
    if (auto bad = check_one_at_a_time(g, s)) {
      return "one-at-a-time fails at " + KeptText(g, bad->kept);
    }
    return std::nullopt;
  });
  const Tally t = Count(results);
  r.pass = t.failures == 0;
  r.detail = std::to_string(games.size()) + " games, " + std::to_string(t.failures) +
             " failures" + (t.failures ? "; " + t.first : "");
  return r;
}

CriterionResult ArrowEquivalence(const std::vector<Game>& games) {
  CriterionResult r{4, "loose and strict arrows agree for S, NW, SM"};
  std::ostringstream detail;
  bool pass = true;
  for (Tag tag : {Tag::kS, Tag::kNW, Tag::kSM}) {
    const RelationId rel = RelationId::Of(tag);
    const auto results = ForGames(static_cast<int>(games.size()),
                                  [&](int k) -> std::optional<std::string> {
                                    if (auto bad = check_arrow_equivalence(games[k], rel)) {
                                      return "differ at " + KeptText(games[k], bad->kept);
                                    }
                                    return std::nullopt;
                                  });
    const Tally t = Count(results);
    if (t.failures) pass = false;
    detail << TagName(tag) << ": " << t.failures << " divergent"
           << (t.failures ? " (" + t.first + ")" : "") << "; ";
  }
  const RelationId w = RelationId::Of(Tag::kW);
  const auto wres = ForGames(static_cast<int>(games.size()),
                             [&](int k) -> std::optional<std::string> {
                               if (check_arrow_equivalence(games[k], w)) return "W";
                               return std::nullopt;
                             });
  const bool tie_w = check_arrow_equivalence(TieGame(), w).has_value();
  detail << "W (informational): " << Count(wres).failures << " of " << games.size()
         << " suite games diverge, tie game " << (tie_w ? "diverges" : "agrees");
  r.pass = pass;
  r.detail = detail.str();
  return r;
}

CriterionResult MixedTheorems(const std::vector<Game>& games) {
  CriterionResult r{5, "SM unique and one-step closed, inherent WM equals SM, witnesses re-verify"};
  const RelationSpec sm = StrictSpec(RelationId::Of(Tag::kSM));
  std::atomic<long> verified{0};
  const auto results = ForGames(static_cast<int>(games.size()), [&](int k)
                                                                    -> std::optional<std::string> {
    const Game& g = games[k];
    const ConfluenceReport nf = normal_forms(g, sm, false);
    if (nf.normal_forms.size() != 1) {
      return "SM gives " + std::to_string(nf.normal_forms.size()) + " normal forms";
    }
    if (auto bad = check_one_step_closed(g, sm)) {
      return "SM not one-step closed at " + KeptText(g, bad->kept);
    }
    const auto inh = inherent_dominated_set(g, RelationId::Of(Tag::kWM));
    const auto strict = mixed_dominated_set(g, RelationId::Of(Tag::kSM), FullSets(g));
    for (int i = 0; i < g.num_players(); ++i) {
      StrategySet sm_set;
      for (const auto& w : strict[i]) sm_set = sm_set.with(w.dominated);
      if (sm_set != inh[i]) return "inherent WM differs from SM for player " + std::to_string(i);
    }
    for (Tag tag : {Tag::kSM, Tag::kWM, Tag::kNWM, Tag::kPEM, Tag::kVWM}) {
      const auto set = mixed_dominated_set(g, RelationId::Of(tag), FullSets(g));
      for (const auto& per_player : set) {
        for (const MixedWitness& w : per_player) {
          if (!oracle::DirectlyVerified(g, tag, w.player, w.dominated, w.dominator)) {
            return std::string(TagName(tag)) + " witness for " +
                   g.label(w.player, w.dominated) + " fails direct evaluation";
          }
          ++verified;
        }
      }
    }
    return std::nullopt;
  });
  const Tally t = Count(results);
  r.pass = t.failures == 0;
  r.detail = std::to_string(games.size()) + " games, " + std::to_string(verified.load()) +
             " witnesses re-verified, " + std::to_string(t.failures) + " failures" +
             (t.failures ? "; " + t.first : "");
  return r;
}

CriterionResult EquivalenceUniqueness(const std::vector<Game>& games,
                                      const std::vector<int>& mixed) {
  CriterionResult r{6, "unique normal form up to renaming for PE-style unions"};
  std::ostringstream detail;
  bool pass = true;
  struct Case {
    std::vector<Tag> tags;
    bool mixed_only;
  };
  const std::vector<Case> cases = {{{Tag::kPE}, false},
                                   {{Tag::kPEM}, false},
                                   {{Tag::kS, Tag::kPE}, false},
                                   {{Tag::kNW, Tag::kPE}, false},
                                   {{Tag::kSM, Tag::kPEM}, true},
                                   {{Tag::kNWM, Tag::kPEM}, true}};
  for (const Case& c : cases) {
    std::vector<int> ids;
    if (c.mixed_only) {
      ids = mixed;
    } else {
      for (int k = 0; k < static_cast<int>(games.size()); ++k) ids.push_back(k);
    }
    const RelationId rel = RelationId::Union(c.tags);
    const auto results = ForGames(static_cast<int>(ids.size()), [&](int n)
                                                                    -> std::optional<std::string> {
      const Game& g = games[ids[n]];
      const ConfluenceReport nf = normal_forms(g, StrictSpec(rel), true);
      if (nf.classes.size() != 1) {
        return "game " + std::to_string(ids[n]) + " has " + std::to_string(nf.classes.size()) +
               " classes";
      }
      const Game& rep = nf.normal_forms[0].game;
      if (c.tags == std::vector<Tag>{Tag::kPE} && !equivalent(purely_reduce(g), rep)) {
        return "purely_reduce differs on game " + std::to_string(ids[n]);
      }
      if (c.tags == std::vector<Tag>{Tag::kPEM} && !equivalent(fully_reduce(g), rep)) {
        return "fully_reduce differs on game " + std::to_string(ids[n]);
      }
      return std::nullopt;
    });
    int failures = 0;
    std::string first;
    for (const auto& m : results) {
      if (!m) continue;
      if (!failures) first = *m;
      ++failures;
    }
    if (failures) pass = false;
    detail << rel.ToString() << ": " << failures << "/" << ids.size()
           << (failures ? " (" + first + ")" : "") << "; ";
  }
  r.pass = pass;
  r.detail = detail.str();
  return r;
}

CriterionResult LeftCommutativity(const std::vector<Game>& games) {
  CriterionResult r{7, "left commutativity of PE over NW, W, S and PEM over NWM, WM"};
  std::ostringstream detail;
  bool pass = true;
  const std::vector<std::pair<Tag, Tag>> pairs = {{Tag::kPE, Tag::kNW},
                                                  {Tag::kPE, Tag::kW},
                                                  {Tag::kPE, Tag::kS},
                                                  {Tag::kPEM, Tag::kNWM},
                                                  {Tag::kPEM, Tag::kWM}};
  for (const auto& [one, two] : pairs) {
    const RelationSpec s1 = StrictSpec(RelationId::Of(one));
    const RelationSpec s2 = StrictSpec(RelationId::Of(two));
    const auto results = ForGames(static_cast<int>(games.size()),
                                  [&](int k) -> std::optional<std::string> {
                                    if (auto c = check_left_commutes(games[k], s1, s2)) {
                                      return "a=" + KeptText(games[k], c->a.kept) +
                                             " b=" + KeptText(games[k], c->b.kept) +
                                             " c=" + KeptText(games[k], c->c.kept);
                                    }
                                    return std::nullopt;
                                  });
    const Tally t = Count(results);
    if (t.failures) pass = false;
    detail << "(" << TagName(one) << "," << TagName(two) << "): " << t.failures
           << (t.failures ? " (" + t.first + ")" : "") << "; ";
  }
  r.pass = pass;
  r.detail = detail.str();
  return r;
}

CriterionResult StructuredElimination(const std::vector<Game>& games) {
  CriterionResult r{8, "structured W then PE elimination on TDI games"};
  std::atomic<int> tdi{0};
  const auto results = ForGames(static_cast<int>(games.size()), [&](int k)
                                                                    -> std::optional<std::string> {
    const Game& g = games[k];
    if (check_tdi(g)) return std::nullopt;
    ++tdi;
    const StructuredReport rep =
        structured_elimination_scenario(g, RelationId::Of(Tag::kW), RelationId::Of(Tag::kPE));
    if (!rep.pairwise_equivalent) return std::string("endpoints not pairwise equivalent");
    if (!rep.all_closed) return std::string("an endpoint admits a further step");
    return std::nullopt;
  });
  const Tally t = Count(results);
  r.pass = t.failures == 0 && tdi.load() > 0;
  r.detail = std::to_string(tdi.load()) + " of " + std::to_string(games.size()) +
             " games satisfy TDI, " + std::to_string(t.failures) + " failures" +
             (t.failures ? "; " + t.first : "");
  return r;
}

MixedStrategy RandomMixture(std::mt19937_64& rng, int player, const std::vector<int>& pool) {
  std::map<int, Rational> raw;
  long total = 0;
  for (int s : pool) {
    const long w = UniformInt(rng, 1, 5);
    raw[s] = Rational(w);
    total += w;
  }
  for (auto& [s, w] : raw) w = w / Rational(total);
  return MixedStrategy(player, raw);
}

CriterionResult RegularityAlgebra(const SuiteOptions& options) {
  CriterionResult r{9, "SM substitution and self-weight shrink on constructed witnesses"};
  std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  int substitution_failures = 0;
  int shrink_failures = 0;
  std::string first;
  for (int n = 0; n < options.witness_pairs; ++n) {
    const int rows = static_cast<int>(UniformInt(rng, 3, 5));
    const int cols = static_cast<int>(UniformInt(rng, 2, 4));
    std::vector<std::vector<Rational>> p0(rows, std::vector<Rational>(cols));
    std::vector<std::vector<Rational>> p1(rows, std::vector<Rational>(cols));
    for (int a = 0; a < rows; ++a) {
      for (int x = 0; x < cols; ++x) {
        p0[a][x] = Rational(UniformInt(rng, -3, 3));
        p1[a][x] = Rational(UniformInt(rng, -3, 3));
      }
    }
    const int t1 = static_cast<int>(UniformInt(rng, 0, rows - 1));
    int t2 = static_cast<int>(UniformInt(rng, 0, rows - 2));
    if (t2 >= t1) ++t2;
    auto mix_row = [&](const MixedStrategy& m, int x) {
      Rational v;
      for (const auto& [s, w] : m.weights()) v += w * p0[s][x];
      return v;
    };
    auto drawn_pool = [&](const std::vector<int>& exclude, std::optional<int> must) {
      std::vector<int> pool;
      for (int s = 0; s < rows; ++s) {
        if (std::find(exclude.begin(), exclude.end(), s) != exclude.end()) continue;
        if ((must && s == *must) || UniformInt(rng, 0, 1) == 1) pool.push_back(s);
      }
      if (pool.empty()) {
        for (int s = 0; s < rows; ++s) {
          if (std::find(exclude.begin(), exclude.end(), s) == exclude.end()) {
            pool.push_back(s);
            break;
          }
        }
      }
      return pool;
    };
    const MixedStrategy m2 = RandomMixture(rng, 0, drawn_pool({t1, t2}, std::nullopt));
    for (int x = 0; x < cols; ++x) p0[t2][x] = mix_row(m2, x) - Rational(UniformInt(rng, 1, 3), 2);
    const MixedStrategy m1 = RandomMixture(rng, 0, drawn_pool({t1}, t2));
    for (int x = 0; x < cols; ++x) p0[t1][x] = mix_row(m1, x) - Rational(UniformInt(rng, 1, 3), 2);

    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    for (int a = 0; a < rows; ++a) row_labels.push_back("A" + std::to_string(a + 1));
    for (int x = 0; x < cols; ++x) col_labels.push_back("B" + std::to_string(x + 1));
    std::vector<std::vector<std::pair<Rational, Rational>>> cells(rows);
    for (int a = 0; a < rows; ++a) {
      for (int x = 0; x < cols; ++x) cells[a].push_back({p0[a][x], p1[a][x]});
    }
    const Game g = TwoPlayer(row_labels, col_labels, cells);

    const bool premise = oracle::DirectlyVerified(g, Tag::kSM, 0, t1, m1) &&
                         oracle::DirectlyVerified(g, Tag::kSM, 0, t2, m2);
    const MixedStrategy sub = substitute(m1, t2, m2);
    if (!premise || !oracle::DirectlyVerified(g, Tag::kSM, 0, t1, sub) ||
        sub.support().contains(t2)) {
      if (!substitution_failures++) first = "pair " + std::to_string(n) + " substitution";
    }

    // Self-weight: put alpha of t1's own weight into m1.
    const Rational alpha(static_cast<long>(UniformInt(rng, 1, 3)), 4);
    std::map<int, Rational> with_self;
    for (const auto& [s, w] : m1.weights()) with_self[s] = w * alpha;
    with_self[t1] += Rational(1) - alpha;
    const MixedStrategy m(0, with_self);
    const MixedStrategy shrunk = shrink_self_weight(t1, m);
    if (!oracle::DirectlyVerified(g, Tag::kSM, 0, t1, m) ||
        !oracle::DirectlyVerified(g, Tag::kSM, 0, t1, shrunk) || shrunk.support().contains(t1) ||
        !(shrunk == m1)) {
      if (!shrink_failures++ && first.empty()) first = "pair " + std::to_string(n) + " shrink";
    }
  }
  r.pass = substitution_failures == 0 && shrink_failures == 0 && options.witness_pairs >= 100;
  r.detail = std::to_string(options.witness_pairs) + " pairs, substitution failures " +
             std::to_string(substitution_failures) + ", shrink failures " +
             std::to_string(shrink_failures) + (first.empty() ? "" : "; " + first);
  return r;
}

CriterionResult LpCrossCheck(const SuiteOptions& options, const std::vector<Game>& games) {
  CriterionResult r{10, "LP answers against support enumeration for SM and PEM"};
  std::atomic<long> decisions{0};
  const auto results = ForGames(static_cast<int>(games.size()), [&](int k)
                                                                    -> std::optional<std::string> {
    const Game& g = games[k];
    for (int i = 0; i < g.num_players(); ++i) {
      if (g.num_strategies(i) > 4) return std::nullopt;
    }
    const Restriction view(g);
    for (int i = 0; i < g.num_players(); ++i) {
      const auto& opp = view.opponent_offsets(i);
      const int n = g.num_strategies(i);
      for (int s = 0; s < n; ++s) {
        for (uint64_t bits = 1; bits < (uint64_t{1} << n); ++bits) {
          const StrategySet allowed(bits);
          if (allowed.contains(s)) continue;
          const auto sm = find_dominator(g, RelationId::Of(Tag::kSM), i, s, allowed);
          const Rational value = oracle::StrictMarginValue(view, i, s, allowed, opp);
          if (sm.has_value() != (value.sign() > 0)) {
            return "SM disagreement at player " + std::to_string(i) + " strategy " +
                   g.label(i, s);
          }
          if (sm) {
            Rational worst;
            bool seen = false;
            for (std::size_t off : opp) {
              Rational margin;
              for (const auto& [t, w] : sm->dominator.weights()) {
                margin += w * (view.payoff_at(i, t, off, i) - view.payoff_at(i, s, off, i));
              }
              if (!seen || margin < worst) worst = margin;
              seen = true;
            }
            if (worst.sign() <= 0 || worst > value) {
              return "SM witness margin outside (0, value] for " + g.label(i, s);
            }
          }
          const auto pem = find_dominator(g, RelationId::Of(Tag::kPEM), i, s, allowed);
          if (pem.has_value() != oracle::PayoffEquivalentMixtureExists(view, i, s, allowed, opp)) {
            return "PEM disagreement at player " + std::to_string(i) + " strategy " +
                   g.label(i, s);
          }
          decisions += 2;
        }
      }
    }
    return std::nullopt;
  });
  const Tally t = Count(results);
  r.pass = t.failures == 0 && decisions.load() >= options.lp_decisions;
  r.detail = std::to_string(decisions.load()) + " decisions, " + std::to_string(t.failures) +
             " disagreements" + (t.failures ? "; " + t.first : "");
  return r;
}

}  // namespace

std::vector<Game> SuiteGames(const SuiteOptions& options) {
  std::mt19937_64 seeds(options.seed);
  std::vector<Game> out;
  out.reserve(options.count);
  for (int k = 0; k < options.count; ++k) {
    const uint64_t seed = seeds();
    std::mt19937_64 shape(seed);
    GeneratorParams p;
    p.players = static_cast<int>(UniformInt(shape, 2, 3));
    p.strategies.clear();
    for (int i = 0; i < p.players; ++i) {
      p.strategies.push_back(static_cast<int>(UniformInt(shape, 2, 4)));
    }
    p.lo = -3;
    p.hi = 3;
    p.dup_prob = Rational(1, 4);
    p.seed = seed;
    out.push_back(random_game(p));
  }
  return out;
}

Game TieGame() {
  return TwoPlayer({"T", "B"}, {"L", "R"},
                   {{{Rational(2), Rational(1)}, {Rational(2), Rational(1)}},
                    {{Rational(2), Rational(1)}, {Rational(1), Rational(0)}}});
}

Game InherentWeakGame() {
  return TwoPlayer({"T", "M", "B"}, {"L", "R"},
                   {{{Rational(2), Rational(0)}, {Rational(1), Rational(0)}},
                    {{Rational(1), Rational(0)}, {Rational(2), Rational(0)}},
                    {{Rational(1), Rational(0)}, {Rational(3), Rational(0)}}});
}

Game WeakNotInherentGame() {
  return TwoPlayer({"T", "B"}, {"L", "R"},
                   {{{Rational(2), Rational(0)}, {Rational(1), Rational(0)}},
                    {{Rational(1), Rational(0)}, {Rational(1), Rational(0)}}});
}

CriterionResult CheckCriterion(int id, const SuiteOptions& options,
                               const std::vector<Game>& games) {
  const auto start = Clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = TieGameRegression(); r.limit_seconds = 1; break;
    case 2: r = InherentRegression(); r.limit_seconds = 1; break;
    case 3: r = StrictElimination(games); r.limit_seconds = 300; break;
    case 4: r = ArrowEquivalence(games); break;
    case 5: r = MixedTheorems(games); break;
    case 6:
      r = EquivalenceUniqueness(games, MixedSubSuite(games, options.mixed_max_total));
      r.limit_seconds = 900;
      break;
    case 7: r = LeftCommutativity(games); break;
    case 8: r = StructuredElimination(games); break;
    case 9: r = RegularityAlgebra(options); break;
    case 10: r = LpCrossCheck(options, games); break;
    default: throw Error(ErrorKind::kInvalidParams, "no criterion " + std::to_string(id));
  }
  r.seconds = Since(start);
  if (r.limit_seconds > 0 && r.seconds >= r.limit_seconds) {
    r.pass = false;
    r.detail += "; time limit exceeded";
  }
  return r;
}

std::vector<CriterionResult> RunAcceptanceSuite(const SuiteOptions& options) {
  const std::vector<Game> games = SuiteGames(options);
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 10; ++id) out.push_back(CheckCriterion(id, options, games));
  return out;
}

std::string FormatResult(const CriterionResult& r) {
  char timing[64];
  if (r.limit_seconds > 0) {
    std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", r.seconds, r.limit_seconds);
  } else {
    std::snprintf(timing, sizeof timing, "%.2f s", r.seconds);
  }
  return std::string(r.pass ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.title +
         " (" + timing + "): " + r.detail;
}

}  // namespace dominia::suite
