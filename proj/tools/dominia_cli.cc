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

// Command-line driver: eliminate, check, confluence, equiv, random, suite.
// Exit codes: 0 success or property holds, 1 counterexample found,
// 2 usage or parse error, 3 size bound exceeded.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dominia/dominance_pure.h"
#include "dominia/equivalence.h"
#include "dominia/errors.h"
#include "dominia/explore.h"
#include "dominia/game_io.h"
#include "dominia/limits.h"
#include "dominia/mixed.h"
#include "dominia/random_game.h"
#include "dominia/reduction.h"
#include "dominia/relation.h"
#include "suite.h"

namespace dominia {
namespace {

constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kUsage = 2;
constexpr int kSizeBound = 3;

void Emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json ProfileJson(const Game& g, const JointProfile& p) {
  Json out = Json::array();
  for (int i = 0; i < g.num_players(); ++i) out.push_back(g.label(i, p[i]));
  return out;
}

Json ViolationJson(const Game& g, const RestrictionViolation& v) {
  return {{"restriction", ToJson(v.restriction, g)},
          {"player", v.player},
          {"dominated", g.label(v.player, v.dominated)},
          {"dominator", g.label(v.player, v.dominator)}};
}

Json ViolationJson(const Game& g, const MixedRestrictionViolation& v) {
  return {{"restriction", ToJson(v.restriction, g)},
          {"player", v.player},
          {"dominated", g.label(v.player, v.dominated)},
          {"dominator", ToJson(v.dominator, g)}};
}

Json SubsetJson(const Game& g, int player, StrategySet set) {
  Json out = Json::array();
  for (int s : set.indices()) out.push_back(g.label(player, s));
  return out;
}

// Follows the first single-strategy successor until none is left.
ReductionPath SinglePath(const Game& g, const RelationSpec& spec) {
  const SuccessorGenerator gen(g, spec);
  ReductionPath path{g, spec, {}};
  uint64_t state = gen.codec().Full();
  for (;;) {
    const auto next = gen.Successors(state);
    if (next.empty()) break;
    const Transition& t = next.front();
    const auto kept = gen.codec().Kept(t.result);
    path.steps.push_back(PathStep{gen.codec().Kept(t.removed), MakeStateRef(g, kept),
                                  gen.StrictValid(state, t.removed),
                                  gen.codec().IsDegenerate(t.result)});
    state = t.result;
  }
  return path;
}

struct Options {
  std::vector<std::string> games;
  std::string relation = "S";
  std::string arrow = "strict";
  std::string mode = "enumerate";
  std::string property;
  bool up_to_renaming = false;
  int players = 2;
  std::vector<int> strategies{2};
  uint64_t seed = 0;
  std::vector<long> range{-3, 3};
  std::string dup_prob = "1/4";
  std::string out;
  int count = 200;
};

int Eliminate(const Options& o) {
  const Game g = ReadGameFile(o.games.at(0));
  RelationSpec spec{RelationId::Parse(o.relation),
                    o.arrow == "loose" ? Arrow::kLoose : Arrow::kStrict, Step::kAnySubset};
  if (o.mode == "maximal") {
    spec.step = Step::kMaximal;
    Emit(ToJson(maximal_reduce(g, spec)));
    return kOk;
  }
  if (o.mode == "single") {
    spec.step = Step::kSingleStrategy;
    Emit(ToJson(SinglePath(g, spec)));
    return kOk;
  }
  const ConfluenceReport report = normal_forms(g, spec, o.up_to_renaming, DefaultLimits());
  Emit(ToJson(report));
  return report.holds() ? kOk : kCounterexample;
}

int Check(const Options& o) {
  const Game g = ReadGameFile(o.games.at(0));
  const RelationId r = RelationId::Parse(o.relation);
  const Limits limits = DefaultLimits();
  Json out{{"kind", "property_check"}, {"property", o.property}};
  Json violation = nullptr;
  const std::string& p = o.property;
  if (p == "tdi") {
    if (auto v = check_tdi(g)) {
      violation = {{"player", v->player},
                   {"other_player", v->other_player},
                   {"r", g.label(v->player, v->r)},
                   {"t", g.label(v->player, v->t)},
                   {"profile", ProfileJson(g, v->profile)}};
    }
  } else if (p == "tdi+") {
    if (auto v = check_tdi_plus(g, limits)) violation = ViolationJson(g, *v);
  } else if (p == "tdi++") {
    if (auto v = check_tdi_plus_plus(g, limits)) violation = ViolationJson(g, *v);
  } else if (p == "tdim") {
    if (auto v = check_tdim(g)) {
      violation = {{"player", v->player},
                   {"other_player", v->other_player},
                   {"r", g.label(v->player, v->r)},
                   {"profile", ProfileJson(g, v->profile)},
                   {"mixed", ToJson(v->m, g)}};
    }
  } else if (p == "tdim+") {
    if (auto v = check_tdim_plus(g, limits)) violation = ViolationJson(g, *v);
  } else if (p == "tdi*") {
    if (auto v = check_tdi_star(g, limits)) violation = ViolationJson(g, *v);
  } else if (p == "hereditary") {
    out["relation"] = r.ToString();
    if (r.any_mixed()) {
      if (auto v = check_mixed_hereditary(g, r, limits)) violation = ViolationJson(g, *v);
    } else if (auto v = is_hereditary(g, r, limits)) {
      violation = ViolationJson(g, *v);
    }
  } else if (p == "iiia") {
    out["relation"] = r.ToString();
    if (r.any_mixed()) {
      if (auto v = check_mixed_iiia(g, r, limits)) {
        violation = {{"player", v->player},
                     {"subset", SubsetJson(g, v->player, v->subset)},
                     {"dominated", g.label(v->player, v->dominated)},
                     {"holds_in_full", v->holds_in_full}};
      }
    } else if (auto v = check_iiia(g, r, limits)) {
      violation = {{"player", v->player},
                   {"subset", SubsetJson(g, v->player, v->subset)},
                   {"dominated", g.label(v->player, v->dominated)},
                   {"dominator", g.label(v->player, v->dominator)},
                   {"holds_in_full", v->holds_in_full}};
    }
  } else if (p == "spo") {
    out["relation"] = r.ToString();
    if (!is_strict_partial_order(g, r)) violation = Json::object();
  } else {
    throw Error(ErrorKind::kInvalidParams, "unknown property '" + p + "'");
  }
  out["holds"] = violation.is_null();
  out["violation"] = violation;
  Emit(out);
  return violation.is_null() ? kOk : kCounterexample;
}

int Confluence(const Options& o) {
  const Game g = ReadGameFile(o.games.at(0));
  const RelationSpec spec = StrictSpec(RelationId::Parse(o.relation));
  const Limits limits = DefaultLimits();
  const ConfluenceReport report = normal_forms(g, spec, o.up_to_renaming, limits);
  const auto split = check_weak_confluence(g, spec, o.up_to_renaming, limits);
  Json out{{"kind", "confluence_check"},
           {"relation", spec.ToString()},
           {"up_to_renaming", o.up_to_renaming},
           {"weakly_confluent", !split.has_value()},
           {"split", split ? ToJson(*split) : Json(nullptr)},
           {"normal_forms", ToJson(report)}};
  Emit(out);
  return report.holds() && !split ? kOk : kCounterexample;
}

int Equiv(const Options& o) {
  if (o.games.size() != 2) throw Error(ErrorKind::kInvalidParams, "equiv needs two --game files");
  const Game a = ReadGameFile(o.games[0]);
  const Game b = ReadGameFile(o.games[1]);
  const auto f = equivalent(a, b);
  Emit({{"kind", "equivalence"},
        {"equivalent", f.has_value()},
        {"renaming", f ? ToJson(*f, a, b) : Json(nullptr)}});
  return f ? kOk : kCounterexample;
}

int Random(const Options& o) {
  GeneratorParams p;
  p.players = o.players;
  p.strategies = o.strategies;
  if (p.strategies.size() == 1) p.strategies.assign(o.players, o.strategies[0]);
  if (o.range.size() != 2) throw Error(ErrorKind::kInvalidParams, "--range takes LO HI");
  p.lo = o.range[0];
  p.hi = o.range[1];
  p.dup_prob = Rational::Parse(o.dup_prob);
  p.seed = o.seed;
  const std::string text = serialize_game(random_game(p));
  if (o.out.empty()) {
    std::cout << text;
  } else {
    WriteTextFile(o.out, text);
  }
  return kOk;
}

int Suite(const Options& o) {
  suite::SuiteOptions options;
  options.seed = o.seed;
  options.count = o.count;
  const auto games = suite::SuiteGames(options);
  Json results = Json::array();
  bool ok = true;
  for (int id = 1; id <= 10; ++id) {
    const suite::CriterionResult r = suite::CheckCriterion(id, options, games);
    std::cerr << suite::FormatResult(r) << "\n";
    results.push_back({{"id", r.id},
                       {"title", r.title},
                       {"pass", r.pass},
                       {"detail", r.detail},
                       {"seconds", r.seconds},
                       {"limit_seconds", r.limit_seconds}});
    ok = ok && r.pass;
  }
  Emit({{"kind", "suite_report"},
        {"seed", o.seed},
        {"count", o.count},
        {"pass", ok},
        {"results", results}});
  return ok ? kOk : kCounterexample;
}

int Run(int argc, char** argv) {
  CLI::App app{"Iterated elimination of dominated strategies with exact arithmetic"};
  app.require_subcommand(1);
  Options o;

  auto* elim = app.add_subcommand("eliminate", "Eliminate dominated strategies");
  elim->add_option("--game", o.games, "Game JSON file")->required()->expected(1);
  elim->add_option("--relation", o.relation, "Relation, e.g. S, NW|PE, inh-W");
  elim->add_option("--arrow", o.arrow)->check(CLI::IsMember({"strict", "loose"}));
  elim->add_option("--mode", o.mode)->check(CLI::IsMember({"maximal", "single", "enumerate"}));
  elim->add_flag("--up-to-renaming", o.up_to_renaming);

  auto* check = app.add_subcommand("check", "Check a structural property");
  check->add_option("--game", o.games)->required()->expected(1);
  check->add_option("--property", o.property)
      ->required()
      ->check(CLI::IsMember(
          {"tdi", "tdi+", "tdi++", "hereditary", "iiia", "spo", "tdim", "tdim+", "tdi*"}));
  check->add_option("--relation", o.relation);

  auto* conf = app.add_subcommand("confluence", "Normal forms and weak confluence");
  conf->add_option("--game", o.games)->required()->expected(1);
  conf->add_option("--relation", o.relation);
  conf->add_flag("--up-to-renaming", o.up_to_renaming);

  auto* equiv = app.add_subcommand("equiv", "Equivalence up to strategy renaming");
  equiv->add_option("--game", o.games)->required()->expected(1)->multi_option_policy(
      CLI::MultiOptionPolicy::TakeAll);

  auto* random = app.add_subcommand("random", "Generate a seeded random game");
  random->add_option("--players", o.players);
  random->add_option("--strategies", o.strategies, "One count, or one per player");
  random->add_option("--seed", o.seed);
  random->add_option("--range", o.range)->expected(2);
  random->add_option("--dup-prob", o.dup_prob);
  random->add_option("--out", o.out);

  auto* suite_cmd = app.add_subcommand("suite", "Run the acceptance property suite");
  o.seed = suite::SuiteOptions{}.seed;
  suite_cmd->add_option("--seed", o.seed);
  suite_cmd->add_option("--count", o.count);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (random->parsed() && !random->count("--seed")) o.seed = 0;

  try {
    if (elim->parsed()) return Eliminate(o);
    if (check->parsed()) return Check(o);
    if (conf->parsed()) return Confluence(o);
    if (equiv->parsed()) return Equiv(o);
    if (random->parsed()) return Random(o);
    return Suite(o);
  } catch (const Error& e) {
    std::cerr << Json{{"error", std::string(ErrorKindName(e.kind()))}, {"message", e.what()}}.dump()
              << "\n";
    return e.kind() == ErrorKind::kSizeBoundExceeded ? kSizeBound : kUsage;
  }
}

}  // namespace
}  // namespace dominia

int main(int argc, char** argv) { return dominia::Run(argc, argv); }
