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

#ifndef DOMINIA_REDUCTION_H_
#define DOMINIA_REDUCTION_H_

#include <optional>
#include <utility>
#include <vector>

#include "dominia/explore.h"
#include "dominia/game.h"
#include "dominia/limits.h"
#include "dominia/relation.h"

namespace dominia {

// A restriction of the root game, by kept strategy sets and materialized.
struct StateRef {
  std::vector<StrategySet> kept;
  Game game;
};

StateRef MakeStateRef(const Game& root, const std::vector<StrategySet>& kept);

// All one-step successors of g, materialized, in generation order.
std::vector<Game> successors(const Game& g, const RelationSpec& spec,
                             const Limits& limits = DefaultLimits());

struct PathStep {
  std::vector<StrategySet> removed;  // root indices
  StateRef result;
  bool strict_valid = false;  // every removed strategy kept a surviving dominator
  bool degenerate = false;
};

struct ReductionPath {
  Game root;
  RelationSpec spec;
  std::vector<PathStep> steps;

  const Game& final_game() const { return steps.empty() ? root : steps.back().result.game; }
};

// Deletes everything currently dominated (dominators drawn from the
// pre-step sets) until nothing is. Stops at a degenerate game.
ReductionPath maximal_reduce(const Game& g, const RelationSpec& spec);

// Groups games into ~-classes; classes are ordered by first member.
std::vector<std::vector<int>> EquivalenceClasses(const std::vector<Game>& games);

struct ConfluenceReport {
  RelationSpec spec;
  bool up_to_renaming = false;
  std::vector<StateRef> normal_forms;
  std::vector<std::vector<int>> classes;
  int explored_states = 0;
  bool unique = false;                 // exactly one normal form
  bool unique_up_to_renaming = false;  // exactly one class
  // Two normal forms that differ (in different classes when up to
  // renaming), when the requested uniqueness fails.
  std::optional<std::pair<int, int>> counterexample;

  bool holds() const { return up_to_renaming ? unique_up_to_renaming : unique; }
};

ConfluenceReport normal_forms(const Game& g, const RelationSpec& spec, bool up_to_renaming,
                              const Limits& limits = DefaultLimits());

// a -> b and a -> c with b, c having no common descendant (no ~-equivalent
// descendants when up to renaming).
struct SplitCounterexample {
  StateRef source;
  StateRef left;
  StateRef right;
};

std::optional<SplitCounterexample> check_weak_confluence(
    const Game& g, const RelationSpec& spec, bool up_to_renaming,
    const Limits& limits = DefaultLimits());

// The first reachable state admitting no common one-step-or-equal
// descendant of itself and all its successors.
std::optional<StateRef> check_one_step_closed(const Game& g, const RelationSpec& spec,
                                              const Limits& limits = DefaultLimits());

// The first reachable state whose proper descendants under single-strategy
// steps differ from those under any-subset steps.
std::optional<StateRef> check_one_at_a_time(const Game& g, const RelationId& r,
                                            Arrow arrow = Arrow::kStrict,
                                            const Limits& limits = DefaultLimits());

// The first reachable state where the loose and strict arrows give
// different successor sets.
std::optional<StateRef> check_arrow_equivalence(const Game& g, const RelationId& r,
                                                Step step = Step::kAnySubset,
                                                const Limits& limits = DefaultLimits());

// a ->1 b ->2 c with no d such that a ->2 d ->1* c.
struct CommuteCounterexample {
  StateRef a;
  StateRef b;
  StateRef c;
};

std::optional<CommuteCounterexample> check_left_commutes(
    const Game& g, const RelationSpec& spec1, const RelationSpec& spec2,
    const Limits& limits = DefaultLimits());

struct StructuredReport {
  std::vector<StateRef> base_normal_forms;
  // endpoints[k]: the equiv normal forms reached from base_normal_forms[k],
  // as games.
  std::vector<std::vector<Game>> endpoints;
  bool pairwise_equivalent = false;
  bool all_closed = false;  // no base-or-equiv step applies to any endpoint

  bool holds() const { return pairwise_equivalent && all_closed; }
};

// Eliminates by `base` to each normal form, then by `equiv` from there.
StructuredReport structured_elimination_scenario(const Game& g, const RelationId& base,
                                                 const RelationId& equiv,
                                                 const Limits& limits = DefaultLimits());

}  // namespace dominia

#endif  // DOMINIA_REDUCTION_H_
