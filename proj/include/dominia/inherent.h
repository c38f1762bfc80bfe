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

#ifndef DOMINIA_INHERENT_H_
#define DOMINIA_INHERENT_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "dominia/game.h"
#include "dominia/limits.h"
#include "dominia/mixed.h"
#include "dominia/relation.h"

namespace dominia {

// Whether a strategy is dominated on every non-empty subset T of the
// opponents' joint profiles, by a dominator that may change with T.
//
// Subsets are bitmasks over Restriction::opponent_offsets(i). Dominators
// range over `must_survive` when set and over S_i minus the strategy
// otherwise.
struct InherentQuery {
  RelationId base;
  int player = 0;
  int strategy = 0;
  std::optional<StrategySet> must_survive;
};

struct InherentResult {
  bool dominated = false;
  // First subset without a dominator when `dominated` is false.
  std::optional<uint64_t> uncovered;
  // witnesses[witness_of[T]] dominates on T; -1 where none. Indexed by
  // subset mask, entry 0 unused. Filled only when requested.
  std::vector<int> witness_of;
  std::vector<MixedWitness> witnesses;
};

// Core check on a view with local indices. `allowed` should not contain s.
// Errors: kSizeBoundExceeded when player i faces more opponents' profiles
// than limits.max_inherent_opponent_profiles.
InherentResult InherentCheck(const Restriction& view, const RelationId& base, int i, int s,
                             StrategySet allowed, bool want_table,
                             const Limits& limits = DefaultLimits());

InherentResult is_inherently_dominated(const Game& g, const InherentQuery& q,
                                       const Limits& limits = DefaultLimits());

// Inherently dominated strategies of every player; `scope`, when given,
// holds one must-survive set per player.
std::vector<StrategySet> inherent_dominated_set(
    const Game& g, const RelationId& base,
    const std::optional<std::vector<StrategySet>>& scope = std::nullopt,
    const Limits& limits = DefaultLimits());

}  // namespace dominia

#endif  // DOMINIA_INHERENT_H_
