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

#ifndef DOMINIA_LIMITS_H_
#define DOMINIA_LIMITS_H_

#include <functional>
#include <vector>

#include "dominia/game.h"

namespace dominia {

// Size bounds for the exhaustive procedures. Everything quantified over
// restrictions or subsets is exponential, so each such entry point checks
// its input against these and throws kSizeBoundExceeded.
struct Limits {
  // Total strategy count of a game whose restriction lattice is enumerated.
  int max_total_strategies = 14;
  // log2 of the number of opponents' profile subsets inherent dominance
  // may enumerate.
  int max_inherent_opponent_profiles = 16;
};

// Defaults, with max_total_strategies overridden by DOMINIA_MAX_STRATEGIES
// when that variable holds a positive integer.
Limits DefaultLimits();

void CheckTotalStrategies(const Game& g, const Limits& limits);

// Calls `fn` for every non-degenerate restriction of `g`, player 0's subset
// varying slowest and each subset mask ascending.
void ForEachRestriction(const Game& g,
                        const std::function<bool(const std::vector<StrategySet>&)>& fn);

}  // namespace dominia

#endif  // DOMINIA_LIMITS_H_
