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

#ifndef DOMINIA_EQUIVALENCE_H_
#define DOMINIA_EQUIVALENCE_H_

#include <optional>
#include <string>
#include <vector>

#include "dominia/game.h"
#include "dominia/limits.h"

namespace dominia {

// Per-player bijections: maps[i][s] is the strategy of the second game
// that strategy s of player i in the first game is renamed to.
struct Renaming {
  std::vector<std::vector<int>> maps;

  Renaming Inverse() const;
  // (this then other)
  Renaming Then(const Renaming& other) const;
  friend bool operator==(const Renaming&, const Renaming&) = default;
};

// True iff `f` is a per-player bijection carrying every payoff of g1 onto g2.
bool PreservesPayoffs(const Game& g1, const Game& g2, const Renaming& f);

// A renaming witnessing g1 ~ g2, or nullopt. Players are never permuted.
std::optional<Renaming> equivalent(const Game& g1, const Game& g2);

// Invariant under renaming; a pre-filter for equivalent(), never a decider.
std::string canonical_signature(const Game& g);

// The game obtained by moving strategy s of player i to position
// perm[i][s], keeping labels attached to their strategies.
Game RenameGame(const Game& g, const std::vector<std::vector<int>>& perm);

// Least-index representative of every payoff-equivalence class, per player.
std::vector<StrategySet> PurelyReducedKeep(const Game& g);
Game purely_reduce(const Game& g);

// Removes the least-index randomized-redundant strategy (player 0 first)
// until none is left.
Game fully_reduce(const Game& g, const Limits& limits = DefaultLimits());

}  // namespace dominia

#endif  // DOMINIA_EQUIVALENCE_H_
