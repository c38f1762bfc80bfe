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

#ifndef DOMINIA_RANDOM_GAME_H_
#define DOMINIA_RANDOM_GAME_H_

#include <cstdint>
#include <random>
#include <vector>

#include "dominia/game.h"
#include "dominia/rational.h"

namespace dominia {

struct GeneratorParams {
  int players = 2;
  std::vector<int> strategies{2, 2};  // one count per player
  long lo = -3;
  long hi = 3;
  Rational dup_prob{1, 4};
  uint64_t seed = 0;
  int max_strategies = 6;
};

// Uniform integer in [lo, hi] by rejection sampling on raw 64-bit draws,
// so the stream of values depends only on the engine's output.
long UniformInt(std::mt19937_64& rng, long lo, long hi);

// Bernoulli draw with an exact rational probability p = a / b:
// true iff a uniform draw from [0, b) lands below a.
bool Bernoulli(std::mt19937_64& rng, const Rational& p);

// Deterministic random game. The engine is std::mt19937_64 seeded with
// `seed`. Payoffs are drawn in flat order (profiles with the last player
// fastest, then players). Then each player with two or more strategies,
// with probability dup_prob, has one random strategy's payoffs (for every
// player) copied onto another random strategy. Labels are A1, A2, ... for
// player 0, B1, ... for player 1, and so on.
// Errors: kInvalidParams.
Game random_game(const GeneratorParams& p);

}  // namespace dominia

#endif  // DOMINIA_RANDOM_GAME_H_
