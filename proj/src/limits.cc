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

#include "dominia/limits.h"

#include <cstdlib>
#include <string>

#include "dominia/errors.h"

namespace dominia {

Limits DefaultLimits() {
  Limits limits;
  if (const char* env = std::getenv("DOMINIA_MAX_STRATEGIES")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 64) {
      limits.max_total_strategies = static_cast<int>(v);
    }
  }
  return limits;
}

void CheckTotalStrategies(const Game& g, const Limits& limits) {
  if (g.total_strategies() > limits.max_total_strategies) {
    throw Error(ErrorKind::kSizeBoundExceeded,
                "game has " + std::to_string(g.total_strategies()) +
                    " strategies; bound is " +
                    std::to_string(limits.max_total_strategies));
  }
}

void ForEachRestriction(const Game& g,
                        const std::function<bool(const std::vector<StrategySet>&)>& fn) {
  const int n = g.num_players();
  std::vector<uint64_t> full(n);
  for (int i = 0; i < n; ++i) full[i] = StrategySet::All(g.num_strategies(i)).bits();
  std::vector<StrategySet> kept(n, StrategySet(1));
  if (g.is_degenerate()) return;
  while (true) {
    if (!fn(kept)) return;
    int i = n - 1;
    for (; i >= 0; --i) {
      if (kept[i].bits() < full[i]) {
        kept[i] = StrategySet(kept[i].bits() + 1);
        break;
      }
      kept[i] = StrategySet(1);
    }
    if (i < 0) return;
  }
}

}  // namespace dominia
