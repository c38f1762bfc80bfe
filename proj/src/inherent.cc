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

#include "dominia/inherent.h"

#include <algorithm>
#include <bit>
#include <string>

#include "dominia/dominance_pure.h"
#include "dominia/errors.h"

namespace dominia {
namespace {

// All non-empty subset masks of an n-element set: the full set first, then
// by size, then by value.
std::vector<uint64_t> SubsetOrder(int n) {
  const uint64_t full = (uint64_t{1} << n) - 1;
  std::vector<uint64_t> order;
  order.reserve(full);
  order.push_back(full);
  for (uint64_t m = 1; m < full; ++m) order.push_back(m);
  std::stable_sort(order.begin() + 1, order.end(), [](uint64_t a, uint64_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  return order;
}

struct Cover {
  std::vector<int> witness_of;
  std::vector<MixedWitness> witnesses;
  uint64_t uncovered_count = 0;

  explicit Cover(int n) : witness_of(std::size_t{1} << n, -1) {
    uncovered_count = witness_of.size() - 1;
  }

  // Marks every still-uncovered subset the region covers.
  void Mark(const WitnessRegion& region, MixedWitness w) {
    const int id = static_cast<int>(witnesses.size());
    bool used = false;
    // Only subsets of `allowed` can be covered; walk them directly.
    for (uint64_t t = region.allowed; t != 0; t = (t - 1) & region.allowed) {
      if (witness_of[t] >= 0 || !region.Covers(t)) continue;
      witness_of[t] = id;
      --uncovered_count;
      used = true;
    }
    if (used) witnesses.push_back(std::move(w));
  }
};

}  // namespace

InherentResult InherentCheck(const Restriction& view, const RelationId& base, int i, int s,
                             StrategySet allowed, bool want_table, const Limits& limits) {
  const auto& opp = view.opponent_offsets(i);
  const int n = static_cast<int>(opp.size());
  if (n > limits.max_inherent_opponent_profiles || n > 30) {
    throw Error(ErrorKind::kSizeBoundExceeded,
                "player faces " + std::to_string(n) + " opponents' profiles; bound is " +
                    std::to_string(limits.max_inherent_opponent_profiles));
  }
  allowed = allowed.without(s) & StrategySet::All(view.num_strategies(i));
  InherentResult result;
  Cover cover(n);
  // Pure dominators first; for mixed members these are point masses.
  for (int t : allowed.indices()) {
    auto facts = PureFacts(view, i, s, t, opp);
    for (Tag tag : base.members) {
      cover.Mark(RegionOf(tag, facts), MixedWitness{i, s, MixedStrategy::PointMass(i, t), tag});
    }
  }
  if (cover.uncovered_count > 0 && base.any_mixed() && !allowed.empty()) {
    std::vector<std::size_t> sub;
    for (uint64_t t : SubsetOrder(n)) {
      if (cover.witness_of[t] >= 0) continue;
      sub.clear();
      for (int x = 0; x < n; ++x) {
        if ((t >> x) & 1U) sub.push_back(opp[x]);
      }
      bool found = false;
      for (Tag tag : base.members) {
        if (!IsMixed(tag)) continue;
        auto m = SolveMixed(view, tag, i, s, allowed, sub);
        if (!m) continue;
        auto facts = MixedFacts(view, i, s, *m, opp);
        WitnessRegion region = RegionOf(tag, facts);
        cover.Mark(region, MixedWitness{i, s, std::move(*m), tag});
        found = true;
        break;
      }
      if (!found) break;
      if (cover.uncovered_count == 0) break;
    }
  }
  result.dominated = cover.uncovered_count == 0;
  if (!result.dominated) {
    for (uint64_t t : SubsetOrder(n)) {
      if (cover.witness_of[t] < 0) {
        result.uncovered = t;
        break;
      }
    }
  }
  if (want_table) {
    result.witness_of = std::move(cover.witness_of);
    result.witnesses = std::move(cover.witnesses);
  }
  return result;
}

InherentResult is_inherently_dominated(const Game& g, const InherentQuery& q,
                                       const Limits& limits) {
  if (q.player < 0 || q.player >= g.num_players() || q.strategy < 0 ||
      q.strategy >= g.num_strategies(q.player)) {
    throw Error(ErrorKind::kIndexOutOfRange, "strategy index out of range");
  }
  const StrategySet all = StrategySet::All(g.num_strategies(q.player));
  StrategySet allowed = q.must_survive.value_or(all);
  if (!allowed.subset_of(all)) {
    throw Error(ErrorKind::kIndexOutOfRange, "must-survive set outside the strategy set");
  }
  return InherentCheck(Restriction(g), q.base, q.player, q.strategy, allowed, true, limits);
}

std::vector<StrategySet> inherent_dominated_set(
    const Game& g, const RelationId& base,
    const std::optional<std::vector<StrategySet>>& scope, const Limits& limits) {
  Restriction view(g);
  std::vector<StrategySet> out(g.num_players());
  for (int i = 0; i < g.num_players(); ++i) {
    const StrategySet allowed =
        scope ? (*scope)[i] : StrategySet::All(g.num_strategies(i));
    for (int s = 0; s < g.num_strategies(i); ++s) {
      if (InherentCheck(view, base, i, s, allowed, false, limits).dominated) {
        out[i] = out[i].with(s);
      }
    }
  }
  return out;
}

}  // namespace dominia
