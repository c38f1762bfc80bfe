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

#include <gtest/gtest.h>

#include <bit>

#include "dominia/dominance_pure.h"
#include "dominia/errors.h"
#include "dominia/mixed.h"
#include "test_util.h"

namespace dominia {
namespace {

using testing::Fixture;
using testing::Sampled;

const RelationId kW = RelationId::Of(Tag::kW);

// Subset-by-subset check against the definition: for every non-empty set
// of opponents' profiles some other strategy dominates on that sub-game.
bool NaiveInherent(const Game& g, const RelationId& base, int i, int s) {
  const Restriction view(g);
  const auto& opp = view.opponent_offsets(i);
  for (uint64_t subset = 1; subset < (uint64_t{1} << opp.size()); ++subset) {
    std::vector<std::size_t> picked;
    for (std::size_t x = 0; x < opp.size(); ++x) {
      if ((subset >> x) & 1U) picked.push_back(opp[x]);
    }
    bool covered = false;
    for (Tag tag : base.members) {
      if (IsMixed(tag)) {
        covered = covered || SolveMixed(view, tag, i, s,
                                        StrategySet::All(g.num_strategies(i)).without(s), picked)
                                 .has_value();
      } else {
        for (int t = 0; t < g.num_strategies(i) && !covered; ++t) {
          covered = t != s && DominatesOn(view, tag, i, s, t, picked);
        }
      }
    }
    if (!covered) return false;
  }
  return true;
}

TEST(InherentTest, WeakExamples) {
  const Game a = Fixture("inherent_weak_3x2.json");
  const InherentResult m = is_inherently_dominated(a, {kW, 0, 1, {}});
  EXPECT_TRUE(m.dominated);
  for (int t = 0; t < 3; ++t) EXPECT_FALSE(dominates(a, RelationId::Of(Tag::kS), 0, 1, t));
  EXPECT_FALSE(dominates(a, kW, 0, 1, 0));

  const Game b = Fixture("weak_not_inherent_2x2.json");
  EXPECT_TRUE(dominates(b, kW, 0, 1, 0));
  const InherentResult r = is_inherently_dominated(b, {kW, 0, 1, {}});
  EXPECT_FALSE(r.dominated);
  ASSERT_TRUE(r.uncovered.has_value());
  EXPECT_EQ(*r.uncovered, 0b10u);  // column R alone
}

TEST(InherentTest, WitnessTable) {
  const Game a = Fixture("inherent_weak_3x2.json");
  const Restriction view(a);
  const InherentResult res =
      InherentCheck(view, kW, 0, 1, StrategySet(0b101), true);
  ASSERT_TRUE(res.dominated);
  ASSERT_EQ(res.witness_of.size(), 4u);
  for (uint64_t subset = 1; subset < 4; ++subset) {
    ASSERT_GE(res.witness_of[subset], 0);
    const MixedWitness& w = res.witnesses[res.witness_of[subset]];
    std::vector<std::size_t> picked;
    for (std::size_t x = 0; x < 2; ++x) {
      if ((subset >> x) & 1U) picked.push_back(view.opponent_offsets(0)[x]);
    }
    EXPECT_TRUE(VerifyMixed(view, w.relation, 0, 1, w.dominator, picked));
  }
  // T covers {L}; B covers {R} and {L, R}.
  EXPECT_EQ(res.witnesses[res.witness_of[0b01]].dominator, MixedStrategy::PointMass(0, 0));
  EXPECT_EQ(res.witnesses[res.witness_of[0b11]].dominator, MixedStrategy::PointMass(0, 2));
}

TEST(InherentTest, DominatedSets) {
  const Game a = Fixture("inherent_weak_3x2.json");
  const auto set = inherent_dominated_set(a, kW);
  EXPECT_EQ(set[0], StrategySet(0b010));
  const auto one = inherent_dominated_set(testing::OneByOne(), kW);
  EXPECT_TRUE(one[0].empty());
}

TEST(InherentTest, MustSurviveScope) {
  const Game a = Fixture("inherent_weak_3x2.json");
  // Without B no strategy covers column R.
  EXPECT_FALSE(is_inherently_dominated(a, {kW, 0, 1, StrategySet(0b001)}).dominated);
  EXPECT_TRUE(is_inherently_dominated(a, {kW, 0, 1, StrategySet(0b101)}).dominated);
}

TEST(InherentTest, SizeBound) {
  Limits small;
  small.max_inherent_opponent_profiles = 1;
  try {
    (void)is_inherently_dominated(Fixture("inherent_weak_3x2.json"), {kW, 0, 1, {}}, small);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSizeBoundExceeded);
  }
}

TEST(InherentTest, MatchesSubsetEnumeration) {
  for (const Game& g : Sampled(71, 40)) {
    for (const RelationId& base :
         {kW, RelationId::Of(Tag::kNW), RelationId::Union({Tag::kNW, Tag::kPE}),
          RelationId::Of(Tag::kWM)}) {
      for (int i = 0; i < g.num_players(); ++i) {
        for (int s = 0; s < g.num_strategies(i); ++s) {
          EXPECT_EQ(is_inherently_dominated(g, {base, i, s, {}}).dominated,
                    NaiveInherent(g, base, i, s))
              << base.ToString();
        }
      }
    }
  }
}

TEST(InherentTest, InclusionChain) {
  for (const Game& g : Sampled(73, 40)) {
    const auto inh = inherent_dominated_set(g, kW);
    const auto strict = dominated_set(g, RelationId::Of(Tag::kS));
    const auto weak = dominated_set(g, kW);
    for (int i = 0; i < g.num_players(); ++i) {
      StrategySet s_set, w_set;
      for (const auto& w : strict[i]) s_set = s_set.with(w.dominated);
      for (const auto& w : weak[i]) w_set = w_set.with(w.dominated);
      EXPECT_TRUE(s_set.subset_of(inh[i]));
      EXPECT_TRUE(inh[i].subset_of(w_set));
    }
  }
}

TEST(InherentTest, HereditaryBaseCoincides) {
  for (const Game& g : Sampled(79, 40)) {
    for (Tag tag : {Tag::kS, Tag::kPE}) {
      const auto inh = inherent_dominated_set(g, RelationId::Of(tag));
      const auto plain = dominated_set(g, RelationId::Of(tag));
      for (int i = 0; i < g.num_players(); ++i) {
        StrategySet p;
        for (const auto& w : plain[i]) p = p.with(w.dominated);
        EXPECT_EQ(inh[i], p) << TagName(tag);
      }
    }
  }
}

TEST(InherentTest, WeakMixedCoincidesWithStrictMixed) {
  for (const Game& g : Sampled(83, 40)) {
    const auto inh = inherent_dominated_set(g, RelationId::Of(Tag::kWM));
    const auto sm = mixed_dominated_set(g, RelationId::Of(Tag::kSM), testing::Full(g));
    for (int i = 0; i < g.num_players(); ++i) {
      StrategySet p;
      for (const auto& w : sm[i]) p = p.with(w.dominated);
      EXPECT_EQ(inh[i], p);
    }
  }
}

}  // namespace
}  // namespace dominia
