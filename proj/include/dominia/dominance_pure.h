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

#ifndef DOMINIA_DOMINANCE_PURE_H_
#define DOMINIA_DOMINANCE_PURE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dominia/game.h"
#include "dominia/limits.h"
#include "dominia/relation.h"

namespace dominia {

// What a dominator looks like against the dominated strategy at one
// opponents' profile: the sign of p_i(dominator) - p_i(dominated), and
// whether every player's payoff coincides there.
struct ProfileFacts {
  int cmp = 0;
  bool all_equal = false;
};

// Maps a mixed tag to its pure counterpart (SM -> S, ...); pure tags map to
// themselves.
Tag PureShape(Tag tag);

// Whether `tag` (its pure shape) holds given the facts at every opponents'
// profile of the sub-game under consideration.
bool HoldsOn(Tag tag, std::span<const ProfileFacts> facts);

// The set of opponents' profile subsets on which a fixed dominator
// witnesses `tag`: a subset T qualifies iff T is inside `allowed` and, when
// `needs_strict`, T meets `strict`. Bit x stands for the x-th entry of
// Restriction::opponent_offsets.
struct WitnessRegion {
  uint64_t allowed = 0;
  uint64_t strict = 0;
  bool needs_strict = false;

  bool Covers(uint64_t subset) const {
    return (subset & ~allowed) == 0 && (!needs_strict || (subset & strict) != 0);
  }
};
WitnessRegion RegionOf(Tag tag, std::span<const ProfileFacts> facts);

// Facts of pure strategy `dominator` against `dominated` for player i at
// the given opponents' profiles of `view`.
std::vector<ProfileFacts> PureFacts(const Restriction& view, int i, int dominated,
                                    int dominator, std::span<const std::size_t> opponents);

struct DominanceWitness {
  int player = 0;
  int dominated = 0;
  int dominator = 0;
  Tag relation = Tag::kW;

  friend bool operator==(const DominanceWitness&, const DominanceWitness&) = default;
};

// Single pure tag on an explicit list of opponents' profiles (the sub-game
// (S_i, opponents)). Mixed tags are rejected with kInvalidRelation.
bool DominatesOn(const Restriction& view, Tag tag, int i, int dominated, int dominator,
                 std::span<const std::size_t> opponents);

// True iff any member of `r` holds between the two strategies in `view`.
// `r` must be pure and not inherent.
bool Dominates(const Restriction& view, const RelationId& r, int i, int dominated,
               int dominator);

// Least-index dominator of `dominated` among `allowed` (the dominated
// strategy itself is skipped), with the first member relation that holds.
std::optional<DominanceWitness> FindPureDominator(const Restriction& view,
                                                  const RelationId& r, int i,
                                                  int dominated, StrategySet allowed);

// Checked entry points on whole games.
bool dominates(const Game& g, const RelationId& r, int i, int dominated, int dominator);
bool compatible(const Game& g, int i, int s, int t);

// One witness (least-index dominator) per dominated strategy, per player.
std::vector<std::vector<DominanceWitness>> dominated_set(const Game& g,
                                                         const RelationId& r);

struct TdiViolation {
  int player = 0;        // i: whose strategies tie
  int other_player = 0;  // j: whose payoffs then differ
  int r = 0;
  int t = 0;
  JointProfile profile;  // full profile with player i's entry set to r
};

// TDI: for all i, j, r_i, t_i, s_{-i}, a p_i tie implies a p_j tie.
// nullopt when it holds; otherwise the first violation ordered by
// (i, j, r, t, s_{-i}).
std::optional<TdiViolation> check_tdi(const Game& g);

// A violation of a condition quantified over restrictions.
struct RestrictionViolation {
  std::vector<StrategySet> restriction;
  int player = 0;
  int dominated = 0;
  int dominator = 0;
};

// TDI+: on every restriction, weak dominance implies compatibility.
std::optional<RestrictionViolation> check_tdi_plus(const Game& g,
                                                   const Limits& limits = DefaultLimits());
// TDI++: on every restriction, very weak dominance implies weak dominance
// or payoff equivalence.
std::optional<RestrictionViolation> check_tdi_plus_plus(
    const Game& g, const Limits& limits = DefaultLimits());

// Irreflexivity and transitivity of the instance of `r` on `g`.
bool is_strict_partial_order(const Game& g, const RelationId& r);

// `r` on `g` persists into every restriction containing both strategies.
// The violation names the first restriction (ForEachRestriction order) in
// which a dominance of `g` is lost.
std::optional<RestrictionViolation> is_hereditary(const Game& g, const RelationId& r,
                                                  const Limits& limits = DefaultLimits());

struct IiiaViolation {
  int player = 0;
  StrategySet subset;  // S'_i
  int dominated = 0;
  int dominator = 0;
  bool holds_in_full = false;
};

// IIIA: removing other strategies of player i never changes whether r
// holds between two of the remaining ones.
std::optional<IiiaViolation> check_iiia(const Game& g, const RelationId& r,
                                        const Limits& limits = DefaultLimits());

// R is closed under Q on g: R o Q and Q o R are contained in R.
// Returns the first triple (player, r, s, t) breaking it.
struct ClosureViolation {
  int player = 0;
  int r = 0;
  int s = 0;
  int t = 0;
  bool r_then_q = true;
};
std::optional<ClosureViolation> check_closed_under(const Game& g, const RelationId& r,
                                                   const RelationId& q);

}  // namespace dominia

#endif  // DOMINIA_DOMINANCE_PURE_H_
