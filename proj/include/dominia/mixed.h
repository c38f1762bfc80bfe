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

#ifndef DOMINIA_MIXED_H_
#define DOMINIA_MIXED_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dominia/dominance_pure.h"
#include "dominia/game.h"
#include "dominia/limits.h"
#include "dominia/rational.h"
#include "dominia/relation.h"

namespace dominia {

// A probability distribution over one player's strategies. Only positive
// weights are stored and they sum to exactly 1.
class MixedStrategy {
 public:
  // Drops zero weights. Errors: kInvalidParams on a negative weight or a
  // sum other than 1, kEmptySupport when nothing is left.
  MixedStrategy(int player, std::map<int, Rational> weights);

  static MixedStrategy PointMass(int player, int s);

  int player() const { return player_; }
  const std::map<int, Rational>& weights() const { return weights_; }
  Rational weight(int s) const;
  StrategySet support() const;
  bool is_pure() const { return weights_.size() == 1; }
  std::string ToString() const;

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  int player_;
  std::map<int, Rational> weights_;
};

struct MixedWitness {
  int player = 0;
  int dominated = 0;
  MixedStrategy dominator = MixedStrategy::PointMass(0, 0);
  Tag relation = Tag::kWM;
};

// Expected payoff of player i under independent mixing.
// Errors: kIndexOutOfRange, kDimensionMismatch.
Rational mixed_payoff(const Game& g, const std::vector<MixedStrategy>& profile, int i);

// Replaces t1 inside m2 by m1 and renormalizes.
// Errors: kDegenerateSubstitution, kInvalidParams (different players).
MixedStrategy substitute(const MixedStrategy& m2, int t1, const MixedStrategy& m1);

// Removes s from m and renormalizes. Errors: kDegenerateSubstitution.
MixedStrategy shrink_self_weight(int s, const MixedStrategy& m);

// Index translation between a view's local strategies and its parent's.
MixedStrategy ToParent(const Restriction& view, const MixedStrategy& m);
std::optional<MixedStrategy> ToLocal(const Restriction& view, const MixedStrategy& m);

// Facts of `m` against pure `s` for player i at the given opponents'
// profiles (local indices of `view`).
std::vector<ProfileFacts> MixedFacts(const Restriction& view, int i, int s,
                                     const MixedStrategy& m,
                                     std::span<const std::size_t> opponents);

// Direct evaluation of `tag` between s and m on the listed opponents'
// profiles. Pure tags are accepted and read m as a mixed dominator of that
// shape. PEM also requires s outside the support.
bool VerifyMixed(const Restriction& view, Tag tag, int i, int s, const MixedStrategy& m,
                 std::span<const std::size_t> opponents);

// A witness for a single mixed tag with support inside `allowed` (local
// indices), judged only on `opponents`. PEM drops s from `allowed`. The
// witness is checked with VerifyMixed before it is returned.
std::optional<MixedStrategy> SolveMixed(const Restriction& view, Tag tag, int i, int s,
                                        StrategySet allowed,
                                        std::span<const std::size_t> opponents);

// Union-aware search on a view: members are tried in order, pure members
// through FindPureDominator, and the first success is returned with a
// point mass standing in for a pure dominator.
std::optional<MixedWitness> FindDominator(const Restriction& view, const RelationId& r,
                                          int i, int s, StrategySet allowed);

// Checked whole-game entry point. Errors: kIndexOutOfRange, kEmptySupport.
std::optional<MixedWitness> find_dominator(const Game& g, const RelationId& r, int i,
                                           int s, StrategySet allowed_support);

// One witness per dominated strategy, with support inside survivors_i minus
// the dominated strategy itself.
std::vector<std::vector<MixedWitness>> mixed_dominated_set(
    const Game& g, const RelationId& r, const std::vector<StrategySet>& survivors);

// A restriction where the witness find_dominator gives in the whole game
// (support inside the restriction, minus the dominated strategy) stops
// being one.
struct MixedRestrictionViolation {
  std::vector<StrategySet> restriction;
  int player = 0;
  int dominated = 0;
  MixedStrategy dominator = MixedStrategy::PointMass(0, 0);
};
std::optional<MixedRestrictionViolation> check_mixed_hereditary(
    const Game& g, const RelationId& r, const Limits& limits = DefaultLimits());

struct MixedIiiaViolation {
  int player = 0;
  StrategySet subset;
  int dominated = 0;
  bool holds_in_full = false;
};
std::optional<MixedIiiaViolation> check_mixed_iiia(const Game& g, const RelationId& r,
                                                   const Limits& limits = DefaultLimits());

// TDIM: every pure strategy is compatible with every mixed strategy of the
// same player.
struct TdimViolation {
  int player = 0;
  int other_player = 0;
  int r = 0;
  JointProfile profile;  // player i's entry set to r
  MixedStrategy m = MixedStrategy::PointMass(0, 0);
};
std::optional<TdimViolation> check_tdim(const Game& g);

// TDIM+: on every restriction, weak dominance by a mixed strategy implies
// compatibility.
std::optional<MixedRestrictionViolation> check_tdim_plus(
    const Game& g, const Limits& limits = DefaultLimits());

// TDI*: on every restriction, very weak mixed dominance implies weak mixed
// dominance or payoff equivalence.
std::optional<MixedRestrictionViolation> check_tdi_star(
    const Game& g, const Limits& limits = DefaultLimits());

}  // namespace dominia

#endif  // DOMINIA_MIXED_H_
