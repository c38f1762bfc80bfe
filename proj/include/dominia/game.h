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

#ifndef DOMINIA_GAME_H_
#define DOMINIA_GAME_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dominia/rational.h"

namespace dominia {

// One strategy index per player.
using JointProfile = std::vector<int>;

// A subset of one player's strategies, as a bitmask over strategy indices.
class StrategySet {
 public:
  static constexpr int kMaxStrategies = 64;

  constexpr StrategySet() = default;
  constexpr explicit StrategySet(uint64_t bits) : bits_(bits) {}

  static constexpr StrategySet All(int count) {
    return StrategySet(count >= 64 ? ~uint64_t{0} : (uint64_t{1} << count) - 1);
  }
  static constexpr StrategySet Single(int s) { return StrategySet(uint64_t{1} << s); }

  constexpr uint64_t bits() const { return bits_; }
  constexpr bool contains(int s) const { return (bits_ >> s) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr StrategySet with(int s) const { return StrategySet(bits_ | (uint64_t{1} << s)); }
  constexpr StrategySet without(int s) const { return StrategySet(bits_ & ~(uint64_t{1} << s)); }
  constexpr bool subset_of(StrategySet o) const { return (bits_ & ~o.bits_) == 0; }
  std::vector<int> indices() const;

  friend constexpr StrategySet operator&(StrategySet a, StrategySet b) { return StrategySet(a.bits_ & b.bits_); }
  friend constexpr StrategySet operator|(StrategySet a, StrategySet b) { return StrategySet(a.bits_ | b.bits_); }
  // Set difference a \ b.
  friend constexpr StrategySet operator-(StrategySet a, StrategySet b) { return StrategySet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(StrategySet a, StrategySet b) = default;
  friend constexpr auto operator<=>(StrategySet a, StrategySet b) = default;

 private:
  uint64_t bits_ = 0;
};

// An immutable finite strategic game with exact rational payoffs.
//
// Payoffs are stored profile-major: the profile (s_0, ..., s_{n-1}) has
// flat offset sum_k s_k * stride(k) with the last player varying fastest,
// and payoff p_j of that profile lives at offset * n + j.
class Game {
 public:
  // `payoffs` is the flat tensor described above. A game with an empty
  // strategy set is rejected unless `allow_degenerate` is set; such a game
  // has no profiles.
  static Game FromFlat(std::vector<std::vector<std::string>> labels,
                       std::vector<Rational> payoffs,
                       bool allow_degenerate = false);

  int num_players() const { return static_cast<int>(labels_.size()); }
  int num_strategies(int player) const {
    return static_cast<int>(labels_[player].size());
  }
  int total_strategies() const;
  std::size_t num_profiles() const { return num_profiles_; }
  bool is_degenerate() const { return num_profiles_ == 0; }

  const std::vector<std::string>& labels(int player) const { return labels_[player]; }
  const std::string& label(int player, int strategy) const {
    return labels_[player][strategy];
  }
  const std::vector<std::vector<std::string>>& all_labels() const { return labels_; }
  // (player, strategy) owning `label`, if any.
  std::optional<std::pair<int, int>> find_label(const std::string& label) const;

  std::size_t stride(int player) const { return strides_[player]; }
  std::size_t profile_offset(const JointProfile& profile) const;
  JointProfile profile_at(std::size_t offset) const;

  // Unchecked access by flat profile offset.
  const Rational& flat_payoff(std::size_t offset, int player) const {
    return payoffs_[offset * labels_.size() + player];
  }
  const std::vector<Rational>& flat_payoffs() const { return payoffs_; }

  // Checked access; kIndexOutOfRange on a bad profile or player.
  const Rational& payoff(const JointProfile& profile, int player) const;

  friend bool operator==(const Game& a, const Game& b) {
    return a.labels_ == b.labels_ && a.payoffs_ == b.payoffs_;
  }

 private:
  Game() = default;

  std::vector<std::vector<std::string>> labels_;
  std::vector<std::size_t> strides_;
  std::size_t num_profiles_ = 0;
  std::vector<Rational> payoffs_;
};

// Builds a validated game from a total profile -> payoff-vector map.
// Errors: kMissingPayoff, kDuplicateLabel, kEmptyStrategySet.
Game new_game(int players, std::vector<std::vector<std::string>> labels,
              const std::map<JointProfile, std::vector<Rational>>& payoffs,
              bool allow_degenerate = false);

// Keeps the listed strategy indices of each player, in the parent's order.
Game restrict(const Game& g, const std::vector<std::vector<int>>& kept,
              bool allow_degenerate = false);
Game restrict(const Game& g, const std::vector<StrategySet>& kept,
              bool allow_degenerate = false);

// Per-player intersection of two restrictions of a common parent, matched
// by label and ordered as in `g1`.
Game intersect(const Game& g1, const Game& g2, bool allow_degenerate = false);

// Checked payoff accessor mirroring Game::payoff.
const Rational& payoff(const Game& g, const JointProfile& s, int player);

// A non-owning view of a parent game restricted to per-player strategy
// subsets. The parent must outlive the view. Local strategy indices are
// positions within the kept subset.
class Restriction {
 public:
  explicit Restriction(const Game& parent);
  Restriction(const Game& parent, std::vector<StrategySet> kept);

  const Game& parent() const { return *parent_; }
  int num_players() const { return parent_->num_players(); }
  int num_strategies(int player) const {
    return static_cast<int>(kept_[player].size());
  }
  int parent_index(int player, int local) const { return kept_[player][local]; }
  const std::vector<int>& kept(int player) const { return kept_[player]; }
  StrategySet kept_set(int player) const { return kept_sets_[player]; }
  const std::vector<StrategySet>& kept_sets() const { return kept_sets_; }
  bool is_degenerate() const;

  // Flat parent offsets of every opponents' profile s_{-i} of the view, with
  // player i's coordinate set to zero. Lexicographic in the opponents'
  // local indices.
  const std::vector<std::size_t>& opponent_offsets(int player) const {
    return opponent_offsets_[player];
  }

  // p_j at the profile where `player` plays local strategy `s` against the
  // opponents' profile at `opp_offset`.
  const Rational& payoff_at(int player, int s, std::size_t opp_offset, int j) const {
    return parent_->flat_payoff(
        opp_offset + static_cast<std::size_t>(kept_[player][s]) * parent_->stride(player), j);
  }

  Game Materialize() const;

 private:
  const Game* parent_;
  std::vector<StrategySet> kept_sets_;
  std::vector<std::vector<int>> kept_;
  std::vector<std::vector<std::size_t>> opponent_offsets_;
};

}  // namespace dominia

#endif  // DOMINIA_GAME_H_
