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

#include "dominia/game.h"

#include <algorithm>
#include <set>
#include <string>

#include "dominia/errors.h"

namespace dominia {

std::vector<int> StrategySet::indices() const {
  std::vector<int> out;
  for (uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

namespace {

void ValidateLabels(const std::vector<std::vector<std::string>>& labels,
                    bool allow_degenerate) {
  if (labels.empty()) {
    throw Error(ErrorKind::kEmptyStrategySet, "a game needs at least one player");
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty() && !allow_degenerate) {
      throw Error(ErrorKind::kEmptyStrategySet,
                  "player " + std::to_string(i) + " has no strategies");
    }
    if (labels[i].size() > static_cast<std::size_t>(StrategySet::kMaxStrategies)) {
      throw Error(ErrorKind::kSizeBoundExceeded,
                  "player " + std::to_string(i) + " has more than 64 strategies");
    }
    for (const auto& l : labels[i]) {
      if (!seen.insert(l).second) {
        throw Error(ErrorKind::kDuplicateLabel, "label '" + l + "' used twice");
      }
    }
  }
}

}  // namespace

Game Game::FromFlat(std::vector<std::vector<std::string>> labels,
                    std::vector<Rational> payoffs, bool allow_degenerate) {
  ValidateLabels(labels, allow_degenerate);
  Game g;
  g.labels_ = std::move(labels);
  const int n = g.num_players();
  g.strides_.assign(n, 1);
  std::size_t count = 1;
  for (int i = n - 1; i >= 0; --i) {
    g.strides_[i] = count;
    count *= g.labels_[i].size();
  }
  g.num_profiles_ = count;
  if (payoffs.size() != count * n) {
    throw Error(ErrorKind::kMissingPayoff,
                "expected " + std::to_string(count * n) + " payoff entries, got " +
                    std::to_string(payoffs.size()));
  }
  g.payoffs_ = std::move(payoffs);
  return g;
}

int Game::total_strategies() const {
  int total = 0;
  for (const auto& l : labels_) total += static_cast<int>(l.size());
  return total;
}

std::optional<std::pair<int, int>> Game::find_label(const std::string& label) const {
  for (int i = 0; i < num_players(); ++i) {
    const auto& ls = labels_[i];
    if (auto it = std::find(ls.begin(), ls.end(), label); it != ls.end()) {
      return std::make_pair(i, static_cast<int>(it - ls.begin()));
    }
  }
  return std::nullopt;
}

std::size_t Game::profile_offset(const JointProfile& profile) const {
  if (static_cast<int>(profile.size()) != num_players()) {
    throw Error(ErrorKind::kIndexOutOfRange, "profile has wrong length");
  }
  std::size_t off = 0;
  for (int i = 0; i < num_players(); ++i) {
    if (profile[i] < 0 || profile[i] >= num_strategies(i)) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "strategy index " + std::to_string(profile[i]) +
                      " invalid for player " + std::to_string(i));
    }
    off += static_cast<std::size_t>(profile[i]) * strides_[i];
  }
  return off;
}

JointProfile Game::profile_at(std::size_t offset) const {
  JointProfile p(num_players());
  for (int i = 0; i < num_players(); ++i) {
    p[i] = static_cast<int>(offset / strides_[i]);
    offset %= strides_[i];
  }
  return p;
}

const Rational& Game::payoff(const JointProfile& profile, int player) const {
  if (player < 0 || player >= num_players()) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "player index " + std::to_string(player) + " out of range");
  }
  return flat_payoff(profile_offset(profile), player);
}

Game new_game(int players, std::vector<std::vector<std::string>> labels,
              const std::map<JointProfile, std::vector<Rational>>& payoffs,
              bool allow_degenerate) {
  if (players < 1 || static_cast<int>(labels.size()) != players) {
    throw Error(ErrorKind::kInvalidParams, "label lists must match player count");
  }
  ValidateLabels(labels, allow_degenerate);
  std::size_t count = 1;
  for (const auto& l : labels) count *= l.size();
  std::vector<Rational> flat;
  flat.reserve(count * players);
  JointProfile s(players, 0);
  for (std::size_t k = 0; k < count; ++k) {
    auto it = payoffs.find(s);
    if (it == payoffs.end() || static_cast<int>(it->second.size()) != players) {
      std::string where;
      for (int i = 0; i < players; ++i) where += (i ? "," : "") + labels[i][s[i]];
      throw Error(ErrorKind::kMissingPayoff, "no payoff vector for (" + where + ")");
    }
    flat.insert(flat.end(), it->second.begin(), it->second.end());
    for (int i = players - 1; i >= 0; --i) {
      if (++s[i] < static_cast<int>(labels[i].size())) break;
      s[i] = 0;
    }
  }
  return Game::FromFlat(std::move(labels), std::move(flat), allow_degenerate);
}

Game restrict(const Game& g, const std::vector<StrategySet>& kept,
              bool allow_degenerate) {
  if (static_cast<int>(kept.size()) != g.num_players()) {
    throw Error(ErrorKind::kIndexOutOfRange, "one strategy subset per player expected");
  }
  for (int i = 0; i < g.num_players(); ++i) {
    if (!kept[i].subset_of(StrategySet::All(g.num_strategies(i)))) {
      throw Error(ErrorKind::kIndexOutOfRange,
                  "kept strategy out of range for player " + std::to_string(i));
    }
    if (kept[i].empty() && !allow_degenerate) {
      throw Error(ErrorKind::kEmptyRestriction,
                  "restriction keeps no strategy of player " + std::to_string(i));
    }
  }
  return Restriction(g, kept).Materialize();
}

Game restrict(const Game& g, const std::vector<std::vector<int>>& kept,
              bool allow_degenerate) {
  std::vector<StrategySet> sets(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (int s : kept[i]) {
      if (s < 0 || s >= StrategySet::kMaxStrategies ||
          (static_cast<int>(i) < g.num_players() && s >= g.num_strategies(i))) {
        throw Error(ErrorKind::kIndexOutOfRange,
                    "strategy index " + std::to_string(s) + " out of range");
      }
      sets[i] = sets[i].with(s);
    }
  }
  return restrict(g, sets, allow_degenerate);
}

Game intersect(const Game& g1, const Game& g2, bool allow_degenerate) {
  const int n = g1.num_players();
  if (g2.num_players() != n) {
    throw Error(ErrorKind::kIncompatibleParents, "player counts differ");
  }
  // Shared labels must sit with the same player in both games.
  for (int i = 0; i < n; ++i) {
    for (const auto& l : g2.labels(i)) {
      if (auto owner = g1.find_label(l); owner && owner->first != i) {
        throw Error(ErrorKind::kIncompatibleParents,
                    "label '" + l + "' belongs to different players");
      }
    }
  }
  std::vector<StrategySet> keep1(n);
  std::vector<std::vector<int>> map2(n);  // g1-local kept index -> g2 index
  for (int i = 0; i < n; ++i) {
    for (int s = 0; s < g1.num_strategies(i); ++s) {
      const auto& ls = g2.labels(i);
      auto it = std::find(ls.begin(), ls.end(), g1.label(i, s));
      if (it != ls.end()) {
        keep1[i] = keep1[i].with(s);
        map2[i].push_back(static_cast<int>(it - ls.begin()));
      }
    }
    if (keep1[i].empty() && !allow_degenerate) {
      throw Error(ErrorKind::kEmptyRestriction,
                  "intersection is empty for player " + std::to_string(i));
    }
  }
  Restriction view(g1, keep1);
  Game out = view.Materialize();
  // Payoffs on shared profiles must agree.
  for (std::size_t k = 0; k < out.num_profiles(); ++k) {
    JointProfile local = out.profile_at(k);
    JointProfile p2(n);
    for (int i = 0; i < n; ++i) p2[i] = map2[i][local[i]];
    const std::size_t off2 = g2.profile_offset(p2);
    for (int j = 0; j < n; ++j) {
      if (out.flat_payoff(k, j) != g2.flat_payoff(off2, j)) {
        throw Error(ErrorKind::kIncompatibleParents,
                    "payoffs disagree on a shared profile");
      }
    }
  }
  return out;
}

const Rational& payoff(const Game& g, const JointProfile& s, int player) {
  return g.payoff(s, player);
}

Restriction::Restriction(const Game& parent) : Restriction(parent, [&] {
  std::vector<StrategySet> all(parent.num_players());
  for (int i = 0; i < parent.num_players(); ++i) {
    all[i] = StrategySet::All(parent.num_strategies(i));
  }
  return all;
}()) {}

Restriction::Restriction(const Game& parent, std::vector<StrategySet> kept)
    : parent_(&parent), kept_sets_(std::move(kept)) {
  const int n = parent.num_players();
  kept_.resize(n);
  for (int i = 0; i < n; ++i) kept_[i] = kept_sets_[i].indices();
  opponent_offsets_.resize(n);
  for (int i = 0; i < n; ++i) {
    std::vector<std::size_t> offs{0};
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      std::vector<std::size_t> next;
      next.reserve(offs.size() * kept_[k].size());
      for (std::size_t base : offs) {
        for (int s : kept_[k]) next.push_back(base + static_cast<std::size_t>(s) * parent.stride(k));
      }
      offs = std::move(next);
    }
    opponent_offsets_[i] = std::move(offs);
  }
}

bool Restriction::is_degenerate() const {
  return std::any_of(kept_.begin(), kept_.end(),
                     [](const auto& k) { return k.empty(); });
}

Game Restriction::Materialize() const {
  const int n = num_players();
  std::vector<std::vector<std::string>> labels(n);
  for (int i = 0; i < n; ++i) {
    for (int s : kept_[i]) labels[i].push_back(parent_->label(i, s));
  }
  std::vector<Rational> flat;
  if (!is_degenerate()) {
    // Enumerate kept profiles in lexicographic order, last player fastest.
    std::vector<int> local(n, 0);
    while (true) {
      std::size_t off = 0;
      for (int i = 0; i < n; ++i) off += static_cast<std::size_t>(kept_[i][local[i]]) * parent_->stride(i);
      for (int j = 0; j < n; ++j) flat.push_back(parent_->flat_payoff(off, j));
      int i = n - 1;
      for (; i >= 0; --i) {
        if (++local[i] < static_cast<int>(kept_[i].size())) break;
        local[i] = 0;
      }
      if (i < 0) break;
    }
  }
  return Game::FromFlat(std::move(labels), std::move(flat), /*allow_degenerate=*/true);
}

}  // namespace dominia
