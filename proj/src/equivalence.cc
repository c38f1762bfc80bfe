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

#include "dominia/equivalence.h"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "dominia/dominance_pure.h"
#include "dominia/errors.h"
#include "dominia/mixed.h"

namespace dominia {

Renaming Renaming::Inverse() const {
  Renaming out;
  for (const auto& m : maps) {
    std::vector<int> inv(m.size());
    for (std::size_t s = 0; s < m.size(); ++s) inv[m[s]] = static_cast<int>(s);
    out.maps.push_back(std::move(inv));
  }
  return out;
}

Renaming Renaming::Then(const Renaming& other) const {
  Renaming out;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    std::vector<int> m(maps[i].size());
    for (std::size_t s = 0; s < m.size(); ++s) m[s] = other.maps[i][maps[i][s]];
    out.maps.push_back(std::move(m));
  }
  return out;
}

bool PreservesPayoffs(const Game& g1, const Game& g2, const Renaming& f) {
  const int n = g1.num_players();
  if (g2.num_players() != n || static_cast<int>(f.maps.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    const int k = g1.num_strategies(i);
    if (g2.num_strategies(i) != k || static_cast<int>(f.maps[i].size()) != k) return false;
    std::vector<char> hit(k, 0);
    for (int s : f.maps[i]) {
      if (s < 0 || s >= k || hit[s]) return false;
      hit[s] = 1;
    }
  }
  for (std::size_t off = 0; off < g1.num_profiles(); ++off) {
    JointProfile p = g1.profile_at(off);
    std::size_t off2 = 0;
    for (int i = 0; i < n; ++i) off2 += static_cast<std::size_t>(f.maps[i][p[i]]) * g2.stride(i);
    for (int j = 0; j < n; ++j) {
      if (g1.flat_payoff(off, j) != g2.flat_payoff(off2, j)) return false;
    }
  }
  return true;
}

namespace {

// Sorted multiset of the payoff vectors strategy s of player i meets.
std::string StrategyFingerprint(const Game& g, int i, int s) {
  const int n = g.num_players();
  std::vector<std::string> cells;
  for (std::size_t off = 0; off < g.num_profiles(); ++off) {
    if (static_cast<int>(off / g.stride(i) % g.num_strategies(i)) != s) continue;
    std::string cell;
    for (int j = 0; j < n; ++j) {
      cell += g.flat_payoff(off, j).ToString();
      cell += ',';
    }
    cells.push_back(std::move(cell));
  }
  std::sort(cells.begin(), cells.end());
  std::string out;
  for (const auto& c : cells) {
    out += c;
    out += ';';
  }
  return out;
}

std::vector<std::vector<std::string>> Fingerprints(const Game& g) {
  std::vector<std::vector<std::string>> out(g.num_players());
  for (int i = 0; i < g.num_players(); ++i) {
    for (int s = 0; s < g.num_strategies(i); ++s) out[i].push_back(StrategyFingerprint(g, i, s));
  }
  return out;
}

}  // namespace

std::optional<Renaming> equivalent(const Game& g1, const Game& g2) {
  const int n = g1.num_players();
  if (g2.num_players() != n) return std::nullopt;
  for (int i = 0; i < n; ++i) {
    if (g1.num_strategies(i) != g2.num_strategies(i)) return std::nullopt;
  }
  if (g1.is_degenerate() || g2.is_degenerate()) {
    if (g1.is_degenerate() != g2.is_degenerate()) return std::nullopt;
  }
  auto f1 = Fingerprints(g1);
  auto f2 = Fingerprints(g2);
  for (int i = 0; i < n; ++i) {
    auto a = f1[i];
    auto b = f2[i];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  Renaming f;
  for (int i = 0; i < n; ++i) f.maps.emplace_back(g1.num_strategies(i), -1);
  std::vector<std::vector<char>> used(n);
  for (int i = 0; i < n; ++i) used[i].assign(g1.num_strategies(i), 0);
  std::function<bool(int, int)> assign = [&](int i, int s) -> bool {
    if (i == n) return PreservesPayoffs(g1, g2, f);
    if (s == g1.num_strategies(i)) return assign(i + 1, 0);
    for (int t = 0; t < g2.num_strategies(i); ++t) {
      if (used[i][t] || f1[i][s] != f2[i][t]) continue;
      used[i][t] = 1;
      f.maps[i][s] = t;
      if (assign(i, s + 1)) return true;
      used[i][t] = 0;
    }
    f.maps[i][s] = -1;
    return false;
  };
  if (assign(0, 0)) return f;
  return std::nullopt;
}

std::string canonical_signature(const Game& g) {
  std::ostringstream os;
  os << g.num_players();
  for (int i = 0; i < g.num_players(); ++i) os << 'x' << g.num_strategies(i);
  for (auto& prints : Fingerprints(g)) {
    std::sort(prints.begin(), prints.end());
    os << '|';
    for (const auto& p : prints) os << '[' << p << ']';
  }
  return os.str();
}

Game RenameGame(const Game& g, const std::vector<std::vector<int>>& perm) {
  const int n = g.num_players();
  std::vector<std::vector<std::string>> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i].resize(g.num_strategies(i));
    for (int s = 0; s < g.num_strategies(i); ++s) labels[i][perm[i][s]] = g.label(i, s);
  }
  std::vector<Rational> flat(g.flat_payoffs().size());
  for (std::size_t off = 0; off < g.num_profiles(); ++off) {
    JointProfile p = g.profile_at(off);
    std::size_t off2 = 0;
    for (int i = 0; i < n; ++i) off2 += static_cast<std::size_t>(perm[i][p[i]]) * g.stride(i);
    for (int j = 0; j < n; ++j) flat[off2 * n + j] = g.flat_payoff(off, j);
  }
  return Game::FromFlat(std::move(labels), std::move(flat), g.is_degenerate());
}

std::vector<StrategySet> PurelyReducedKeep(const Game& g) {
  Restriction view(g);
  const RelationId pe = RelationId::Of(Tag::kPE);
  std::vector<StrategySet> keep(g.num_players());
  for (int i = 0; i < g.num_players(); ++i) {
    for (int s = 0; s < g.num_strategies(i); ++s) {
      bool represented = false;
      for (int r : keep[i].indices()) {
        if (Dominates(view, pe, i, s, r)) {
          represented = true;
          break;
        }
      }
      if (!represented) keep[i] = keep[i].with(s);
    }
  }
  return keep;
}

Game purely_reduce(const Game& g) { return restrict(g, PurelyReducedKeep(g)); }

Game fully_reduce(const Game& g, const Limits& limits) {
  CheckTotalStrategies(g, limits);
  const RelationId pem = RelationId::Of(Tag::kPEM);
  Game current = g;
  while (true) {
    Restriction view(current);
    bool removed = false;
    for (int i = 0; i < current.num_players() && !removed; ++i) {
      const StrategySet all = StrategySet::All(current.num_strategies(i));
      for (int s = 0; s < current.num_strategies(i); ++s) {
        if (FindDominator(view, pem, i, s, all.without(s))) {
          std::vector<StrategySet> kept = view.kept_sets();
          kept[i] = kept[i].without(s);
          current = restrict(current, kept);
          removed = true;
          break;
        }
      }
    }
    if (!removed) return current;
  }
}

}  // namespace dominia
