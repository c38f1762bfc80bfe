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

#include "dominia/dominance_pure.h"

#include <string>

#include "dominia/errors.h"

namespace dominia {
namespace {

void CheckPlayer(const Game& g, int i) {
  if (i < 0 || i >= g.num_players()) {
    throw Error(ErrorKind::kIndexOutOfRange, "player " + std::to_string(i) + " out of range");
  }
}

void CheckStrategy(const Game& g, int i, int s) {
  CheckPlayer(g, i);
  if (s < 0 || s >= g.num_strategies(i)) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "strategy " + std::to_string(s) + " of player " + std::to_string(i) +
                    " out of range");
  }
}

void RequirePure(const RelationId& r) {
  if (r.inherent || !r.all_pure()) {
    throw Error(ErrorKind::kInvalidRelation,
                "expected a pure binary relation, got " + r.ToString());
  }
}

}  // namespace

Tag PureShape(Tag tag) {
  switch (tag) {
    case Tag::kSM: return Tag::kS;
    case Tag::kWM: return Tag::kW;
    case Tag::kVWM: return Tag::kVW;
    case Tag::kNWM: return Tag::kNW;
    case Tag::kPEM: return Tag::kPE;
    default: return tag;
  }
}

namespace {

// Per-profile membership in the allowed region, and in the strict region.
bool Allowed(Tag shape, const ProfileFacts& f) {
  switch (shape) {
    case Tag::kS: return f.cmp > 0;
    case Tag::kW:
    case Tag::kVW: return f.cmp >= 0;
    case Tag::kPE: return f.all_equal;
    case Tag::kCompat: return f.cmp != 0 || f.all_equal;
    case Tag::kNW: return f.cmp > 0 || f.all_equal;
    default: break;
  }
  throw Error(ErrorKind::kInvalidRelation, "no pure shape");
}

bool NeedsStrict(Tag shape) { return shape == Tag::kW || shape == Tag::kNW; }

}  // namespace

bool HoldsOn(Tag tag, std::span<const ProfileFacts> facts) {
  Tag shape = PureShape(tag);
  bool strict = false;
  for (const ProfileFacts& f : facts) {
    if (!Allowed(shape, f)) return false;
    strict = strict || f.cmp > 0;
  }
  return !NeedsStrict(shape) || strict;
}

WitnessRegion RegionOf(Tag tag, std::span<const ProfileFacts> facts) {
  if (facts.size() > 64) {
    throw Error(ErrorKind::kSizeBoundExceeded, "more than 64 opponents' profiles");
  }
  Tag shape = PureShape(tag);
  WitnessRegion region;
  region.needs_strict = NeedsStrict(shape);
  for (std::size_t x = 0; x < facts.size(); ++x) {
    if (Allowed(shape, facts[x])) region.allowed |= uint64_t{1} << x;
    if (facts[x].cmp > 0) region.strict |= uint64_t{1} << x;
  }
  return region;
}

std::vector<ProfileFacts> PureFacts(const Restriction& view, int i, int dominated,
                                    int dominator, std::span<const std::size_t> opponents) {
  const int n = view.num_players();
  std::vector<ProfileFacts> facts(opponents.size());
  for (std::size_t x = 0; x < opponents.size(); ++x) {
    const std::size_t off = opponents[x];
    ProfileFacts& f = facts[x];
    f.cmp = CompareDifference(view.payoff_at(i, dominator, off, i),
                              view.payoff_at(i, dominated, off, i));
    f.all_equal = f.cmp == 0;
    for (int j = 0; j < n && f.all_equal; ++j) {
      f.all_equal = view.payoff_at(i, dominator, off, j) == view.payoff_at(i, dominated, off, j);
    }
  }
  return facts;
}

bool DominatesOn(const Restriction& view, Tag tag, int i, int dominated, int dominator,
                 std::span<const std::size_t> opponents) {
  if (IsMixed(tag)) {
    throw Error(ErrorKind::kInvalidRelation, "mixed relation in a pure check");
  }
  if (dominated == dominator && !IsReflexive(tag)) return false;
  auto facts = PureFacts(view, i, dominated, dominator, opponents);
  return HoldsOn(tag, facts);
}

bool Dominates(const Restriction& view, const RelationId& r, int i, int dominated,
               int dominator) {
  RequirePure(r);
  if (view.is_degenerate()) return false;
  const auto& opp = view.opponent_offsets(i);
  auto facts = PureFacts(view, i, dominated, dominator, opp);
  for (Tag tag : r.members) {
    if (dominated == dominator && !IsReflexive(tag)) continue;
    if (HoldsOn(tag, facts)) return true;
  }
  return false;
}

std::optional<DominanceWitness> FindPureDominator(const Restriction& view,
                                                  const RelationId& r, int i,
                                                  int dominated, StrategySet allowed) {
  RequirePure(r);
  if (view.is_degenerate()) return std::nullopt;
  const auto& opp = view.opponent_offsets(i);
  for (int t : allowed.indices()) {
    if (t == dominated || t >= view.num_strategies(i)) continue;
    auto facts = PureFacts(view, i, dominated, t, opp);
    for (Tag tag : r.members) {
      if (HoldsOn(tag, facts)) return DominanceWitness{i, dominated, t, tag};
    }
  }
  return std::nullopt;
}

bool dominates(const Game& g, const RelationId& r, int i, int dominated, int dominator) {
  CheckStrategy(g, i, dominated);
  CheckStrategy(g, i, dominator);
  return Dominates(Restriction(g), r, i, dominated, dominator);
}

bool compatible(const Game& g, int i, int s, int t) {
  return dominates(g, RelationId::Of(Tag::kCompat), i, s, t);
}

std::vector<std::vector<DominanceWitness>> dominated_set(const Game& g,
                                                         const RelationId& r) {
  RequirePure(r);
  Restriction view(g);
  std::vector<std::vector<DominanceWitness>> out(g.num_players());
  for (int i = 0; i < g.num_players(); ++i) {
    StrategySet all = StrategySet::All(g.num_strategies(i));
    for (int s = 0; s < g.num_strategies(i); ++s) {
      if (auto w = FindPureDominator(view, r, i, s, all)) out[i].push_back(*w);
    }
  }
  return out;
}

std::optional<TdiViolation> check_tdi(const Game& g) {
  Restriction view(g);
  const int n = g.num_players();
  for (int i = 0; i < n; ++i) {
    const auto& opp = view.opponent_offsets(i);
    for (int j = 0; j < n; ++j) {
      for (int r = 0; r < g.num_strategies(i); ++r) {
        for (int t = 0; t < g.num_strategies(i); ++t) {
          for (std::size_t off : opp) {
            if (view.payoff_at(i, r, off, i) == view.payoff_at(i, t, off, i) &&
                view.payoff_at(i, r, off, j) != view.payoff_at(i, t, off, j)) {
              JointProfile profile = g.profile_at(off);
              profile[i] = r;
              return TdiViolation{i, j, r, t, std::move(profile)};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

// Runs `pair_fails` over every restriction and ordered pair of distinct
// strategies, reporting parent indices of the first failure.
template <typename F>
std::optional<RestrictionViolation> FirstRestrictionViolation(const Game& g,
                                                              const Limits& limits,
                                                              F pair_fails) {
  CheckTotalStrategies(g, limits);
  std::optional<RestrictionViolation> found;
  ForEachRestriction(g, [&](const std::vector<StrategySet>& kept) {
    Restriction view(g, kept);
    for (int i = 0; i < g.num_players() && !found; ++i) {
      for (int r = 0; r < view.num_strategies(i) && !found; ++r) {
        for (int t = 0; t < view.num_strategies(i) && !found; ++t) {
          if (r != t && pair_fails(view, i, r, t)) {
            found = RestrictionViolation{kept, i, view.parent_index(i, r),
                                         view.parent_index(i, t)};
          }
        }
      }
    }
    return !found;
  });
  return found;
}

}  // namespace

std::optional<RestrictionViolation> check_tdi_plus(const Game& g, const Limits& limits) {
  const RelationId w = RelationId::Of(Tag::kW);
  const RelationId c = RelationId::Of(Tag::kCompat);
  return FirstRestrictionViolation(g, limits, [&](const Restriction& v, int i, int r, int t) {
    return Dominates(v, w, i, r, t) && !Dominates(v, c, i, r, t);
  });
}

std::optional<RestrictionViolation> check_tdi_plus_plus(const Game& g,
                                                        const Limits& limits) {
  const RelationId vw = RelationId::Of(Tag::kVW);
  const RelationId w_or_pe = RelationId::Union({Tag::kW, Tag::kPE});
  return FirstRestrictionViolation(g, limits, [&](const Restriction& v, int i, int r, int t) {
    return Dominates(v, vw, i, r, t) && !Dominates(v, w_or_pe, i, r, t);
  });
}

bool is_strict_partial_order(const Game& g, const RelationId& r) {
  RequirePure(r);
  Restriction view(g);
  for (int i = 0; i < g.num_players(); ++i) {
    const int m = g.num_strategies(i);
    std::vector<char> rel(static_cast<std::size_t>(m) * m);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) rel[a * m + b] = Dominates(view, r, i, a, b);
    }
    for (int a = 0; a < m; ++a) {
      if (rel[a * m + a]) return false;
      for (int b = 0; b < m; ++b) {
        if (!rel[a * m + b]) continue;
        for (int c = 0; c < m; ++c) {
          if (rel[b * m + c] && !rel[a * m + c]) return false;
        }
      }
    }
  }
  return true;
}

std::optional<RestrictionViolation> is_hereditary(const Game& g, const RelationId& r,
                                                  const Limits& limits) {
  RequirePure(r);
  Restriction full(g);
  return FirstRestrictionViolation(g, limits, [&](const Restriction& v, int i, int a, int b) {
    return Dominates(full, r, i, v.parent_index(i, a), v.parent_index(i, b)) &&
           !Dominates(v, r, i, a, b);
  });
}

std::optional<IiiaViolation> check_iiia(const Game& g, const RelationId& r,
                                        const Limits& limits) {
  RequirePure(r);
  CheckTotalStrategies(g, limits);
  Restriction full(g);
  for (int i = 0; i < g.num_players(); ++i) {
    const int m = g.num_strategies(i);
    std::vector<StrategySet> kept;
    for (int p = 0; p < g.num_players(); ++p) kept.push_back(StrategySet::All(g.num_strategies(p)));
    for (uint64_t mask = 1; mask <= StrategySet::All(m).bits(); ++mask) {
      kept[i] = StrategySet(mask);
      Restriction view(g, kept);
      for (int a = 0; a < view.num_strategies(i); ++a) {
        for (int b = 0; b < view.num_strategies(i); ++b) {
          const int pa = view.parent_index(i, a);
          const int pb = view.parent_index(i, b);
          const bool in_full = Dominates(full, r, i, pa, pb);
          if (in_full != Dominates(view, r, i, a, b)) {
            return IiiaViolation{i, kept[i], pa, pb, in_full};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<ClosureViolation> check_closed_under(const Game& g, const RelationId& r,
                                                   const RelationId& q) {
  RequirePure(r);
  RequirePure(q);
  Restriction view(g);
  for (int i = 0; i < g.num_players(); ++i) {
    const int m = g.num_strategies(i);
    auto table = [&](const RelationId& rel) {
      std::vector<char> out(static_cast<std::size_t>(m) * m);
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) out[a * m + b] = Dominates(view, rel, i, a, b);
      }
      return out;
    };
    auto rt = table(r);
    auto qt = table(q);
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        for (int c = 0; c < m; ++c) {
          if (rt[a * m + c]) continue;
          if (rt[a * m + b] && qt[b * m + c]) return ClosureViolation{i, a, b, c, true};
          if (qt[a * m + b] && rt[b * m + c]) return ClosureViolation{i, a, b, c, false};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace dominia
