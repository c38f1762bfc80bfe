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

#include "dominia/reduction.h"

#include <algorithm>
#include <map>
#include <string>

#include "dominia/equivalence.h"
#include "dominia/errors.h"

namespace dominia {
namespace {

// Fixed-size bitset over state indices.
class Bits {
 public:
  explicit Bits(int n = 0) : words_((n + 63) / 64, 0) {}
  void set(int k) { words_[k / 64] |= uint64_t{1} << (k % 64); }
  bool test(int k) const { return (words_[k / 64] >> (k % 64)) & 1U; }
  void Or(const Bits& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  }
  bool Intersects(const Bits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & o.words_[w]) return true;
    }
    return false;
  }
  friend bool operator==(const Bits&, const Bits&) = default;

 private:
  std::vector<uint64_t> words_;
};

// reach[v] = states reachable from v in zero or more steps of spec k.
// Successors always come later in state order, so one backward pass works.
std::vector<Bits> ReflexiveReach(const StateSpace& space, std::size_t k) {
  std::vector<Bits> reach(space.size(), Bits(space.size()));
  for (int v = space.size() - 1; v >= 0; --v) {
    reach[v].set(v);
    for (int w : space.succ[k][v]) reach[v].Or(reach[w]);
  }
  return reach;
}

StateRef Ref(const Game& root, const StateCodec& codec, uint64_t state) {
  return MakeStateRef(root, codec.Kept(state));
}

RelationSpec WithStep(const RelationId& r, Arrow arrow, Step step) {
  return RelationSpec{r, arrow, step};
}

}  // namespace

StateRef MakeStateRef(const Game& root, const std::vector<StrategySet>& kept) {
  return StateRef{kept, restrict(root, kept, true)};
}

std::vector<Game> successors(const Game& g, const RelationSpec& spec, const Limits& limits) {
  SuccessorGenerator gen(g, spec, limits);
  std::vector<Game> out;
  for (const Transition& t : gen.Successors(gen.codec().Full())) {
    out.push_back(restrict(g, gen.codec().Kept(t.result), true));
  }
  return out;
}

ReductionPath maximal_reduce(const Game& g, const RelationSpec& spec) {
  Limits unbounded = DefaultLimits();
  unbounded.max_total_strategies = StrategySet::kMaxStrategies;
  RelationSpec loose{spec.relation, Arrow::kLoose, Step::kMaximal};
  SuccessorGenerator gen(g, loose, unbounded);
  const StateCodec& codec = gen.codec();
  ReductionPath path{g, loose, {}};
  uint64_t state = codec.Full();
  while (true) {
    const auto dominated = gen.Dominated(state);
    const uint64_t removed = codec.Encode(dominated);
    if (removed == 0) break;
    const uint64_t result = state & ~removed;
    const bool degenerate = codec.IsDegenerate(result);
    path.steps.push_back(PathStep{dominated, Ref(g, codec, result),
                                  !degenerate && gen.StrictValid(state, removed), degenerate});
    if (codec.IsDegenerate(result)) break;
    state = result;
  }
  return path;
}

std::vector<std::vector<int>> EquivalenceClasses(const std::vector<Game>& games) {
  std::vector<std::vector<int>> classes;
  std::map<std::string, std::vector<int>> by_signature;  // signature -> class ids
  for (int k = 0; k < static_cast<int>(games.size()); ++k) {
    auto& candidates = by_signature[canonical_signature(games[k])];
    bool placed = false;
    for (int c : candidates) {
      if (equivalent(games[classes[c].front()], games[k])) {
        classes[c].push_back(k);
        placed = true;
        break;
      }
    }
    if (!placed) {
      candidates.push_back(static_cast<int>(classes.size()));
      classes.push_back({k});
    }
  }
  return classes;
}

ConfluenceReport normal_forms(const Game& g, const RelationSpec& spec, bool up_to_renaming,
                              const Limits& limits) {
  StateSpace space = Explore(g, {spec}, limits);
  StateCodec codec(g);
  ConfluenceReport report;
  report.spec = spec;
  report.up_to_renaming = up_to_renaming;
  report.explored_states = space.size();
  std::vector<Game> games;
  for (int v = 0; v < space.size(); ++v) {
    if (!space.succ[0][v].empty()) continue;
    report.normal_forms.push_back(Ref(g, codec, space.states[v]));
    games.push_back(report.normal_forms.back().game);
  }
  report.classes = EquivalenceClasses(games);
  report.unique = report.normal_forms.size() == 1;
  report.unique_up_to_renaming = report.classes.size() == 1;
  if (!report.holds() && report.normal_forms.size() > 1) {
    report.counterexample =
        std::make_pair(0, up_to_renaming ? report.classes[1].front() : 1);
  }
  return report;
}

std::optional<SplitCounterexample> check_weak_confluence(const Game& g,
                                                         const RelationSpec& spec,
                                                         bool up_to_renaming,
                                                         const Limits& limits) {
  StateSpace space = Explore(g, {spec}, limits);
  StateCodec codec(g);
  std::vector<Bits> reach = ReflexiveReach(space, 0);
  if (up_to_renaming) {
    std::vector<Game> games;
    for (uint64_t s : space.states) games.push_back(restrict(g, codec.Kept(s), true));
    auto classes = EquivalenceClasses(games);
    std::vector<int> class_of(space.size());
    for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
      for (int v : classes[c]) class_of[v] = c;
    }
    std::vector<Bits> class_reach(space.size(), Bits(static_cast<int>(classes.size())));
    for (int v = 0; v < space.size(); ++v) {
      for (int w = v; w < space.size(); ++w) {
        if (reach[v].test(w)) class_reach[v].set(class_of[w]);
      }
    }
    reach = std::move(class_reach);
  }
  for (int v = 0; v < space.size(); ++v) {
    const auto& next = space.succ[0][v];
    for (std::size_t x = 0; x < next.size(); ++x) {
      for (std::size_t y = x + 1; y < next.size(); ++y) {
        if (!reach[next[x]].Intersects(reach[next[y]])) {
          return SplitCounterexample{Ref(g, codec, space.states[v]),
                                     Ref(g, codec, space.states[next[x]]),
                                     Ref(g, codec, space.states[next[y]])};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<StateRef> check_one_step_closed(const Game& g, const RelationSpec& spec,
                                              const Limits& limits) {
  StateSpace space = Explore(g, {spec}, limits);
  StateCodec codec(g);
  auto one_step_or_equal = [&](int from, int to) {
    if (from == to) return true;
    const auto& next = space.succ[0][from];
    return std::find(next.begin(), next.end(), to) != next.end();
  };
  for (int v = 0; v < space.size(); ++v) {
    const auto& next = space.succ[0][v];
    std::vector<int> candidates{v};
    candidates.insert(candidates.end(), next.begin(), next.end());
    bool closed = false;
    for (int a : candidates) {
      closed = std::all_of(next.begin(), next.end(),
                           [&](int b) { return one_step_or_equal(b, a); });
      if (closed) break;
    }
    if (!closed) return Ref(g, codec, space.states[v]);
  }
  return std::nullopt;
}

std::optional<StateRef> check_one_at_a_time(const Game& g, const RelationId& r, Arrow arrow,
                                            const Limits& limits) {
  StateSpace space = Explore(
      g, {WithStep(r, arrow, Step::kAnySubset), WithStep(r, arrow, Step::kSingleStrategy)},
      limits);
  StateCodec codec(g);
  auto bulk = ReflexiveReach(space, 0);
  auto single = ReflexiveReach(space, 1);
  for (int v = 0; v < space.size(); ++v) {
    Bits plus_bulk(space.size());
    Bits plus_single(space.size());
    for (int w : space.succ[0][v]) plus_bulk.Or(bulk[w]);
    for (int w : space.succ[1][v]) plus_single.Or(single[w]);
    if (!(plus_bulk == plus_single)) return Ref(g, codec, space.states[v]);
  }
  return std::nullopt;
}

std::optional<StateRef> check_arrow_equivalence(const Game& g, const RelationId& r,
                                                Step step, const Limits& limits) {
  StateSpace space =
      Explore(g, {WithStep(r, Arrow::kLoose, step), WithStep(r, Arrow::kStrict, step)}, limits);
  StateCodec codec(g);
  for (int v = 0; v < space.size(); ++v) {
    auto loose = space.succ[0][v];
    auto strict = space.succ[1][v];
    std::sort(loose.begin(), loose.end());
    std::sort(strict.begin(), strict.end());
    if (loose != strict) return Ref(g, codec, space.states[v]);
  }
  return std::nullopt;
}

std::optional<CommuteCounterexample> check_left_commutes(const Game& g,
                                                         const RelationSpec& spec1,
                                                         const RelationSpec& spec2,
                                                         const Limits& limits) {
  StateSpace space = Explore(g, {spec1, spec2}, limits);
  StateCodec codec(g);
  auto reach1 = ReflexiveReach(space, 0);
  for (int a = 0; a < space.size(); ++a) {
    for (int b : space.succ[0][a]) {
      for (int c : space.succ[1][b]) {
        const auto& ds = space.succ[1][a];
        const bool joined =
            std::any_of(ds.begin(), ds.end(), [&](int d) { return reach1[d].test(c); });
        if (!joined) {
          return CommuteCounterexample{Ref(g, codec, space.states[a]),
                                       Ref(g, codec, space.states[b]),
                                       Ref(g, codec, space.states[c])};
        }
      }
    }
  }
  return std::nullopt;
}

StructuredReport structured_elimination_scenario(const Game& g, const RelationId& base,
                                                 const RelationId& equiv,
                                                 const Limits& limits) {
  if (base.inherent || equiv.inherent) {
    throw Error(ErrorKind::kInvalidRelation, "structured elimination needs binary relations");
  }
  std::vector<Tag> both = base.members;
  for (Tag t : equiv.members) {
    if (std::find(both.begin(), both.end(), t) == both.end()) both.push_back(t);
  }
  const RelationSpec combined = StrictSpec(RelationId::Union(both));
  StructuredReport report;
  ConfluenceReport first = normal_forms(g, StrictSpec(base), false, limits);
  report.base_normal_forms = first.normal_forms;
  std::vector<Game> all;
  report.all_closed = true;
  for (const StateRef& nf : first.normal_forms) {
    ConfluenceReport second = normal_forms(nf.game, StrictSpec(equiv), false, limits);
    std::vector<Game> ends;
    for (const StateRef& h : second.normal_forms) {
      if (!successors(h.game, combined, limits).empty()) report.all_closed = false;
      ends.push_back(h.game);
      all.push_back(h.game);
    }
    report.endpoints.push_back(std::move(ends));
  }
  report.pairwise_equivalent = EquivalenceClasses(all).size() == 1;
  return report;
}

}  // namespace dominia
