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

#include "dominia/explore.h"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "dominia/dominance_pure.h"
#include "dominia/errors.h"
#include "dominia/inherent.h"
#include "dominia/mixed.h"

namespace dominia {

StateCodec::StateCodec(const Game& root) {
  int offset = 0;
  for (int i = 0; i < root.num_players(); ++i) {
    offsets_.push_back(offset);
    counts_.push_back(root.num_strategies(i));
    offset += root.num_strategies(i);
  }
  if (offset > 64) throw Error(ErrorKind::kSizeBoundExceeded, "more than 64 strategies");
  full_ = offset == 64 ? ~uint64_t{0} : (uint64_t{1} << offset) - 1;
}

StrategySet StateCodec::Kept(uint64_t state, int player) const {
  return StrategySet(state >> offsets_[player]) & StrategySet::All(counts_[player]);
}

std::vector<StrategySet> StateCodec::Kept(uint64_t state) const {
  std::vector<StrategySet> kept;
  for (std::size_t i = 0; i < offsets_.size(); ++i) kept.push_back(Kept(state, static_cast<int>(i)));
  return kept;
}

uint64_t StateCodec::Encode(const std::vector<StrategySet>& kept) const {
  uint64_t state = 0;
  for (std::size_t i = 0; i < kept.size(); ++i) state |= kept[i].bits() << offsets_[i];
  return state;
}

bool StateCodec::IsDegenerate(uint64_t state) const {
  for (std::size_t i = 0; i < offsets_.size(); ++i) {
    if (Kept(state, static_cast<int>(i)).empty()) return true;
  }
  return false;
}

SuccessorGenerator::SuccessorGenerator(const Game& root, RelationSpec spec, Limits limits)
    : root_(&root), spec_(std::move(spec)), limits_(limits), codec_(root) {
  CheckTotalStrategies(root, limits_);
  if (spec_.relation.members.empty()) {
    throw Error(ErrorKind::kInvalidRelation, "empty relation");
  }
}

namespace {

// Answers "is local strategy s dominated with dominators (or supports)
// inside `allowed`" for one player of one state, memoized.
class DominanceOracle {
 public:
  DominanceOracle(const Restriction& view, const RelationId& r, int i, const Limits& limits)
      : view_(view), r_(r), i_(i), limits_(limits) {
    const int m = view.num_strategies(i);
    if (!r.inherent && r.all_pure()) {
      dominated_by_.resize(m);
      for (int s = 0; s < m; ++s) {
        for (int t = 0; t < m; ++t) {
          if (t != s && Dominates(view, r, i, s, t)) dominated_by_[s] = dominated_by_[s].with(t);
        }
      }
    }
  }

  bool operator()(int s, StrategySet allowed) {
    allowed = allowed.without(s);
    if (!dominated_by_.empty()) return !(dominated_by_[s] & allowed).empty();
    if (allowed.empty()) return false;
    auto key = std::make_pair(s, allowed.bits());
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool result;
    if (r_.inherent) {
      result = InherentCheck(view_, r_, i_, s, allowed, false, limits_).dominated;
    } else {
      result = FindDominator(view_, r_, i_, s, allowed).has_value();
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  const Restriction& view_;
  const RelationId& r_;
  int i_;
  const Limits& limits_;
  std::vector<StrategySet> dominated_by_;
  std::map<std::pair<int, uint64_t>, bool> memo_;
};

}  // namespace

std::vector<StrategySet> SuccessorGenerator::Dominated(uint64_t state) const {
  const int n = root_->num_players();
  std::vector<StrategySet> out(n);
  if (codec_.IsDegenerate(state)) return out;
  Restriction view(*root_, codec_.Kept(state));
  for (int i = 0; i < n; ++i) {
    DominanceOracle oracle(view, spec_.relation, i, limits_);
    const StrategySet all = StrategySet::All(view.num_strategies(i));
    for (int s = 0; s < view.num_strategies(i); ++s) {
      if (oracle(s, all)) out[i] = out[i].with(view.parent_index(i, s));
    }
  }
  return out;
}

bool SuccessorGenerator::StrictValid(uint64_t state, uint64_t removed) const {
  const uint64_t result = state & ~removed;
  if (codec_.IsDegenerate(state) || codec_.IsDegenerate(result)) return false;
  Restriction view(*root_, codec_.Kept(state));
  for (int i = 0; i < root_->num_players(); ++i) {
    DominanceOracle oracle(view, spec_.relation, i, limits_);
    const StrategySet gone = codec_.Kept(removed & state, i);
    StrategySet survivors;
    for (int s = 0; s < view.num_strategies(i); ++s) {
      if (!gone.contains(view.parent_index(i, s))) survivors = survivors.with(s);
    }
    for (int s = 0; s < view.num_strategies(i); ++s) {
      if (gone.contains(view.parent_index(i, s)) && !oracle(s, survivors)) return false;
    }
  }
  return true;
}

std::vector<Transition> SuccessorGenerator::Successors(uint64_t state) const {
  const int n = root_->num_players();
  std::vector<Transition> out;
  if (codec_.IsDegenerate(state)) return out;
  Restriction view(*root_, codec_.Kept(state));
  // options[i]: removable root-bit masks for player i, ascending.
  std::vector<std::vector<uint64_t>> options(n);
  for (int i = 0; i < n; ++i) {
    DominanceOracle oracle(view, spec_.relation, i, limits_);
    const StrategySet all = StrategySet::All(view.num_strategies(i));
    std::vector<int> dominated;
    for (int s = 0; s < view.num_strategies(i); ++s) {
      if (oracle(s, all)) dominated.push_back(s);
    }
    auto root_bits = [&](uint64_t local_subset) {
      uint64_t bits = 0;
      for (std::size_t k = 0; k < dominated.size(); ++k) {
        if ((local_subset >> k) & 1U) {
          bits |= uint64_t{1} << (codec_.offset(i) + view.parent_index(i, dominated[k]));
        }
      }
      return bits;
    };
    const uint64_t count = dominated.size();
    switch (spec_.step) {
      case Step::kMaximal:
        if (count > 0) options[i].push_back(root_bits((uint64_t{1} << count) - 1));
        break;
      case Step::kSingleStrategy:
        for (uint64_t k = 0; k < count; ++k) options[i].push_back(root_bits(uint64_t{1} << k));
        break;
      case Step::kAnySubset:
        for (uint64_t sub = 1; sub < (uint64_t{1} << count); ++sub) {
          bool valid = true;
          if (spec_.arrow == Arrow::kStrict) {
            StrategySet removed;
            for (uint64_t k = 0; k < count; ++k) {
              if ((sub >> k) & 1U) removed = removed.with(dominated[k]);
            }
            for (int s : removed.indices()) {
              if (!oracle(s, all - removed)) {
                valid = false;
                break;
              }
            }
          }
          if (valid) options[i].push_back(root_bits(sub));
        }
        break;
    }
  }
  if (spec_.step == Step::kSingleStrategy) {
    for (int i = 0; i < n; ++i) {
      for (uint64_t bits : options[i]) out.push_back({bits, state & ~bits});
    }
  } else if (spec_.step == Step::kMaximal) {
    uint64_t bits = 0;
    for (int i = 0; i < n; ++i) {
      if (!options[i].empty()) bits |= options[i][0];
    }
    if (bits != 0) out.push_back({bits, state & ~bits});
  } else {
    // Product of per-player choices, each possibly empty.
    std::function<void(int, uint64_t)> combine = [&](int i, uint64_t acc) {
      if (i == n) {
        if (acc != 0) out.push_back({acc, state & ~acc});
        return;
      }
      combine(i + 1, acc);
      for (uint64_t bits : options[i]) combine(i + 1, acc | bits);
    };
    combine(0, 0);
  }
  std::sort(out.begin(), out.end(),
            [](const Transition& a, const Transition& b) { return a.removed < b.removed; });
  if (spec_.arrow == Arrow::kStrict) {
    for (const Transition& t : out) {
      if (codec_.IsDegenerate(t.result)) {
        throw std::logic_error("strict elimination produced a degenerate game");
      }
    }
  }
  return out;
}

namespace {

using RawGraph = std::unordered_map<uint64_t, std::vector<std::vector<uint64_t>>>;

std::vector<std::vector<uint64_t>> Expand(const std::vector<SuccessorGenerator>& gens,
                                          uint64_t state) {
  std::vector<std::vector<uint64_t>> per_spec;
  for (const auto& gen : gens) {
    std::vector<uint64_t> next;
    for (const Transition& t : gen.Successors(state)) next.push_back(t.result);
    per_spec.push_back(std::move(next));
  }
  return per_spec;
}

std::vector<SuccessorGenerator> Generators(const Game& root,
                                           const std::vector<RelationSpec>& specs,
                                           const Limits& limits) {
  if (specs.empty()) throw Error(ErrorKind::kInvalidParams, "no relation spec given");
  std::vector<SuccessorGenerator> gens;
  for (const auto& spec : specs) gens.emplace_back(root, spec, limits);
  return gens;
}

StateSpace Finalize(RawGraph raw, std::size_t num_specs) {
  StateSpace space;
  for (const auto& [state, _] : raw) space.states.push_back(state);
  std::sort(space.states.begin(), space.states.end(), std::greater<>());
  for (int v = 0; v < space.size(); ++v) space.index.emplace(space.states[v], v);
  space.succ.assign(num_specs, std::vector<std::vector<int>>(space.states.size()));
  for (int v = 0; v < space.size(); ++v) {
    const auto& per_spec = raw[space.states[v]];
    for (std::size_t k = 0; k < num_specs; ++k) {
      for (uint64_t next : per_spec[k]) space.succ[k][v].push_back(space.index.at(next));
    }
  }
  return space;
}

}  // namespace

StateSpace ExploreSerial(const Game& root, const std::vector<RelationSpec>& specs,
                         const Limits& limits) {
  auto gens = Generators(root, specs, limits);
  RawGraph raw;
  std::vector<uint64_t> stack{gens[0].codec().Full()};
  raw.emplace(stack.back(), std::vector<std::vector<uint64_t>>());
  while (!stack.empty()) {
    const uint64_t state = stack.back();
    stack.pop_back();
    auto per_spec = Expand(gens, state);
    for (const auto& next : per_spec) {
      for (uint64_t s : next) {
        if (raw.emplace(s, std::vector<std::vector<uint64_t>>()).second) stack.push_back(s);
      }
    }
    raw[state] = std::move(per_spec);
  }
  return Finalize(std::move(raw), specs.size());
}

StateSpace ExploreParallel(const Game& root, const std::vector<RelationSpec>& specs,
                           const Limits& limits) {
  auto gens = Generators(root, specs, limits);
  RawGraph raw;
  std::vector<uint64_t> frontier{gens[0].codec().Full()};
  raw.emplace(frontier.back(), std::vector<std::vector<uint64_t>>());
  while (!frontier.empty()) {
    std::vector<std::vector<std::vector<uint64_t>>> expanded(frontier.size());
    std::exception_ptr error;
    const long count = static_cast<long>(frontier.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < count; ++k) {
      try {
        expanded[k] = Expand(gens, frontier[k]);
      } catch (...) {
#pragma omp critical(dominia_explore_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    std::vector<uint64_t> next_frontier;
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      for (const auto& next : expanded[k]) {
        for (uint64_t s : next) {
          if (raw.emplace(s, std::vector<std::vector<uint64_t>>()).second) {
            next_frontier.push_back(s);
          }
        }
      }
      raw[frontier[k]] = std::move(expanded[k]);
    }
    frontier = std::move(next_frontier);
  }
  return Finalize(std::move(raw), specs.size());
}

StateSpace Explore(const Game& root, const std::vector<RelationSpec>& specs,
                   const Limits& limits) {
  return ExploreParallel(root, specs, limits);
}

}  // namespace dominia
