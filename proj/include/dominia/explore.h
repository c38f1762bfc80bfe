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

#ifndef DOMINIA_EXPLORE_H_
#define DOMINIA_EXPLORE_H_

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dominia/game.h"
#include "dominia/limits.h"
#include "dominia/relation.h"

namespace dominia {

// Restrictions of a root game encoded as one bitmask over the root's
// strategies, player 0's first. Bit offset(i) + s stands for strategy s
// of player i.
class StateCodec {
 public:
  explicit StateCodec(const Game& root);

  uint64_t Full() const { return full_; }
  int offset(int player) const { return offsets_[player]; }
  StrategySet Kept(uint64_t state, int player) const;
  std::vector<StrategySet> Kept(uint64_t state) const;
  uint64_t Encode(const std::vector<StrategySet>& kept) const;
  bool IsDegenerate(uint64_t state) const;

 private:
  std::vector<int> offsets_;
  std::vector<int> counts_;
  uint64_t full_ = 0;
};

struct Transition {
  uint64_t removed = 0;
  uint64_t result = 0;
};

// Computes the one-step successors of a restriction of `root` under a
// relation spec. Thread-safe: Successors() touches no shared mutable data.
class SuccessorGenerator {
 public:
  // Errors: kSizeBoundExceeded when the root exceeds
  // limits.max_total_strategies.
  SuccessorGenerator(const Game& root, RelationSpec spec, Limits limits = DefaultLimits());

  // Ordered by removed mask. Empty for degenerate states.
  std::vector<Transition> Successors(uint64_t state) const;

  // Per player, the strategies (root indices) removable alone: dominated
  // with every other current strategy available as a dominator.
  std::vector<StrategySet> Dominated(uint64_t state) const;

  // Whether removing `removed` from `state` keeps a dominator (or support)
  // for every removed strategy among the survivors.
  bool StrictValid(uint64_t state, uint64_t removed) const;

  const StateCodec& codec() const { return codec_; }
  const RelationSpec& spec() const { return spec_; }
  const Game& root() const { return *root_; }

 private:
  const Game* root_;
  RelationSpec spec_;
  Limits limits_;
  StateCodec codec_;
};

// The part of the restriction lattice reachable from the root along the
// union of several specs' transitions. States are sorted by descending
// mask, which puts every state after all of its predecessors; state 0 is
// the root.
struct StateSpace {
  std::vector<uint64_t> states;
  std::unordered_map<uint64_t, int> index;
  // succ[k][v]: successors of state v under spec k, in generation order.
  std::vector<std::vector<std::vector<int>>> succ;

  int size() const { return static_cast<int>(states.size()); }
  friend bool operator==(const StateSpace& a, const StateSpace& b) {
    return a.states == b.states && a.succ == b.succ;
  }
};

// Reference kernel: depth-first, single-threaded.
StateSpace ExploreSerial(const Game& root, const std::vector<RelationSpec>& specs,
                         const Limits& limits = DefaultLimits());

// Level-synchronous breadth-first kernel: each level's successor
// computations run in an OpenMP parallel loop; new states are merged into
// the memo table serially. Produces the same StateSpace as ExploreSerial.
StateSpace ExploreParallel(const Game& root, const std::vector<RelationSpec>& specs,
                           const Limits& limits = DefaultLimits());

// The kernel used by the reduction checks.
StateSpace Explore(const Game& root, const std::vector<RelationSpec>& specs,
                   const Limits& limits = DefaultLimits());

}  // namespace dominia

#endif  // DOMINIA_EXPLORE_H_
