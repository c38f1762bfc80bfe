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

#ifndef DOMINIA_RELATION_H_
#define DOMINIA_RELATION_H_

#include <string>
#include <string_view>
#include <vector>

namespace dominia {

// Binary dominance relations between a strategy and a (pure or mixed)
// dominator. The first six compare two pure strategies, the rest allow a
// mixed dominator.
enum class Tag {
  kS,       // strict
  kW,       // weak
  kVW,      // very weak
  kNW,      // nice weak: weak plus compatible
  kPE,      // payoff equivalent
  kCompat,  // compatible
  kSM,
  kWM,
  kVWM,
  kNWM,
  kPEM,     // randomized redundance: dominated strategy outside the support
};

bool IsMixed(Tag tag);
// Relations that hold between a strategy and itself.
bool IsReflexive(Tag tag);
std::string_view TagName(Tag tag);

// A dominance relation or a union of them, optionally lifted to its
// inherent (unary) form.
struct RelationId {
  std::vector<Tag> members;
  bool inherent = false;

  // Accepts "S", "NW|PE", "NW+PE", "NWM∪PEM", "inh-W", "inh-NW|PE".
  static RelationId Parse(std::string_view text);
  static RelationId Of(Tag tag) { return RelationId{{tag}, false}; }
  static RelationId Union(std::vector<Tag> tags);
  static RelationId Inherent(RelationId base);

  bool is_union() const { return members.size() > 1; }
  bool any_mixed() const;
  bool all_pure() const;
  std::string ToString() const;

  friend bool operator==(const RelationId&, const RelationId&) = default;
};

// Loose: dominators range over the pre-step strategy sets.
// Strict: dominators (or their supports) must survive the step.
enum class Arrow { kLoose, kStrict };

enum class Step {
  kAnySubset,       // any non-empty set of removable strategies
  kSingleStrategy,  // exactly one strategy per step
  kMaximal,         // everything currently dominated (loose reading)
};

struct RelationSpec {
  RelationId relation;
  Arrow arrow = Arrow::kStrict;
  Step step = Step::kAnySubset;

  std::string ToString() const;
};

inline RelationSpec StrictSpec(RelationId r, Step step = Step::kAnySubset) {
  return RelationSpec{std::move(r), Arrow::kStrict, step};
}

}  // namespace dominia

#endif  // DOMINIA_RELATION_H_
