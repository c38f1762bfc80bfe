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

#ifndef DOMINIA_GAME_IO_H_
#define DOMINIA_GAME_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dominia/dominance_pure.h"
#include "dominia/equivalence.h"
#include "dominia/game.h"
#include "dominia/inherent.h"
#include "dominia/mixed.h"
#include "dominia/reduction.h"

namespace dominia {

using Json = nlohmann::ordered_json;

// Game format:
//   {"players": n, "strategies": [[labels]...],
//    "payoffs": nested arrays indexed by strategy, innermost [n rationals]}
// Rationals are strings like "3" or "-1/2"; plain JSON integers are also
// read. Errors: kParseError with the offending line or field, plus every
// validation error of new_game.
Game parse_game(std::string_view text);
Game GameFromJson(const Json& j);
Json GameToJson(const Game& g);
// Two-space indented canonical text, newline terminated.
std::string serialize_game(const Game& g);

Game ReadGameFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

Json ToJson(const std::vector<StrategySet>& kept, const Game& root);
Json ToJson(const StateRef& s);
Json ToJson(const MixedStrategy& m, const Game& g);
Json ToJson(const ReductionPath& path);
Json ToJson(const ConfluenceReport& report);
Json ToJson(const SplitCounterexample& c);
Json ToJson(const CommuteCounterexample& c);
Json ToJson(const Renaming& f, const Game& g1, const Game& g2);
Json ToJson(const StructuredReport& r);

}  // namespace dominia

#endif  // DOMINIA_GAME_IO_H_
