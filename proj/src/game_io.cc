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

#include "dominia/game_io.h"

#include <fstream>
#include <sstream>

#include "dominia/errors.h"

namespace dominia {
namespace {

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::kParseError, where + ": " + what);
}

Rational ReadRational(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) Fail(where, "expected a rational string");
  try {
    return Rational::Parse(v.get<std::string>());
  } catch (const Error& e) {
    Fail(where, e.what());
  }
}

void ReadPayoffs(const Json& node, int depth, std::size_t offset, const Game& shape,
                 std::vector<Rational>& flat, const std::vector<int>& counts,
                 const std::string& where) {
  const int n = static_cast<int>(counts.size());
  if (!node.is_array()) Fail(where, "expected an array");
  if (depth == n) {
    if (static_cast<int>(node.size()) != n) {
      Fail(where, "expected " + std::to_string(n) + " payoffs");
    }
    for (int j = 0; j < n; ++j) {
      flat[offset * n + j] = ReadRational(node[j], where + "[" + std::to_string(j) + "]");
    }
    return;
  }
  if (static_cast<int>(node.size()) != counts[depth]) {
    throw Error(ErrorKind::kMissingPayoff,
                where + ": expected " + std::to_string(counts[depth]) + " entries");
  }
  for (int s = 0; s < counts[depth]; ++s) {
    ReadPayoffs(node[s], depth + 1, offset + s * shape.stride(depth), shape, flat, counts,
                where + "[" + std::to_string(s) + "]");
  }
}

Json WritePayoffs(const Game& g, int depth, std::size_t offset) {
  const int n = g.num_players();
  Json out = Json::array();
  if (depth == n) {
    for (int j = 0; j < n; ++j) out.push_back(g.flat_payoff(offset, j).ToString());
    return out;
  }
  for (int s = 0; s < g.num_strategies(depth); ++s) {
    out.push_back(WritePayoffs(g, depth + 1, offset + s * g.stride(depth)));
  }
  return out;
}

}  // namespace

Game GameFromJson(const Json& j) {
  if (!j.is_object()) Fail("game", "expected an object");
  if (!j.contains("players") || !j["players"].is_number_integer()) {
    Fail("players", "missing or not an integer");
  }
  const int n = j["players"].get<int>();
  if (n < 1) Fail("players", "must be at least 1");
  if (!j.contains("strategies") || !j["strategies"].is_array() ||
      static_cast<int>(j["strategies"].size()) != n) {
    Fail("strategies", "expected one label list per player");
  }
  std::vector<std::vector<std::string>> labels(n);
  std::vector<int> counts(n);
  for (int i = 0; i < n; ++i) {
    const Json& list = j["strategies"][i];
    const std::string where = "strategies[" + std::to_string(i) + "]";
    if (!list.is_array()) Fail(where, "expected an array of labels");
    for (std::size_t k = 0; k < list.size(); ++k) {
      if (!list[k].is_string()) Fail(where + "[" + std::to_string(k) + "]", "expected a string");
      labels[i].push_back(list[k].get<std::string>());
    }
    counts[i] = static_cast<int>(labels[i].size());
  }
  if (!j.contains("payoffs")) throw Error(ErrorKind::kMissingPayoff, "payoffs: missing");
  // Validate labels and shape first; payoffs are filled in afterwards.
  std::size_t profiles = 1;
  for (int c : counts) profiles *= static_cast<std::size_t>(c);
  Game shape = Game::FromFlat(labels, std::vector<Rational>(profiles * n));
  std::vector<Rational> flat(profiles * n);
  ReadPayoffs(j["payoffs"], 0, 0, shape, flat, counts, "payoffs");
  return Game::FromFlat(std::move(labels), std::move(flat));
}

Game parse_game(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
    std::size_t line = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
      if (text[k] == '\n') ++line;
    }
    Fail("line " + std::to_string(line), e.what());
  }
  return GameFromJson(j);
}

Json GameToJson(const Game& g) {
  Json j;
  j["players"] = g.num_players();
  j["strategies"] = g.all_labels();
  j["payoffs"] = WritePayoffs(g, 0, 0);
  return j;
}

std::string serialize_game(const Game& g) { return GameToJson(g).dump(2) + "\n"; }

Game ReadGameFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Fail(path, "cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_game(buffer.str());
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kParseError, path + ": cannot write file");
  out << text;
}

Json ToJson(const std::vector<StrategySet>& kept, const Game& root) {
  Json out = Json::array();
  for (std::size_t i = 0; i < kept.size(); ++i) {
    Json labels = Json::array();
    for (int s : kept[i].indices()) labels.push_back(root.label(static_cast<int>(i), s));
    out.push_back(std::move(labels));
  }
  return out;
}

Json ToJson(const StateRef& s) {
  Json out;
  out["strategies"] = s.game.all_labels();
  out["degenerate"] = s.game.is_degenerate();
  out["game"] = GameToJson(s.game);
  return out;
}

Json ToJson(const MixedStrategy& m, const Game& g) {
  Json out = Json::object();
  for (const auto& [s, w] : m.weights()) out[g.label(m.player(), s)] = w.ToString();
  return out;
}

Json ToJson(const ReductionPath& path) {
  Json out;
  out["kind"] = "reduction_path";
  out["relation"] = path.spec.ToString();
  out["root"] = GameToJson(path.root);
  Json steps = Json::array();
  for (const PathStep& step : path.steps) {
    Json s;
    s["removed"] = ToJson(step.removed, path.root);
    s["result"] = ToJson(step.result);
    s["strict_valid"] = step.strict_valid;
    s["degenerate"] = step.degenerate;
    steps.push_back(std::move(s));
  }
  out["steps"] = std::move(steps);
  out["final"] = GameToJson(path.final_game());
  return out;
}

Json ToJson(const ConfluenceReport& report) {
  Json out;
  out["kind"] = "confluence_report";
  out["relation"] = report.spec.ToString();
  out["up_to_renaming"] = report.up_to_renaming;
  Json forms = Json::array();
  for (const StateRef& s : report.normal_forms) forms.push_back(ToJson(s));
  out["normal_forms"] = std::move(forms);
  out["classes"] = report.classes;
  out["explored_states"] = report.explored_states;
  out["unique"] = report.unique;
  out["unique_up_to_renaming"] = report.unique_up_to_renaming;
  if (report.counterexample) {
    out["counterexample"] = {report.counterexample->first, report.counterexample->second};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

Json ToJson(const SplitCounterexample& c) {
  Json out;
  out["source"] = ToJson(c.source);
  out["left"] = ToJson(c.left);
  out["right"] = ToJson(c.right);
  return out;
}

Json ToJson(const CommuteCounterexample& c) {
  Json out;
  out["a"] = ToJson(c.a);
  out["b"] = ToJson(c.b);
  out["c"] = ToJson(c.c);
  return out;
}

Json ToJson(const Renaming& f, const Game& g1, const Game& g2) {
  Json out = Json::array();
  for (std::size_t i = 0; i < f.maps.size(); ++i) {
    Json m = Json::object();
    for (std::size_t s = 0; s < f.maps[i].size(); ++s) {
      m[g1.label(static_cast<int>(i), static_cast<int>(s))] =
          g2.label(static_cast<int>(i), f.maps[i][s]);
    }
    out.push_back(std::move(m));
  }
  return out;
}

Json ToJson(const StructuredReport& r) {
  Json out;
  out["kind"] = "structured_elimination";
  Json base = Json::array();
  for (const StateRef& s : r.base_normal_forms) base.push_back(ToJson(s));
  out["base_normal_forms"] = std::move(base);
  Json ends = Json::array();
  for (const auto& group : r.endpoints) {
    Json g = Json::array();
    for (const Game& h : group) g.push_back(GameToJson(h));
    ends.push_back(std::move(g));
  }
  out["endpoints"] = std::move(ends);
  out["pairwise_equivalent"] = r.pairwise_equivalent;
  out["all_closed"] = r.all_closed;
  return out;
}

}  // namespace dominia
