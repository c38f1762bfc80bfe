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

#include "dominia/relation.h"

#include <algorithm>
#include <array>
#include <utility>

#include "dominia/errors.h"

namespace dominia {

namespace {

constexpr std::array<std::pair<Tag, std::string_view>, 11> kNames = {{
    {Tag::kS, "S"},       {Tag::kW, "W"},     {Tag::kVW, "VW"},
    {Tag::kNW, "NW"},     {Tag::kPE, "PE"},   {Tag::kCompat, "COMPAT"},
    {Tag::kSM, "SM"},     {Tag::kWM, "WM"},   {Tag::kVWM, "VWM"},
    {Tag::kNWM, "NWM"},   {Tag::kPEM, "PEM"},
}};

Tag ParseTag(std::string_view s) {
  for (const auto& [tag, name] : kNames) {
    if (name == s) return tag;
  }
  throw Error(ErrorKind::kInvalidRelation, "unknown relation '" + std::string(s) + "'");
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

bool IsMixed(Tag tag) {
  switch (tag) {
    case Tag::kSM: case Tag::kWM: case Tag::kVWM: case Tag::kNWM: case Tag::kPEM:
      return true;
    default:
      return false;
  }
}

bool IsReflexive(Tag tag) {
  return tag == Tag::kVW || tag == Tag::kPE || tag == Tag::kCompat ||
         tag == Tag::kVWM;
}

std::string_view TagName(Tag tag) {
  for (const auto& [t, name] : kNames) {
    if (t == tag) return name;
  }
  return "?";
}

RelationId RelationId::Union(std::vector<Tag> tags) {
  if (tags.empty()) {
    throw Error(ErrorKind::kInvalidRelation, "empty relation union");
  }
  for (std::size_t a = 0; a < tags.size(); ++a) {
    for (std::size_t b = a + 1; b < tags.size(); ++b) {
      if (tags[a] == tags[b]) {
        throw Error(ErrorKind::kInvalidRelation,
                    "duplicate member " + std::string(TagName(tags[a])) + " in union");
      }
    }
  }
  return RelationId{std::move(tags), false};
}

RelationId RelationId::Inherent(RelationId base) {
  base.inherent = true;
  return base;
}

RelationId RelationId::Parse(std::string_view text) {
  std::string_view s = Trim(text);
  bool inherent = false;
  if (s.starts_with("inh-")) {
    inherent = true;
    s.remove_prefix(4);
  }
  std::vector<Tag> tags;
  while (true) {
    std::size_t cut = std::string_view::npos;
    std::size_t width = 0;
    for (std::string_view sep : {"|", "+", "∪", " U "}) {
      std::size_t p = s.find(sep);
      if (p != std::string_view::npos && p < cut) {
        cut = p;
        width = sep.size();
      }
    }
    tags.push_back(ParseTag(Trim(s.substr(0, cut))));
    if (cut == std::string_view::npos) break;
    s.remove_prefix(cut + width);
  }
  RelationId r = Union(std::move(tags));
  r.inherent = inherent;
  return r;
}

bool RelationId::any_mixed() const {
  return std::any_of(members.begin(), members.end(), IsMixed);
}

bool RelationId::all_pure() const { return !any_mixed(); }

std::string RelationId::ToString() const {
  std::string out = inherent ? "inh-" : "";
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (k) out += "|";
    out += TagName(members[k]);
  }
  return out;
}

std::string RelationSpec::ToString() const {
  std::string out = relation.ToString();
  out += arrow == Arrow::kStrict ? " strict" : " loose";
  switch (step) {
    case Step::kAnySubset: out += " any-subset"; break;
    case Step::kSingleStrategy: out += " single"; break;
    case Step::kMaximal: out += " maximal"; break;
  }
  return out;
}

}  // namespace dominia
