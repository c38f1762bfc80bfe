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

#include "dominia/random_game.h"

#include <limits>
#include <string>

#include "dominia/errors.h"

namespace dominia {

namespace {

// Uniform in [0, range) for range >= 1.
uint64_t Below(std::mt19937_64& rng, uint64_t range) {
  const uint64_t limit = std::numeric_limits<uint64_t>::max() -
                         std::numeric_limits<uint64_t>::max() % range;
  while (true) {
    const uint64_t x = rng();
    if (x < limit) return x % range;
  }
}

}  // namespace

long UniformInt(std::mt19937_64& rng, long lo, long hi) {
  const uint64_t range = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
  if (range == 0) return static_cast<long>(rng());
  return static_cast<long>(static_cast<uint64_t>(lo) + Below(rng, range));
}

bool Bernoulli(std::mt19937_64& rng, const Rational& p) {
  if (p.sign() <= 0) return false;
  if (p >= Rational(1)) return true;
  const mpz_class& num = p.raw().get_num();
  const mpz_class& den = p.raw().get_den();
  if (!den.fits_ulong_p()) throw Error(ErrorKind::kInvalidParams, "probability denominator too large");
  return Below(rng, den.get_ui()) < num.get_ui();
}

Game random_game(const GeneratorParams& p) {
  if (p.players < 1 || p.players > 4) {
    throw Error(ErrorKind::kInvalidParams, "players must be in 1..4");
  }
  if (static_cast<int>(p.strategies.size()) != p.players) {
    throw Error(ErrorKind::kInvalidParams, "one strategy count per player expected");
  }
  for (int k : p.strategies) {
    if (k < 1 || k > p.max_strategies) {
      throw Error(ErrorKind::kInvalidParams,
                  "strategy counts must be in 1.." + std::to_string(p.max_strategies));
    }
  }
  if (p.lo > p.hi) throw Error(ErrorKind::kInvalidParams, "payoff range is empty");
  if (p.dup_prob.sign() < 0 || p.dup_prob > Rational(1)) {
    throw Error(ErrorKind::kInvalidParams, "duplicate probability must be in [0, 1]");
  }
  std::mt19937_64 rng(p.seed);
  const int n = p.players;
  std::vector<std::vector<std::string>> labels(n);
  std::size_t profiles = 1;
  for (int i = 0; i < n; ++i) {
    for (int s = 0; s < p.strategies[i]; ++s) {
      labels[i].push_back(std::string(1, static_cast<char>('A' + i)) + std::to_string(s + 1));
    }
    profiles *= static_cast<std::size_t>(p.strategies[i]);
  }
  std::vector<Rational> flat(profiles * n);
  for (auto& v : flat) v = Rational(UniformInt(rng, p.lo, p.hi));
  Game shape = Game::FromFlat(labels, flat);
  for (int i = 0; i < n; ++i) {
    const int k = p.strategies[i];
    if (k < 2 || !Bernoulli(rng, p.dup_prob)) continue;
    const int from = static_cast<int>(Below(rng, k));
    int to = static_cast<int>(Below(rng, k - 1));
    if (to >= from) ++to;
    for (std::size_t off = 0; off < profiles; ++off) {
      if (static_cast<int>(off / shape.stride(i) % k) != to) continue;
      const std::size_t src = off + from * shape.stride(i) - to * shape.stride(i);
      for (int j = 0; j < n; ++j) flat[off * n + j] = flat[src * n + j];
    }
  }
  return Game::FromFlat(std::move(labels), std::move(flat));
}

}  // namespace dominia
