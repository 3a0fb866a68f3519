// Copyright 2026 The cgt-domineering Authors
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

#include "cgt/explicit_game.hpp"

#include <algorithm>

namespace cgt {
namespace {

// Does Left win when `left_to_move` says whose turn it is?
bool left_wins(const ExplicitGame& g, bool left_to_move) {
  if (left_to_move) {
    return std::ranges::any_of(g.left, [](const ExplicitGame& o) { return left_wins(o, false); });
  }
  return std::ranges::all_of(g.right, [](const ExplicitGame& o) { return left_wins(o, true); });
}

}  // namespace

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kLeft:
      return "Left";
    case Outcome::kRight:
      return "Right";
    case Outcome::kFirst:
      return "First";
    case Outcome::kSecond:
      return "Second";
  }
  return "?";
}

Outcome outcome_oracle(const ExplicitGame& g) {
  const bool left_first = left_wins(g, true);
  const bool left_second = left_wins(g, false);
  if (left_first && left_second) return Outcome::kLeft;
  if (!left_first && !left_second) return Outcome::kRight;
  return left_first ? Outcome::kFirst : Outcome::kSecond;
}

GameId canonical_of(GameStore& store, const ExplicitGame& g) {
  std::vector<GameId> left;
  std::vector<GameId> right;
  for (const auto& o : g.left) left.push_back(canonical_of(store, o));
  for (const auto& o : g.right) right.push_back(canonical_of(store, o));
  return store.construct(std::move(left), std::move(right));
}

ExplicitGame explicit_of(const GameStore& store, GameId g) {
  ExplicitGame out;
  for (GameId o : store.left_options(g)) out.left.push_back(explicit_of(store, o));
  for (GameId o : store.right_options(g)) out.right.push_back(explicit_of(store, o));
  return out;
}

ExplicitGame random_explicit_game(std::mt19937_64& rng, int depth, int max_options) {
  ExplicitGame g;
  if (depth <= 0) return g;
  std::uniform_int_distribution<int> count(0, max_options);
  const int nl = count(rng);
  const int nr = count(rng);
  for (int i = 0; i < nl; ++i) g.left.push_back(random_explicit_game(rng, depth - 1, max_options));
  for (int i = 0; i < nr; ++i) g.right.push_back(random_explicit_game(rng, depth - 1, max_options));
  return g;
}

}  // namespace cgt
