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

#ifndef CGT_EXPLICIT_GAME_HPP_
#define CGT_EXPLICIT_GAME_HPP_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "cgt/game_store.hpp"

namespace cgt {

// A finite game tree with no simplification applied. Used as an independent
// reference for the canonical-form machinery.
struct ExplicitGame {
  std::vector<ExplicitGame> left;
  std::vector<ExplicitGame> right;
};

enum class Outcome { kLeft, kRight, kFirst, kSecond };

std::string_view outcome_name(Outcome o);

// Winner under optimal alternating play, found by exhaustive play-out. A
// player who cannot move loses.
Outcome outcome_oracle(const ExplicitGame& g);

// Canonical form of an explicit tree, built bottom-up with construct().
GameId canonical_of(GameStore& store, const ExplicitGame& g);

// Expands a canonical form back into a tree (exponential in depth).
ExplicitGame explicit_of(const GameStore& store, GameId g);

// Random tree of at most `depth` levels with at most `max_options` options
// per side.
ExplicitGame random_explicit_game(std::mt19937_64& rng, int depth, int max_options);

}  // namespace cgt

#endif  // CGT_EXPLICIT_GAME_HPP_
