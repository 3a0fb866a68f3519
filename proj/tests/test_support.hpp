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

// Reference implementations for tests. Nothing here uses the engine's
// simplification, bit tricks or caches.

#ifndef CGT_TESTS_TEST_SUPPORT_HPP_
#define CGT_TESTS_TEST_SUPPORT_HPP_

#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cgt/explicit_game.hpp"
#include "cgt/game_store.hpp"
#include "cgt/grid.hpp"

namespace cgt::testing {

// A board as rows of '.' and '#'.
using CharBoard = std::vector<std::string>;

inline CharBoard to_chars(const domineering::GridPosition& p) {
  CharBoard b(p.height(), std::string(p.width(), '.'));
  for (int r = 0; r < p.height(); ++r) {
    for (int c = 0; c < p.width(); ++c) {
      if (p.is_filled(r, c)) b[r][c] = '#';
    }
  }
  return b;
}

// Full game tree of a Domineering board, no decomposition.
inline ExplicitGame domineering_tree(const CharBoard& b) {
  ExplicitGame g;
  const int h = static_cast<int>(b.size());
  const int w = static_cast<int>(b[0].size());
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (b[r][c] != '.') continue;
      if (r + 1 < h && b[r + 1][c] == '.') {
        CharBoard next = b;
        next[r][c] = next[r + 1][c] = '#';
        g.left.push_back(domineering_tree(next));
      }
      if (c + 1 < w && b[r][c + 1] == '.') {
        CharBoard next = b;
        next[r][c] = next[r][c + 1] = '#';
        g.right.push_back(domineering_tree(next));
      }
    }
  }
  return g;
}

// G <= H straight from the definition.
inline bool naive_leq(const ExplicitGame& g, const ExplicitGame& h) {
  for (const ExplicitGame& gl : g.left) {
    if (naive_leq(h, gl)) return false;
  }
  for (const ExplicitGame& hr : h.right) {
    if (naive_leq(hr, g)) return false;
  }
  return true;
}

// Outcome class implied by comparing a value with zero.
inline Outcome outcome_from_sign(GameStore& store, GameId g) {
  const bool ge = store.geq(g, store.zero());
  const bool le = store.leq(g, store.zero());
  if (ge && le) return Outcome::kSecond;
  if (ge) return Outcome::kLeft;
  if (le) return Outcome::kRight;
  return Outcome::kFirst;
}

inline domineering::GridPosition random_position(std::mt19937_64& rng, int width, int height) {
  std::uniform_int_distribution<std::uint64_t> bits;
  return domineering::GridPosition(width, height, bits(rng) & domineering::GridPosition::full_mask(width, height));
}

// Random connected component with `cells` empty cells grown from one cell,
// cropped to its bounding box.
inline domineering::GridPosition random_component(std::mt19937_64& rng, int cells, int side = 6) {
  const std::uint64_t full = domineering::GridPosition::full_mask(side, side);
  std::uniform_int_distribution<int> pick(0, side * side - 1);
  std::uint64_t empty = std::uint64_t{1} << pick(rng);
  while (std::popcount(empty) < cells) {
    const int i = pick(rng);
    const int r = i / side;
    const int c = i % side;
    if ((empty >> i) & 1u) continue;
    const bool touches = (r > 0 && ((empty >> (i - side)) & 1u)) || (r + 1 < side && ((empty >> (i + side)) & 1u)) ||
                         (c > 0 && ((empty >> (i - 1)) & 1u)) || (c + 1 < side && ((empty >> (i + 1)) & 1u));
    if (touches) empty |= std::uint64_t{1} << i;
  }
  return domineering::crop(domineering::GridPosition(side, side, full & ~empty));
}

}  // namespace cgt::testing

#endif  // CGT_TESTS_TEST_SUPPORT_HPP_
