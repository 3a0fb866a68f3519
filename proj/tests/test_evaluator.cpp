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

#include <random>
#include <vector>

#include "cgt/evaluator.hpp"
#include "cgt/explicit_game.hpp"
#include "cgt/value_text.hpp"
#include "doctest.h"
#include "test_support.hpp"

using cgt::Dyadic;
using cgt::GameId;
using cgt::GameStore;
using cgt::domineering::Evaluator;
using cgt::domineering::GridPosition;
using cgt::domineering::TranspositionTable;
namespace dom = cgt::domineering;

namespace {

struct Fixture {
  GameStore store;
  TranspositionTable table;
  Evaluator ev{store, table};
  cgt::Thermography th{store};

  std::string value(const char* grid) { return cgt::display_value(store, ev.evaluate(dom::parse_grid(grid))); }
  GameId brute(const GridPosition& p) {
    return cgt::canonical_of(store, cgt::testing::domineering_tree(cgt::testing::to_chars(p)));
  }
};

}  // namespace

TEST_CASE("small position values") {
  Fixture f;
  CHECK(f.value(".") == "0");
  CHECK(f.value("#") == "0");
  CHECK(f.value(".|.") == "1");
  CHECK(f.value("..") == "-1");
  CHECK(f.value(".|.|.") == "1");
  CHECK(f.value(".|.|.|.") == "2");
  CHECK(f.value("..|..") == "±1");
  CHECK(f.value("..|.#") == "*");
  CHECK(f.value(".|.|#|.|.") == "2");
  CHECK(f.value("##.#.|##...|....#|#...#|..###") == "±(2*)");
  CHECK(dom::grid_temperature(f.ev, f.th, dom::parse_grid("##.#.|##...|....#|#...#|..###")) == Dyadic(2));
  CHECK(dom::grid_temperature(f.ev, f.th, dom::parse_grid("..|..")) == Dyadic(1));
  CHECK(dom::grid_temperature(f.ev, f.th, dom::parse_grid(".")) == Dyadic(-1));
}

TEST_CASE("evaluation agrees with the plain game tree") {
  Fixture f;
  std::mt19937_64 rng(41);
  int checked = 0;
  while (checked < 250) {
    const GridPosition p = cgt::testing::random_position(rng, 4, 3);
    if (p.empty_count() > 8) continue;
    CAPTURE(dom::display_grid(p));
    CHECK(f.ev.evaluate(p) == f.brute(p));
    ++checked;
  }
}

TEST_CASE("every 3x3 position matches the game tree") {
  Fixture f;
  for (std::uint64_t mask = 0; mask < 512; ++mask) {
    const GridPosition p(3, 3, mask);
    CAPTURE(dom::display_grid(p));
    const GameId g = f.ev.evaluate(p);
    CHECK(g == f.brute(p));
    const cgt::ExplicitGame tree = cgt::testing::domineering_tree(cgt::testing::to_chars(p));
    CHECK(cgt::testing::outcome_from_sign(f.store, g) == cgt::outcome_oracle(tree));
  }
}

TEST_CASE("transpose negates and value-preserving images agree") {
  Fixture f;
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> side(1, 6);
  int checked = 0;
  while (checked < 300) {
    const GridPosition p = cgt::testing::random_position(rng, side(rng), side(rng));
    if (p.empty_count() > 9) continue;
    CAPTURE(dom::display_grid(p));
    const GameId g = f.ev.evaluate(p);
    CHECK(f.ev.evaluate(dom::transpose(p)) == f.store.neg(g));
    CHECK(f.ev.evaluate(dom::rotate_90(p)) == f.store.neg(g));
    CHECK(f.ev.evaluate(dom::flip_horizontal(p)) == g);
    CHECK(f.ev.evaluate(dom::flip_vertical(p)) == g);
    CHECK(f.ev.evaluate(dom::rotate_180(p)) == g);
    ++checked;
  }
}

TEST_CASE("sum of components equals the whole") {
  Fixture f;
  std::mt19937_64 rng(47);
  for (int i = 0; i < 200; ++i) {
    const GridPosition p = cgt::testing::random_position(rng, 5, 5);
    if (p.empty_count() > 14) continue;
    GameId sum = f.store.zero();
    for (const auto& part : dom::decompose(p)) sum = f.store.add(sum, f.ev.evaluate_component(part));
    CHECK(f.ev.evaluate(p) == sum);
  }
}

TEST_CASE("cache contents do not change results") {
  std::mt19937_64 rng(53);
  std::vector<GridPosition> boards;
  for (int i = 0; i < 120; ++i) boards.push_back(cgt::testing::random_position(rng, 4, 4));
  Fixture forward;
  Fixture backward;
  std::vector<std::string> a;
  std::vector<std::string> b(boards.size());
  for (const auto& p : boards) a.push_back(cgt::display_value(forward.store, forward.ev.evaluate(p)));
  for (std::size_t i = boards.size(); i-- > 0;) {
    b[i] = cgt::display_value(backward.store, backward.ev.evaluate(boards[i]));
  }
  CHECK(a == b);
  CHECK(forward.table.size() > 0);
}
