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
#include <string>

#include "cgt/explicit_game.hpp"
#include "cgt/value_text.hpp"
#include "doctest.h"

using cgt::GameId;
using cgt::GameStore;
using cgt::ParseError;

TEST_CASE("display of numbers, stars and switches") {
  GameStore s;
  CHECK(cgt::display_value(s, s.zero()) == "0");
  CHECK(cgt::display_value(s, s.star()) == "*");
  CHECK(cgt::display_value(s, s.integer(-3)) == "-3");
  CHECK(cgt::display_value(s, s.number(cgt::Dyadic(15, 3))) == "15/8");
  CHECK(cgt::display_value(s, s.add(s.integer(2), s.star())) == "2*");
  CHECK(cgt::display_value(s, s.add(s.number(cgt::Dyadic(-1, 1)), s.star())) == "-1/2*");
  const GameId two_star = s.add(s.integer(2), s.star());
  CHECK(cgt::display_value(s, s.construct({two_star}, {s.neg(two_star)})) == "±(2*)");
  CHECK(cgt::display_value(s, s.construct({s.integer(2)}, {s.integer(-2)})) == "±2");
  CHECK(cgt::display_value(s, s.construct({s.integer(2)}, {s.integer(1)})) == "{2|1}");
  CHECK(cgt::display_value(s, s.construct({s.integer(1)}, {s.integer(-1)})) == "±1");
}

TEST_CASE("parse builds canonical values") {
  GameStore s;
  const GameId g = cgt::parse_value(s, "{2|1}");
  REQUIRE(s.left_options(g).size() == 1);
  REQUIRE(s.right_options(g).size() == 1);
  CHECK(s.left_options(g)[0] == s.integer(2));
  CHECK(s.right_options(g)[0] == s.integer(1));
  CHECK(cgt::parse_value(s, "0") == s.zero());
  CHECK(cgt::parse_value(s, "*") == s.star());
  CHECK(cgt::parse_value(s, "±2*") == cgt::parse_value(s, "±(2*)"));
  CHECK(cgt::parse_value(s, "{0|1}") == s.number(cgt::Dyadic(1, 1)));
  CHECK(cgt::parse_value(s, "{|}") == s.zero());
  CHECK(cgt::parse_value(s, "{0,*|0}") == s.construct({s.zero(), s.star()}, {s.zero()}));
  CHECK(cgt::parse_value(s, " { 2 | 1 } ") == g);
}

TEST_CASE("parse errors carry a position") {
  GameStore s;
  auto position_of = [&](const std::string& text) -> std::size_t {
    try {
      cgt::parse_value(s, text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position_of("{2|1") == 4);
  CHECK(position_of("{2|1}}") == 5);
  CHECK(position_of("") == 0);
  CHECK(position_of("1/3") == 0);
  CHECK(position_of("{2|x}") == 3);
  CHECK(position_of("±") == 2);
}

TEST_CASE("display and parse round-trip on random canonical forms") {
  GameStore s;
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const GameId g = cgt::canonical_of(s, cgt::random_explicit_game(rng, 4, 3));
    const std::string text = cgt::display_value(s, g);
    CHECK_MESSAGE(cgt::parse_value(s, text) == g, text);
  }
}

TEST_CASE("display does not depend on interning order") {
  GameStore a;
  GameStore b;
  std::mt19937_64 rng(9);
  std::vector<cgt::ExplicitGame> games;
  for (int i = 0; i < 100; ++i) games.push_back(cgt::random_explicit_game(rng, 3, 3));
  std::vector<std::string> forward;
  for (const auto& g : games) forward.push_back(cgt::display_value(a, cgt::canonical_of(a, g)));
  for (std::size_t i = games.size(); i-- > 0;) {
    CHECK(cgt::display_value(b, cgt::canonical_of(b, games[i])) == forward[i]);
  }
}
