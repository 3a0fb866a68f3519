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

#include <stdexcept>

#include "cgt/dyadic.hpp"
#include "doctest.h"

using cgt::Dyadic;

TEST_CASE("dyadic values are kept in lowest terms") {
  CHECK(Dyadic(15, 3).to_string() == "15/8");
  CHECK(Dyadic(4, 2) == Dyadic(1));
  CHECK(Dyadic(4, 2).exponent() == 0);
  CHECK(Dyadic(31, 4).to_string() == "31/16");
  CHECK(Dyadic(-6, 2).to_string() == "-3/2");
  CHECK(Dyadic(0, 5).exponent() == 0);
}

TEST_CASE("dyadic arithmetic is exact") {
  CHECK(Dyadic(1, 1) + Dyadic(1, 2) == Dyadic(3, 2));
  CHECK(Dyadic(1, 1) - Dyadic(3, 2) == Dyadic(-1, 2));
  CHECK(-Dyadic(15, 3) == Dyadic(-15, 3));
  CHECK(Dyadic(3, 3).times(4) == Dyadic(3, 1));
  CHECK(Dyadic(3).shifted_down(2) == Dyadic(3, 2));
  CHECK(cgt::min(Dyadic(7, 2), Dyadic(2)) == Dyadic(7, 2));
  CHECK(cgt::max(Dyadic(7, 2), Dyadic(2)) == Dyadic(2));
  CHECK(Dyadic(29, 4) < Dyadic(31, 4));
  CHECK(Dyadic(-1, 1) < Dyadic(0));
}

TEST_CASE("dyadic floor and ceil round toward the right infinities") {
  CHECK(Dyadic(-3, 1).floor() == -2);
  CHECK(Dyadic(-3, 1).ceil() == -1);
  CHECK(Dyadic(5, 2).floor() == 1);
  CHECK(Dyadic(5, 2).ceil() == 2);
  CHECK(Dyadic(4).floor() == 4);
}

TEST_CASE("dyadic overflow is reported") {
  const Dyadic big(INT64_MAX);
  CHECK_THROWS_AS(big + Dyadic(1), std::overflow_error);
  CHECK_THROWS_AS(big.times(2), std::overflow_error);
}

TEST_CASE("dyadic text round-trips and rejects other denominators") {
  for (const char* s : {"0", "2", "-1", "15/8", "-1/2", "31/16", "29/16"}) {
    auto d = Dyadic::parse(s);
    REQUIRE(d.has_value());
    CHECK(d->to_string() == s);
  }
  CHECK(Dyadic::parse("4/8") == Dyadic(1, 1));
  CHECK_FALSE(Dyadic::parse("1/3").has_value());
  CHECK_FALSE(Dyadic::parse("1/0").has_value());
  CHECK_FALSE(Dyadic::parse("").has_value());
  CHECK_FALSE(Dyadic::parse("x").has_value());
  CHECK_FALSE(Dyadic::parse("1/").has_value());
  CHECK_FALSE(Dyadic::parse("1/-2").has_value());
}

TEST_CASE("simplest number between two bounds") {
  using std::nullopt;
  CHECK(Dyadic::simplest_between(nullopt, nullopt) == Dyadic(0));
  CHECK(Dyadic::simplest_between(Dyadic(0), nullopt) == Dyadic(1));
  CHECK(Dyadic::simplest_between(Dyadic(1), nullopt) == Dyadic(2));
  CHECK(Dyadic::simplest_between(nullopt, Dyadic(-2)) == Dyadic(-3));
  CHECK(Dyadic::simplest_between(Dyadic(0), Dyadic(1)) == Dyadic(1, 1));
  CHECK(Dyadic::simplest_between(Dyadic(-1), Dyadic(3)) == Dyadic(0));
  CHECK(Dyadic::simplest_between(Dyadic(1), Dyadic(5)) == Dyadic(2));
  CHECK(Dyadic::simplest_between(Dyadic(-5), Dyadic(-1)) == Dyadic(-2));
  CHECK(Dyadic::simplest_between(Dyadic(3, 2), Dyadic(1)) == Dyadic(7, 3));
  CHECK(Dyadic::simplest_between(Dyadic(-1), Dyadic(-1, 1)) == Dyadic(-3, 2));
}
