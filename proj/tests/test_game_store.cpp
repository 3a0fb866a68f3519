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

#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "cgt/detail/sharded_map.hpp"
#include "cgt/explicit_game.hpp"
#include "cgt/game_store.hpp"
#include "cgt/value_text.hpp"
#include "doctest.h"
#include "test_support.hpp"

using cgt::Dyadic;
using cgt::GameId;
using cgt::GameStore;

namespace {

std::vector<GameId> random_games(GameStore& store, std::uint64_t seed, int count, int depth = 3) {
  std::mt19937_64 rng(seed);
  std::vector<GameId> out;
  for (int i = 0; i < count; ++i) out.push_back(cgt::canonical_of(store, cgt::random_explicit_game(rng, depth, 3)));
  return out;
}

}  // namespace

TEST_CASE("construct simplifies small games") {
  GameStore s;
  CHECK(s.construct({}, {}) == s.zero());
  CHECK(s.construct({s.zero()}, {s.zero()}) == s.star());
  CHECK(s.construct({s.zero(), s.integer(1)}, {}) == s.integer(2));
  CHECK(s.construct({s.zero()}, {s.integer(1)}) == s.number(Dyadic(1, 1)));
  CHECK(s.construct({s.star()}, {s.star()}) == s.zero());
  // {0,*|0} is up-star: neither left option dominates the other.
  const GameId up_star = s.construct({s.zero(), s.star()}, {s.zero()});
  CHECK(s.left_options(up_star).size() == 2);
  CHECK(s.confused(up_star, s.zero()));
}

TEST_CASE("number queries") {
  GameStore s;
  CHECK(s.number_value(s.zero()) == Dyadic(0));
  CHECK_FALSE(s.number_value(s.star()).has_value());
  CHECK(s.number_value(s.construct({s.zero()}, {s.integer(1)})) == Dyadic(1, 1));
  CHECK(s.number_value(s.integer(-7)) == Dyadic(-7));
  CHECK(s.birthday(s.integer(3)) == 3);
  CHECK(s.birthday(s.star()) == 1);
}

TEST_CASE("leq on basic values") {
  GameStore s;
  CHECK(s.leq(s.zero(), s.zero()));
  CHECK(s.leq(s.integer(1), s.integer(2)));
  CHECK_FALSE(s.leq(s.integer(2), s.integer(1)));
  CHECK_FALSE(s.leq(s.star(), s.zero()));
  CHECK_FALSE(s.leq(s.zero(), s.star()));
  CHECK(s.confused(s.star(), s.zero()));
  const GameId pm2 = s.construct({s.integer(2)}, {s.integer(-2)});
  CHECK(s.confused(pm2, s.integer(1)));
  CHECK(s.leq(pm2, s.integer(3)));
}

TEST_CASE("negation and addition") {
  GameStore s;
  CHECK(s.neg(s.zero()) == s.zero());
  CHECK(s.neg(s.integer(2)) == s.integer(-2));
  CHECK(s.neg(s.star()) == s.star());
  CHECK(s.add(s.integer(1), s.integer(1)) == s.integer(2));
  CHECK(s.add(s.star(), s.star()) == s.zero());
  const GameId sw = s.construct({s.integer(2)}, {s.integer(-2)});
  CHECK(s.add(sw, s.zero()) == sw);
  CHECK(s.add(sw, sw) == s.zero());
  const GameId two_one = s.construct({s.integer(2)}, {s.integer(1)});
  CHECK(cgt::display_value(s, s.add(two_one, s.star())) == "{2*|1*}");
}

TEST_CASE("leq matches the definition on explicit trees") {
  GameStore s;
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const cgt::ExplicitGame a = cgt::random_explicit_game(rng, 3, 3);
    const cgt::ExplicitGame b = cgt::random_explicit_game(rng, 3, 3);
    const GameId ga = cgt::canonical_of(s, a);
    const GameId gb = cgt::canonical_of(s, b);
    CHECK(s.leq(ga, gb) == cgt::testing::naive_leq(a, b));
    CHECK(s.leq(gb, ga) == cgt::testing::naive_leq(b, a));
    ++checked;
  }
  CHECK(checked == 300);
}

TEST_CASE("canonical sign agrees with the outcome oracle") {
  GameStore s;
  std::mt19937_64 rng(11);
  for (int i = 0; i < 400; ++i) {
    const cgt::ExplicitGame g = cgt::random_explicit_game(rng, 4, 3);
    const GameId c = cgt::canonical_of(s, g);
    CHECK(cgt::testing::outcome_from_sign(s, c) == cgt::outcome_oracle(g));
  }
}

TEST_CASE("canonical forms are fixed points of construct") {
  GameStore s;
  for (GameId g : random_games(s, 3, 300)) {
    const auto l = s.left_options(g);
    const auto r = s.right_options(g);
    CHECK(s.construct({l.begin(), l.end()}, {r.begin(), r.end()}) == g);
  }
}

TEST_CASE("canonical forms have no dominated or reversible options") {
  GameStore s;
  for (GameId g : random_games(s, 5, 300)) {
    const auto l = s.left_options(g);
    const auto r = s.right_options(g);
    for (GameId a : l) {
      for (GameId b : l) {
        if (a != b) CHECK_FALSE(s.leq(a, b));
      }
      for (GameId ar : s.right_options(a)) CHECK_FALSE(s.leq(ar, g));
    }
    for (GameId a : r) {
      for (GameId b : r) {
        if (a != b) CHECK_FALSE(s.leq(b, a));
      }
      for (GameId al : s.left_options(a)) CHECK_FALSE(s.leq(g, al));
    }
  }
}

TEST_CASE("number-shaped games are always interned as numbers") {
  GameStore s;
  random_games(s, 9, 400, 4);
  const std::size_t nodes = s.stats().nodes;
  for (std::uint32_t i = 0; i < nodes; ++i) {
    const GameId g{i};
    if (s.is_number(g)) continue;
    std::optional<Dyadic> lo;
    std::optional<Dyadic> hi;
    bool all_numbers = true;
    for (GameId o : s.left_options(g)) {
      all_numbers = all_numbers && s.is_number(o);
      if (s.is_number(o) && (!lo || *lo < *s.number_value(o))) lo = s.number_value(o);
    }
    for (GameId o : s.right_options(g)) {
      all_numbers = all_numbers && s.is_number(o);
      if (s.is_number(o) && (!hi || *s.number_value(o) < *hi)) hi = s.number_value(o);
    }
    const bool number_shaped = all_numbers && !(lo && hi && !(*lo < *hi));
    CHECK_FALSE(number_shaped);
  }
}

TEST_CASE("order axioms on random games") {
  GameStore s;
  const auto games = random_games(s, 13, 40);
  for (GameId a : games) {
    CHECK(s.leq(a, a));
    for (GameId b : games) {
      if (s.leq(a, b) && s.leq(b, a)) CHECK(a == b);
      for (GameId c : games) {
        if (s.leq(a, b) && s.leq(b, c)) CHECK(s.leq(a, c));
      }
    }
  }
}

TEST_CASE("group laws on random games") {
  GameStore s;
  const auto games = random_games(s, 17, 220);
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<std::size_t> pick(0, games.size() - 1);
  for (GameId g : games) {
    CHECK(s.add(g, s.neg(g)) == s.zero());
    CHECK(s.neg(s.neg(g)) == g);
  }
  for (int i = 0; i < 200; ++i) {
    const GameId a = games[pick(rng)];
    const GameId b = games[pick(rng)];
    const GameId c = games[pick(rng)];
    CHECK(s.add(a, b) == s.add(b, a));
    CHECK(s.add(s.add(a, b), c) == s.add(a, s.add(b, c)));
  }
}

TEST_CASE("interning is shared across threads") {
  GameStore s;
  std::vector<GameId> first = random_games(s, 23, 50);
  std::vector<std::vector<GameId>> results(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] { results[t] = random_games(s, 23, 50); });
  }
  for (auto& t : threads) t.join();
  for (const auto& r : results) CHECK(r == first);
}

TEST_CASE("bounded sharded map") {
  cgt::detail::ShardedMap<int, int> bounded(2, 64);
  for (int i = 0; i < 1000; ++i) {
    CHECK(bounded.insert(i, 2 * i) == 2 * i);
    CHECK(bounded.size() <= 64);
    CHECK(bounded.find(i) == std::optional<int>(2 * i));
  }
  CHECK(bounded.evictions() > 0);
  cgt::detail::ShardedMap<int, int> unbounded(2);
  for (int i = 0; i < 1000; ++i) unbounded.insert(i, i);
  CHECK(unbounded.size() == 1000);
  CHECK(unbounded.insert(5, 7) == 5);
  CHECK(unbounded.evictions() == 0);
}
