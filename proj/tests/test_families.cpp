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
#include "cgt/families.hpp"
#include "cgt/value_text.hpp"
#include "doctest.h"
#include "test_support.hpp"

using cgt::GameStore;
using cgt::domineering::FamilyKind;
using cgt::domineering::TallBoard;
namespace dom = cgt::domineering;

namespace {

cgt::testing::CharBoard chars(const TallBoard& b) {
  cgt::testing::CharBoard out(b.height(), std::string(b.width(), '.'));
  for (int r = 0; r < b.height(); ++r) {
    for (int c = 0; c < b.width(); ++c) {
      if (b.is_filled(r, c)) out[r][c] = '#';
    }
  }
  return out;
}

struct Fixture {
  GameStore store;
  dom::TranspositionTable table;
  dom::Evaluator ev{store, table};
  dom::TallEvaluator tall{ev};
  cgt::Thermography th{store};
};

}  // namespace

TEST_CASE("tall board text") {
  const TallBoard b = TallBoard::parse(".|.|.|.|.|.|.|.|.|.|.|#");
  CHECK(b.height() == 12);
  CHECK(b.width() == 1);
  CHECK(b.empty_count() == 11);
  CHECK(b.display() == ".|.|.|.|.|.|.|.|.|.|.|#");
  CHECK_FALSE(b.to_grid().has_value());
  CHECK(TallBoard::parse("..|.#").to_grid() == dom::parse_grid("..|.#"));
  CHECK_THROWS(TallBoard::parse("..|."));
  CHECK_THROWS(TallBoard::parse("........."));
  std::string tall = ".";
  for (int i = 0; i < 32; ++i) tall += "|.";
  CHECK_THROWS(TallBoard::parse(tall));
}

TEST_CASE("family names") {
  for (FamilyKind k : {FamilyKind::kL, FamilyKind::kLPlus, FamilyKind::kLMinus, FamilyKind::kLCup, FamilyKind::kDCL}) {
    CHECK(dom::parse_family(dom::family_name(k)) == k);
  }
  CHECK_FALSE(dom::parse_family("X").has_value());
}

TEST_CASE("family geometry") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(dom::build_family(FamilyKind::kL, n).height() == 2 * n);
    CHECK(dom::build_family(FamilyKind::kLPlus, n).height() == 2 * n + 1);
    CHECK(dom::build_family(FamilyKind::kLMinus, n).height() == 2 * n - 1);
    CHECK(dom::build_family(FamilyKind::kLCup, n).height() == 4 + 2 * n);
    CHECK(dom::build_family(FamilyKind::kDCL, n).height() == 4 + 2 * n);
    CHECK(dom::build_family(FamilyKind::kL, n).width() == 2);
    CHECK(dom::build_family(FamilyKind::kLCup, n).width() == 3);
    CHECK(dom::build_family(FamilyKind::kDCL, n).width() == 5);
    CHECK(dom::build_family(FamilyKind::kL, n).empty_count() == 3 * n);
    CHECK(dom::decompose(dom::build_family(FamilyKind::kLCup, n)).size() == 1);
    CHECK(dom::decompose(dom::build_family(FamilyKind::kDCL, n)).size() == 1);
  }
  CHECK(dom::build_family(FamilyKind::kL, 2).display() == "..|.#|..|.#");
  CHECK(dom::build_family(FamilyKind::kLPlus, 1).display() == ".#|..|.#");
  CHECK(dom::build_family(FamilyKind::kDCL, 1).display() == "##.#.|##...|....#|#...#|..#..|###.#");
}

TEST_CASE("vertical strips beyond eight rows") {
  Fixture f;
  for (int len = 1; len <= 30; ++len) {
    std::string text = ".";
    for (int i = 1; i < len; ++i) text += "|.";
    CAPTURE(len);
    CHECK(f.tall.evaluate(TallBoard::parse(text)) == f.store.integer(len / 2));
  }
}

TEST_CASE("tall evaluation matches the game tree") {
  Fixture f;
  for (FamilyKind k : {FamilyKind::kL, FamilyKind::kLPlus, FamilyKind::kLMinus}) {
    for (int n = 1; n <= 4; ++n) {
      const TallBoard b = dom::build_family(k, n);
      CAPTURE(b.display());
      CHECK(f.tall.evaluate(b) == cgt::canonical_of(f.store, cgt::testing::domineering_tree(chars(b))));
    }
  }
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<int> bit(0, 2);
  for (int i = 0; i < 60; ++i) {
    std::vector<std::uint8_t> rows(12);
    int empty = 0;
    for (auto& row : rows) {
      for (int c = 0; c < 2; ++c) {
        if (bit(rng) == 0 && empty < 11) {
          ++empty;
        } else {
          row |= static_cast<std::uint8_t>(1u << c);
        }
      }
    }
    const TallBoard b(2, rows);
    CAPTURE(b.display());
    CHECK(f.tall.evaluate(b) == cgt::canonical_of(f.store, cgt::testing::domineering_tree(chars(b))));
  }
}

TEST_CASE("family checks report computed values") {
  Fixture f;
  const auto cup = dom::verify_cup_family(f.ev, f.th, 3);
  REQUIRE(cup.size() == 3);
  for (const auto& c : cup) CHECK(c.pass);
  CHECK(cup[1].expected == "2*");
  const auto dcl = dom::verify_dcl_family(f.ev, f.th, 2);
  REQUIRE(dcl.size() == 2);
  for (const auto& c : dcl) {
    CHECK(c.pass);
    CHECK(c.temperature == cgt::Dyadic(2));
  }
  const auto l = dom::check_family(FamilyKind::kLMinus, 2, f.ev, f.th);
  CHECK(l[0].computed == "-1");
  CHECK_FALSE(l[0].pass);
  CHECK(l[1].pass);
}
