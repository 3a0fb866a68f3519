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

#include "cgt/value_text.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace cgt {
namespace {

constexpr std::string_view kPlusMinus = "±";

bool needs_parens(GameStore& store, GameId g, const std::string& text) {
  if (auto x = store.number_value(g)) return *x < Dyadic(0);
  return text != "*" && text.front() != '{';
}

std::string join_sorted(std::vector<std::string> parts) {
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out;
}

class Parser {
 public:
  Parser(GameStore& store, std::string_view text) : store_(store), text_(text) {}

  GameId parse_all() {
    GameId g = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  GameId switch_of(GameId g) { return store_.construct({g}, {store_.neg(g)}); }

  GameId expr() {
    if (consume(kPlusMinus)) return switch_of(unit());
    return unit();
  }

  GameId unit() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (consume(kPlusMinus)) return switch_of(unit());
    if (consume("(")) {
      GameId g = expr();
      if (!consume(")")) fail("expected ')'");
      return g;
    }
    if (consume("{")) return braced();
    if (consume("*")) return store_.star();
    const char c = text_[pos_];
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      GameId x = store_.number(number());
      if (consume("*")) return store_.construct({x}, {x});
      return x;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Dyadic number() {
    const std::size_t start = pos_;
    if (text_[pos_] == '-') ++pos_;
    auto digits = [&] {
      const std::size_t d = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == d) fail("expected digits");
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      digits();
    }
    auto value = Dyadic::parse(text_.substr(start, pos_ - start));
    if (!value) {
      pos_ = start;
      fail("invalid dyadic number");
    }
    return *value;
  }

  std::vector<GameId> option_list(char terminator) {
    std::vector<GameId> out;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == terminator) return out;
    for (;;) {
      out.push_back(expr());
      if (!consume(",")) break;
    }
    return out;
  }

  GameId braced() {
    std::vector<GameId> left = option_list('|');
    if (!consume("|")) fail("expected '|'");
    std::vector<GameId> right = option_list('}');
    if (!consume("}")) fail("expected '}'");
    return store_.construct(std::move(left), std::move(right));
  }

  GameStore& store_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string display_value(GameStore& store, GameId g) {
  if (auto x = store.number_value(g)) return x->to_string();
  const auto left = store.left_options(g);
  const auto right = store.right_options(g);
  if (left.size() == 1 && right.size() == 1) {
    if (left[0] == right[0]) {
      if (auto n = store.number_value(left[0])) {
        return *n == Dyadic(0) ? "*" : n->to_string() + "*";
      }
    }
    if (right[0] == store.neg(left[0])) {
      std::string inner = display_value(store, left[0]);
      if (needs_parens(store, left[0], inner)) inner = "(" + inner + ")";
      return std::string(kPlusMinus) + inner;
    }
  }
  std::vector<std::string> ls;
  std::vector<std::string> rs;
  for (GameId o : left) ls.push_back(display_value(store, o));
  for (GameId o : right) rs.push_back(display_value(store, o));
  return "{" + join_sorted(std::move(ls)) + "|" + join_sorted(std::move(rs)) + "}";
}

GameId parse_value(GameStore& store, std::string_view text) { return Parser(store, text).parse_all(); }

}  // namespace cgt
