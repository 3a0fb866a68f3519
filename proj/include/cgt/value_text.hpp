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

#ifndef CGT_VALUE_TEXT_HPP_
#define CGT_VALUE_TEXT_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cgt/game_store.hpp"

namespace cgt {

// Malformed value text. `position()` is the byte offset of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Text form of a canonical value:
//   numbers        "0", "-3", "15/8"
//   number + star  "*", "2*", "-1/2*"
//   switches       "±2", "±(2*)", "±{2|1}"
//   other games    "{A,B|C}" (options sorted by their own text)
// The output never depends on GameId numbering, so it is stable across runs.
std::string display_value(GameStore& store, GameId g);

// Inverse of display_value.
//   expr := '±' unit | unit
//   unit := number ['*'] | '*' | '{' opts '|' opts '}' | '(' expr ')' | '±' unit
// "n*" binds tighter than '±', so "±2*" reads as ±(2*).
GameId parse_value(GameStore& store, std::string_view text);

}  // namespace cgt

#endif  // CGT_VALUE_TEXT_HPP_
