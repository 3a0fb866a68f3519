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

#ifndef CGT_FAMILIES_HPP_
#define CGT_FAMILIES_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "cgt/dyadic.hpp"
#include "cgt/evaluator.hpp"
#include "cgt/game_store.hpp"
#include "cgt/grid.hpp"
#include "cgt/thermograph.hpp"

namespace cgt::domineering {

inline constexpr int kMaxTallHeight = 32;

// Board of width <= 8 and height <= 32 for positions that outgrow the 8x8
// mask. Row 0 is the top row; bit c of a row marks column c as filled.
class TallBoard {
 public:
  // Throws std::invalid_argument on bad dimensions or stray bits.
  TallBoard(int width, std::vector<std::uint8_t> rows);

  int width() const { return width_; }
  int height() const { return static_cast<int>(rows_.size()); }
  bool is_filled(int row, int column) const { return (rows_[row] >> column) & 1u; }
  const std::vector<std::uint8_t>& rows() const { return rows_; }
  int empty_count() const;

  // Same text format as grid strings, up to 32 rows.
  static TallBoard parse(std::string_view text);
  std::string display() const;
  // The board as a GridPosition when it has at most 8 rows.
  std::optional<GridPosition> to_grid() const;

  bool operator==(const TallBoard&) const = default;

 private:
  int width_;
  std::vector<std::uint8_t> rows_;
};

enum class FamilyKind { kL, kLPlus, kLMinus, kLCup, kDCL };

// "L", "L+", "L-", "Lcup", "DCL".
std::string_view family_name(FamilyKind kind);
std::optional<FamilyKind> parse_family(std::string_view name);

// Chains of 2x2 L-shapes and the extended positions built from them; n >= 1.
// Throws std::invalid_argument for n < 1 or boards taller than 32 rows.
TallBoard build_family(FamilyKind kind, int n);

// Evaluates tall boards: components that fit in 8x8 go through the shared
// evaluator, taller ones are expanded here with a private cache.
class TallEvaluator {
 public:
  explicit TallEvaluator(Evaluator& evaluator) : evaluator_(evaluator) {}
  GameId evaluate(const TallBoard& board);

 private:
  GameId evaluate_component(const TallBoard& component);

  Evaluator& evaluator_;
  absl::flat_hash_map<std::string, GameId> memo_;
};

std::vector<TallBoard> decompose(const TallBoard& board);

struct FamilyCheck {
  FamilyKind kind;
  int n;
  std::string expected;
  std::string computed;
  // Checked against 2 for DCL only.
  std::optional<Dyadic> temperature;
  bool pass;
};

// The value each family member is claimed to have.
std::string expected_family_value(FamilyKind kind, int n);

std::vector<FamilyCheck> check_family(FamilyKind kind, int n_max, Evaluator& evaluator,
                                      Thermography& thermography);
// L, L+ and L- for n = 1..n_max.
std::vector<FamilyCheck> verify_l_families(Evaluator& evaluator, Thermography& thermography, int n_max = 5);
std::vector<FamilyCheck> verify_cup_family(Evaluator& evaluator, Thermography& thermography, int n_max = 3);
std::vector<FamilyCheck> verify_dcl_family(Evaluator& evaluator, Thermography& thermography, int n_max = 3);

}  // namespace cgt::domineering

#endif  // CGT_FAMILIES_HPP_
