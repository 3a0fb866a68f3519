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

#include "cgt/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "cgt/value_text.hpp"

namespace cgt::domineering {
namespace {

// Figures read top row first; '#' marks an occupied cell.
constexpr std::string_view kLBlock[] = {"..", ".#"};
constexpr std::string_view kCupTop[] = {".#.", "...", "#.#", "#.#"};
constexpr std::string_view kCupBlock[] = {"#..", "#.#"};
constexpr std::string_view kDclTop[] = {"##.#.", "##...", "....#", "#...#", "..#..", "###.#"};
constexpr std::string_view kDclBlock[] = {"###..", "###.#"};

std::uint8_t row_from_text(std::string_view row) {
  std::uint8_t bits = 0;
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c] == '#') bits |= static_cast<std::uint8_t>(1u << c);
  }
  return bits;
}

TallBoard board_from_rows(const std::vector<std::string_view>& rows) {
  std::vector<std::uint8_t> bits;
  bits.reserve(rows.size());
  for (std::string_view r : rows) bits.push_back(row_from_text(r));
  return TallBoard(static_cast<int>(rows.front().size()), std::move(bits));
}

std::uint8_t width_mask(int width) { return static_cast<std::uint8_t>((1u << width) - 1); }

}  // namespace

TallBoard::TallBoard(int width, std::vector<std::uint8_t> rows) : width_(width), rows_(std::move(rows)) {
  if (width < 1 || width > kMaxSide) throw std::invalid_argument("tall board width must be within 1..8");
  if (rows_.empty() || rows_.size() > kMaxTallHeight) {
    throw std::invalid_argument("tall board height must be within 1..32");
  }
  for (std::uint8_t r : rows_) {
    if (r & ~width_mask(width)) throw std::invalid_argument("tall board row has bits outside the board");
  }
}

int TallBoard::empty_count() const {
  int n = 0;
  for (std::uint8_t r : rows_) n += width_ - std::popcount(r);
  return n;
}

TallBoard TallBoard::parse(std::string_view text) {
  std::vector<std::string_view> rows;
  std::size_t start = 0;
  for (;;) {
    const std::size_t bar = text.find('|', start);
    rows.push_back(text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  for (std::string_view r : rows) {
    if (r.size() != rows.front().size()) throw std::invalid_argument("ragged board text");
    if (r.find_first_not_of(".#") != std::string_view::npos) {
      throw std::invalid_argument("illegal board character");
    }
  }
  if (rows.front().empty() || rows.front().size() > kMaxSide) {
    throw std::invalid_argument("tall board width must be within 1..8");
  }
  return board_from_rows(rows);
}

std::string TallBoard::display() const {
  std::string out;
  for (int r = 0; r < height(); ++r) {
    if (r) out += '|';
    for (int c = 0; c < width_; ++c) out += is_filled(r, c) ? '#' : '.';
  }
  return out;
}

std::optional<GridPosition> TallBoard::to_grid() const {
  if (height() > kMaxSide) return std::nullopt;
  std::uint64_t filled = 0;
  for (int r = 0; r < height(); ++r) filled |= static_cast<std::uint64_t>(rows_[r]) << (r * width_);
  return GridPosition(width_, height(), filled);
}

std::string_view family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kL:
      return "L";
    case FamilyKind::kLPlus:
      return "L+";
    case FamilyKind::kLMinus:
      return "L-";
    case FamilyKind::kLCup:
      return "Lcup";
    case FamilyKind::kDCL:
      return "DCL";
  }
  return "?";
}

std::optional<FamilyKind> parse_family(std::string_view name) {
  for (FamilyKind k : {FamilyKind::kL, FamilyKind::kLPlus, FamilyKind::kLMinus, FamilyKind::kLCup, FamilyKind::kDCL}) {
    if (family_name(k) == name) return k;
  }
  return std::nullopt;
}

TallBoard build_family(FamilyKind kind, int n) {
  if (n < 1) throw std::invalid_argument("family parameter n must be at least 1");
  std::vector<std::string_view> rows;
  switch (kind) {
    case FamilyKind::kL:
    case FamilyKind::kLPlus:
    case FamilyKind::kLMinus:
      if (kind == FamilyKind::kLPlus) rows.push_back(kLBlock[1]);
      for (int i = 0; i < n; ++i) rows.insert(rows.end(), std::begin(kLBlock), std::end(kLBlock));
      if (kind == FamilyKind::kLMinus) rows.pop_back();
      break;
    case FamilyKind::kLCup:
      rows.assign(std::begin(kCupTop), std::end(kCupTop));
      for (int i = 0; i < n; ++i) rows.insert(rows.end(), std::begin(kCupBlock), std::end(kCupBlock));
      break;
    case FamilyKind::kDCL:
      rows.assign(std::begin(kDclTop), std::end(kDclTop));
      for (int i = 1; i < n; ++i) rows.insert(rows.end(), std::begin(kDclBlock), std::end(kDclBlock));
      break;
  }
  if (rows.size() > kMaxTallHeight) {
    throw std::invalid_argument("family member is taller than 32 rows");
  }
  return board_from_rows(rows);
}

std::vector<TallBoard> decompose(const TallBoard& board) {
  const int w = board.width();
  const int h = board.height();
  std::vector<std::uint8_t> seen(board.rows());
  std::vector<TallBoard> out;
  std::vector<std::pair<int, int>> stack;
  for (int r0 = 0; r0 < h; ++r0) {
    for (int c0 = 0; c0 < w; ++c0) {
      if ((seen[r0] >> c0) & 1u) continue;
      std::vector<std::uint8_t> comp(h, 0);
      int top = r0;
      int bottom = r0;
      std::uint8_t cols = 0;
      stack.assign(1, {r0, c0});
      seen[r0] |= static_cast<std::uint8_t>(1u << c0);
      while (!stack.empty()) {
        const auto [r, c] = stack.back();
        stack.pop_back();
        comp[r] |= static_cast<std::uint8_t>(1u << c);
        top = std::min(top, r);
        bottom = std::max(bottom, r);
        cols |= static_cast<std::uint8_t>(1u << c);
        for (const auto& [nr, nc] : {std::pair{r - 1, c}, {r + 1, c}, {r, c - 1}, {r, c + 1}}) {
          if (nr < 0 || nr >= h || nc < 0 || nc >= w || ((seen[nr] >> nc) & 1u)) continue;
          seen[nr] |= static_cast<std::uint8_t>(1u << nc);
          stack.push_back({nr, nc});
        }
      }
      const int left = std::countr_zero(cols);
      const int cw = 8 - std::countl_zero(cols) - left;
      std::vector<std::uint8_t> rows;
      for (int r = top; r <= bottom; ++r) {
        rows.push_back(static_cast<std::uint8_t>(~(comp[r] >> left) & width_mask(cw)));
      }
      out.emplace_back(cw, std::move(rows));
    }
  }
  return out;
}

GameId TallEvaluator::evaluate(const TallBoard& board) {
  GameStore& store = evaluator_.store();
  GameId sum = store.zero();
  for (const TallBoard& part : decompose(board)) sum = store.add(sum, evaluate_component(part));
  return sum;
}

GameId TallEvaluator::evaluate_component(const TallBoard& component) {
  if (component.empty_count() <= 1) return evaluator_.store().zero();
  if (auto grid = component.to_grid()) return evaluator_.evaluate_component(*grid);
  std::string key = component.display();
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const int w = component.width();
  const int h = component.height();
  const auto& rows = component.rows();
  std::vector<GameId> left;
  std::vector<GameId> right;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (component.is_filled(r, c)) continue;
      const auto bit = static_cast<std::uint8_t>(1u << c);
      if (r + 1 < h && !component.is_filled(r + 1, c)) {
        std::vector<std::uint8_t> next = rows;
        next[r] |= bit;
        next[r + 1] |= bit;
        left.push_back(evaluate(TallBoard(w, std::move(next))));
      }
      if (c + 1 < w && !component.is_filled(r, c + 1)) {
        std::vector<std::uint8_t> next = rows;
        next[r] |= static_cast<std::uint8_t>(bit | (bit << 1));
        right.push_back(evaluate(TallBoard(w, std::move(next))));
      }
    }
  }
  const GameId value = evaluator_.store().construct(std::move(left), std::move(right));
  memo_.emplace(std::move(key), value);
  return value;
}

std::string expected_family_value(FamilyKind kind, int n) {
  const bool even = n % 2 == 0;
  switch (kind) {
    case FamilyKind::kL:
    case FamilyKind::kLPlus:
    case FamilyKind::kLMinus:
      return even ? "0" : "*";
    case FamilyKind::kLCup:
      return even ? "2*" : "2";
    case FamilyKind::kDCL:
      return even ? "±(2*)" : "±2";
  }
  return "";
}

std::vector<FamilyCheck> check_family(FamilyKind kind, int n_max, Evaluator& evaluator,
                                      Thermography& thermography) {
  GameStore& store = evaluator.store();
  TallEvaluator tall(evaluator);
  std::vector<FamilyCheck> out;
  for (int n = 1; n <= n_max; ++n) {
    FamilyCheck check{kind, n, expected_family_value(kind, n), "", std::nullopt, false};
    const GameId value = tall.evaluate(build_family(kind, n));
    check.computed = display_value(store, value);
    check.pass = value == parse_value(store, check.expected);
    if (kind == FamilyKind::kDCL) {
      check.temperature = thermography.temperature(value);
      check.pass = check.pass && *check.temperature == Dyadic(2);
    }
    out.push_back(std::move(check));
  }
  return out;
}

std::vector<FamilyCheck> verify_l_families(Evaluator& evaluator, Thermography& thermography, int n_max) {
  std::vector<FamilyCheck> out;
  for (FamilyKind k : {FamilyKind::kL, FamilyKind::kLPlus, FamilyKind::kLMinus}) {
    auto part = check_family(k, n_max, evaluator, thermography);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<FamilyCheck> verify_cup_family(Evaluator& evaluator, Thermography& thermography, int n_max) {
  return check_family(FamilyKind::kLCup, n_max, evaluator, thermography);
}

std::vector<FamilyCheck> verify_dcl_family(Evaluator& evaluator, Thermography& thermography, int n_max) {
  return check_family(FamilyKind::kDCL, n_max, evaluator, thermography);
}

}  // namespace cgt::domineering
