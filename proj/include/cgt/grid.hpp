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

#ifndef CGT_GRID_HPP_
#define CGT_GRID_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cgt::domineering {

inline constexpr int kMaxSide = 8;

// A Domineering board of at most 8x8 cells with some cells occupied.
// Cell (row, column) has index row * width + column; row 0 is the top row.
// A set bit in `filled` marks an occupied cell.
class GridPosition {
 public:
  constexpr GridPosition() = default;
  // Throws std::invalid_argument on bad dimensions or stray mask bits.
  GridPosition(int width, int height, std::uint64_t filled = 0);

  int width() const { return width_; }
  int height() const { return height_; }
  int cell_count() const { return width_ * height_; }
  std::uint64_t filled() const { return filled_; }
  std::uint64_t full_mask() const { return full_mask(width_, height_); }
  std::uint64_t empty() const { return full_mask() & ~filled_; }
  int empty_count() const { return std::popcount(empty()); }
  bool is_filled(int row, int column) const { return (filled_ >> index(row, column)) & 1u; }
  int index(int row, int column) const { return row * width_ + column; }

  static constexpr std::uint64_t full_mask(int width, int height) {
    const int n = width * height;
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  auto operator<=>(const GridPosition&) const = default;

 private:
  std::uint8_t width_ = 1;
  std::uint8_t height_ = 1;
  std::uint64_t filled_ = 0;
};

struct GridPositionHash {
  std::size_t operator()(const GridPosition& p) const {
    std::uint64_t h = p.filled() * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::uint64_t>(p.width() * 16 + p.height()) * 0xC2B2AE3D27D4EB4Full;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// Left plays vertical dominoes, Right horizontal ones. One result per
// placement, ordered by the index of the domino's first cell.
std::vector<GridPosition> left_moves(const GridPosition& p);
std::vector<GridPosition> right_moves(const GridPosition& p);
// Domino placements as bitmasks of their top (left) cell.
std::uint64_t left_move_cells(const GridPosition& p);
std::uint64_t right_move_cells(const GridPosition& p);

// 4-connected components of the empty cells, each cropped to its bounding
// box (other cells inside the box become filled). Ordered by first cell.
std::vector<GridPosition> decompose(const GridPosition& p);
int component_count(const GridPosition& p);

// Smallest box containing every empty cell; a full board becomes 1x1 filled.
GridPosition crop(const GridPosition& p);

GridPosition flip_horizontal(const GridPosition& p);
GridPosition flip_vertical(const GridPosition& p);
GridPosition rotate_180(const GridPosition& p);
GridPosition transpose(const GridPosition& p);
GridPosition rotate_90(const GridPosition& p);

// Grid-string order: compares the text forms, where '#' sorts before '.'.
bool text_less(const GridPosition& a, const GridPosition& b);

// Cache key: cropped, then the least of the four value-preserving images
// (identity, both flips, half turn). Quarter turns swap the players and are
// excluded.
GridPosition normalize(const GridPosition& p);

// Least of all eight dihedral images. Temperature is invariant under all of
// them; values are not, so this is never used as an evaluation key.
GridPosition symmetry_class(const GridPosition& p);
enum class SymmetryGroup {
  kDihedral,        // all eight rotations and reflections
  kValuePreserving  // identity, both flips and the half turn
};

// Least image of p under the group that keeps p's width and height.
GridPosition class_representative(const GridPosition& p, SymmetryGroup group = SymmetryGroup::kDihedral);
// True when no such image sorts before p.
bool is_class_representative(const GridPosition& p, SymmetryGroup group = SymmetryGroup::kDihedral);

// Rows of '.' (empty) and '#' (filled) separated by '|', top row first.
std::string display_grid(const GridPosition& p);
// Throws std::invalid_argument naming the problem on malformed text.
GridPosition parse_grid(std::string_view text);

// Does some dihedral image of the 2x5 hook appear on the board? Off-board
// cells count as filled.
bool contains_hook(const GridPosition& p);

}  // namespace cgt::domineering

#endif  // CGT_GRID_HPP_
