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

#include "cgt/grid.hpp"

#include <array>
#include <stdexcept>

namespace cgt::domineering {
namespace {

constexpr std::array<std::uint8_t, 256> make_reverse_table() {
  std::array<std::uint8_t, 256> t{};
  for (int i = 0; i < 256; ++i) {
    int r = 0;
    for (int b = 0; b < 8; ++b) {
      if (i & (1 << b)) r |= 1 << (7 - b);
    }
    t[i] = static_cast<std::uint8_t>(r);
  }
  return t;
}

constexpr auto kReverse = make_reverse_table();

std::uint64_t row_bits(std::uint64_t mask, int row, int width) {
  return (mask >> (row * width)) & ((std::uint64_t{1} << width) - 1);
}

// Mask with bit (r * width + c) set for every row r and the given column.
std::uint64_t column_mask(int width, int height, int column) {
  std::uint64_t m = 0;
  for (int r = 0; r < height; ++r) m |= std::uint64_t{1} << (r * width + column);
  return m;
}

// Crops the cells of `cells` (a subset of the w x h board) to their bounding
// box; cells of the box outside `cells` come out filled.
GridPosition crop_cells(std::uint64_t cells, int width, int height) {
  if (cells == 0) return GridPosition(1, 1, 1);
  int r0 = height;
  int r1 = -1;
  std::uint64_t cols = 0;
  for (int r = 0; r < height; ++r) {
    const std::uint64_t bits = row_bits(cells, r, width);
    if (bits) {
      r0 = std::min(r0, r);
      r1 = r;
      cols |= bits;
    }
  }
  const int c0 = std::countr_zero(cols);
  const int c1 = 63 - std::countl_zero(cols);
  const int w = c1 - c0 + 1;
  const int h = r1 - r0 + 1;
  std::uint64_t kept = 0;
  for (int r = r0; r <= r1; ++r) {
    kept |= (row_bits(cells, r, width) >> c0) << ((r - r0) * w);
  }
  return GridPosition(w, h, GridPosition::full_mask(w, h) & ~kept);
}

std::uint64_t flood(std::uint64_t seed, std::uint64_t region, int width, std::uint64_t not_first,
                    std::uint64_t not_last) {
  std::uint64_t comp = seed;
  for (;;) {
    const std::uint64_t grown =
        (comp | (comp << width) | (comp >> width) | ((comp & not_last) << 1) | ((comp & not_first) >> 1)) &
        region;
    if (grown == comp) return comp;
    comp = grown;
  }
}

struct ColumnMasks {
  std::uint64_t not_first;
  std::uint64_t not_last;
};

ColumnMasks column_masks(const GridPosition& p) {
  const std::uint64_t full = p.full_mask();
  return {full & ~column_mask(p.width(), p.height(), 0),
          full & ~column_mask(p.width(), p.height(), p.width() - 1)};
}

template <class F>
GridPosition map_cells(const GridPosition& p, int new_width, int new_height, F source) {
  std::uint64_t out = 0;
  for (int r = 0; r < new_height; ++r) {
    for (int c = 0; c < new_width; ++c) {
      const auto [sr, sc] = source(r, c);
      if (p.is_filled(sr, sc)) out |= std::uint64_t{1} << (r * new_width + c);
    }
  }
  return GridPosition(new_width, new_height, out);
}

std::array<GridPosition, 8> dihedral_images(const GridPosition& p) {
  const GridPosition t = transpose(p);
  return {p, flip_horizontal(p), flip_vertical(p), rotate_180(p),
          t, flip_horizontal(t), flip_vertical(t), rotate_180(t)};
}

}  // namespace

GridPosition::GridPosition(int width, int height, std::uint64_t filled)
    : width_(static_cast<std::uint8_t>(width)), height_(static_cast<std::uint8_t>(height)), filled_(filled) {
  if (width < 1 || width > kMaxSide || height < 1 || height > kMaxSide) {
    throw std::invalid_argument("grid dimensions must be within 1..8, got " + std::to_string(width) + "x" +
                                std::to_string(height));
  }
  if (filled & ~full_mask(width, height)) throw std::invalid_argument("filled mask has bits outside the grid");
}

std::uint64_t left_move_cells(const GridPosition& p) {
  const std::uint64_t e = p.empty();
  return e & (e >> p.width());
}

std::uint64_t right_move_cells(const GridPosition& p) {
  const std::uint64_t e = p.empty();
  return e & (e >> 1) & column_masks(p).not_last;
}

namespace {

std::vector<GridPosition> place_all(const GridPosition& p, std::uint64_t cells, int step) {
  std::vector<GridPosition> out;
  out.reserve(std::popcount(cells));
  while (cells) {
    const int i = std::countr_zero(cells);
    cells &= cells - 1;
    const std::uint64_t domino = (std::uint64_t{1} << i) | (std::uint64_t{1} << (i + step));
    out.emplace_back(p.width(), p.height(), p.filled() | domino);
  }
  return out;
}

}  // namespace

std::vector<GridPosition> left_moves(const GridPosition& p) { return place_all(p, left_move_cells(p), p.width()); }

std::vector<GridPosition> right_moves(const GridPosition& p) { return place_all(p, right_move_cells(p), 1); }

std::vector<GridPosition> decompose(const GridPosition& p) {
  std::vector<GridPosition> out;
  const auto cols = column_masks(p);
  std::uint64_t remaining = p.empty();
  while (remaining) {
    const std::uint64_t comp = flood(remaining & -remaining, remaining, p.width(), cols.not_first, cols.not_last);
    remaining &= ~comp;
    out.push_back(crop_cells(comp, p.width(), p.height()));
  }
  return out;
}

int component_count(const GridPosition& p) {
  const auto cols = column_masks(p);
  std::uint64_t remaining = p.empty();
  int n = 0;
  while (remaining) {
    remaining &= ~flood(remaining & -remaining, remaining, p.width(), cols.not_first, cols.not_last);
    ++n;
  }
  return n;
}

GridPosition crop(const GridPosition& p) { return crop_cells(p.empty(), p.width(), p.height()); }

GridPosition flip_horizontal(const GridPosition& p) {
  const int w = p.width();
  std::uint64_t out = 0;
  for (int r = 0; r < p.height(); ++r) {
    const std::uint64_t rev = kReverse[row_bits(p.filled(), r, w)] >> (8 - w);
    out |= rev << (r * w);
  }
  return GridPosition(w, p.height(), out);
}

GridPosition flip_vertical(const GridPosition& p) {
  const int w = p.width();
  const int h = p.height();
  std::uint64_t out = 0;
  for (int r = 0; r < h; ++r) out |= row_bits(p.filled(), r, w) << ((h - 1 - r) * w);
  return GridPosition(w, h, out);
}

GridPosition rotate_180(const GridPosition& p) { return flip_vertical(flip_horizontal(p)); }

GridPosition transpose(const GridPosition& p) {
  return map_cells(p, p.height(), p.width(), [](int r, int c) { return std::pair{c, r}; });
}

GridPosition rotate_90(const GridPosition& p) { return flip_horizontal(transpose(p)); }

bool text_less(const GridPosition& a, const GridPosition& b) {
  if (a.width() == b.width() && a.height() == b.height()) {
    const std::uint64_t diff = a.filled() ^ b.filled();
    if (diff == 0) return false;
    // The first differing cell decides; '#' < '.'.
    return (a.filled() >> std::countr_zero(diff)) & 1u;
  }
  return display_grid(a) < display_grid(b);
}

GridPosition normalize(const GridPosition& p) {
  const GridPosition c = crop(p);
  GridPosition best = c;
  for (const GridPosition& q : {flip_horizontal(c), flip_vertical(c), rotate_180(c)}) {
    if (text_less(q, best)) best = q;
  }
  return best;
}

GridPosition symmetry_class(const GridPosition& p) {
  GridPosition best = p;
  for (const GridPosition& q : dihedral_images(p)) {
    if (text_less(q, best)) best = q;
  }
  return best;
}

GridPosition class_representative(const GridPosition& p, SymmetryGroup group) {
  const auto images = dihedral_images(p);
  const std::size_t count = group == SymmetryGroup::kDihedral ? images.size() : 4;
  GridPosition best = p;
  for (std::size_t i = 0; i < count; ++i) {
    const GridPosition& q = images[i];
    if (q.width() == p.width() && q.height() == p.height() && text_less(q, best)) best = q;
  }
  return best;
}

bool is_class_representative(const GridPosition& p, SymmetryGroup group) {
  const auto images = dihedral_images(p);
  const std::size_t count = group == SymmetryGroup::kDihedral ? images.size() : 4;
  for (std::size_t i = 0; i < count; ++i) {
    const GridPosition& q = images[i];
    if (q.width() == p.width() && q.height() == p.height() && text_less(q, p)) return false;
  }
  return true;
}

std::string display_grid(const GridPosition& p) {
  std::string out;
  out.reserve(static_cast<std::size_t>(p.height() * (p.width() + 1)));
  for (int r = 0; r < p.height(); ++r) {
    if (r) out += '|';
    for (int c = 0; c < p.width(); ++c) out += p.is_filled(r, c) ? '#' : '.';
  }
  return out;
}

GridPosition parse_grid(std::string_view text) {
  std::vector<std::string_view> rows;
  std::size_t start = 0;
  for (;;) {
    const std::size_t bar = text.find('|', start);
    rows.push_back(text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  const int height = static_cast<int>(rows.size());
  const int width = static_cast<int>(rows.front().size());
  if (width < 1 || width > kMaxSide || height > kMaxSide) {
    throw std::invalid_argument("grid must be 1..8 rows of 1..8 cells");
  }
  std::uint64_t filled = 0;
  for (int r = 0; r < height; ++r) {
    if (static_cast<int>(rows[r].size()) != width) {
      throw std::invalid_argument("ragged grid: row " + std::to_string(r + 1) + " has " +
                                  std::to_string(rows[r].size()) + " cells, expected " + std::to_string(width));
    }
    for (int c = 0; c < width; ++c) {
      const char ch = rows[r][c];
      if (ch == '#') {
        filled |= std::uint64_t{1} << (r * width + c);
      } else if (ch != '.') {
        throw std::invalid_argument(std::string("illegal grid character '") + ch + "' in row " +
                                    std::to_string(r + 1));
      }
    }
  }
  return GridPosition(width, height, filled);
}

bool contains_hook(const GridPosition& p) {
  static const GridPosition kHook = parse_grid("##|..|.#|..|##");
  for (const GridPosition& pattern : dihedral_images(kHook)) {
    const int pw = pattern.width();
    const int ph = pattern.height();
    for (int dr = 1 - ph; dr < p.height(); ++dr) {
      for (int dc = 1 - pw; dc < p.width(); ++dc) {
        bool match = true;
        for (int r = 0; r < ph && match; ++r) {
          for (int c = 0; c < pw && match; ++c) {
            const int br = dr + r;
            const int bc = dc + c;
            const bool on_board = br >= 0 && br < p.height() && bc >= 0 && bc < p.width();
            if (pattern.is_filled(r, c)) {
              match = !on_board || p.is_filled(br, bc);
            } else {
              match = on_board && !p.is_filled(br, bc);
            }
          }
        }
        if (match) return true;
      }
    }
  }
  return false;
}

}  // namespace cgt::domineering
