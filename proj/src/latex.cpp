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

#include "cgt/latex.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string_view>

namespace cgt::domineering {
namespace {

std::string decimal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void check_value_text(const std::string& value) {
  constexpr std::string_view kAllowed = "0123456789-/*{}|,()";
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (kAllowed.find(value[i]) != std::string_view::npos) continue;
    if (value.compare(i, 2, "±") == 0) {
      ++i;
      continue;
    }
    throw std::invalid_argument("value \"" + value + "\" has characters outside the value grammar");
  }
}

}  // namespace

std::string tikz_picture(const GridPosition& p, double scale) {
  std::string out = "\\begin{tikzpicture}[scale=" + decimal(scale) + "]";
  for (int y = 0; y < p.height(); ++y) {
    const int row = p.height() - 1 - y;
    for (int x = 0; x < p.width(); ++x) {
      if (!p.is_filled(row, x)) continue;
      out += " \\fill[fill=gray] (" + std::to_string(x) + "," + std::to_string(y) + ") rectangle (" +
             std::to_string(x + 1) + "," + std::to_string(y + 1) + ");";
    }
  }
  out += " \\draw[step=1cm,black] (0,0) grid (" + std::to_string(p.width()) + ", " + std::to_string(p.height()) +
         "); \\end{tikzpicture}";
  return out;
}

std::string emit_table(const std::vector<SearchRecord>& records, const TableOptions& options) {
  if (options.columns < 1) throw std::invalid_argument("table needs at least one column");
  if (!(options.tikz_scale > 0)) throw std::invalid_argument("tikz scale must be positive");
  int widest = 0;
  for (const SearchRecord& r : records) {
    check_value_text(r.value);
    widest = std::max(widest, r.position.width());
  }

  std::string out =
      "% Requires \\usepackage{tabu}, \\usepackage{tikz} and \\usepackage{longtable}.\n"
      "{\n\\begin{longtabu}{";
  const std::string column = "m{" + decimal(options.tikz_scale * widest) + "cm} m{1cm}";
  for (int c = 0; c < options.columns; ++c) out += (c ? "|" : "") + column;
  out += "} \n";
  if (options.include_header) {
    out += "\\hline ";
    for (int c = 0; c < options.columns; ++c) out += c ? " & Position & Temp." : "Position & Temp.";
    out += " \\\\ \\hline \\endhead\n";
  }
  for (std::size_t first = 0; first < records.size(); first += options.columns) {
    for (int c = 0; c < options.columns; ++c) {
      const std::size_t i = first + c;
      if (c) out += " & ";
      if (i < records.size()) {
        out += tikz_picture(records[i].position, options.tikz_scale) + " & $" + records[i].temperature.to_string() +
               "$";
      } else {
        out += " & ";
      }
    }
    out += " \\\\\n";
  }
  out += "\\end{longtabu}\n}\n";
  return out;
}

}  // namespace cgt::domineering
