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

#ifndef CGT_LATEX_HPP_
#define CGT_LATEX_HPP_

#include <string>
#include <vector>

#include "cgt/search.hpp"

namespace cgt::domineering {

struct TableOptions {
  int columns = 3;
  double tikz_scale = 0.4;
  bool include_header = true;
};

// A longtabu table of position pictures and temperatures, laid out row by
// row, for use with \input. Needs the tabu, tikz and longtable packages.
// Throws std::invalid_argument for columns < 1, a non-positive scale or a
// value string with characters outside the value grammar.
std::string emit_table(const std::vector<SearchRecord>& records, const TableOptions& options = {});

// One tikzpicture; cell (x, y) has its origin at the bottom-left corner.
std::string tikz_picture(const GridPosition& p, double scale);

}  // namespace cgt::domineering

#endif  // CGT_LATEX_HPP_
