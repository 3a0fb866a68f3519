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

#ifndef CGT_SEARCH_HPP_
#define CGT_SEARCH_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgt/dyadic.hpp"
#include "cgt/evaluator.hpp"
#include "cgt/game_store.hpp"
#include "cgt/grid.hpp"
#include "cgt/thermograph.hpp"

namespace cgt::domineering {

struct SearchConfig {
  int width = 0;
  int height = 0;
  // Records are kept when their temperature is at least this, or strictly
  // above it with strict_threshold.
  Dyadic min_temperature = Dyadic(-1);
  bool strict_threshold = false;
  std::optional<int> max_empty_tiles;
  bool allow_decomposable = false;
  // Empty cells must touch all four edges of the grid.
  bool require_spanning = true;
  bool dedup_symmetry = true;
  SymmetryGroup symmetry = SymmetryGroup::kDihedral;
  int worker_count = 1;
  ThermographMethod method = ThermographMethod::kScaffold;
};

// Throws std::invalid_argument describing the first problem found.
void validate(const SearchConfig& config);
bool passes_threshold(const SearchConfig& config, const Dyadic& temperature);

struct SearchRecord {
  GridPosition position;
  std::string value;
  Dyadic temperature;
  bool operator==(const SearchRecord&) const = default;
};

// Highest temperature first, ties broken by grid string.
bool record_order(const SearchRecord& a, const SearchRecord& b);

struct SearchStats {
  std::uint64_t masks = 0;
  std::uint64_t evaluated = 0;
  std::uint64_t kept = 0;
};

// Shared state for searches: one value universe and its caches.
struct SearchContext {
  GameStore& store;
  TranspositionTable& table;
  Thermography& thermography;
};

// Visits every filled mask of the grid, in parallel chunks, and returns the
// positions passing all filters whose temperature reaches the threshold.
// The result is identical for every worker count.
std::vector<SearchRecord> exhaustive_search(const SearchConfig& config, SearchContext context,
                                            SearchStats* stats = nullptr);

struct GeneticConfig {
  int generations = 10000;
  // Each child toggles between 1 and this many cells.
  int mutations_per_child = 3;
  int population_cap = 64;
  std::uint64_t rng_seed = 0;
};

// Mutation search from the seeds. The archive holds one record per symmetry
// class that reached config.min_temperature. The grid size comes from the
// seeds; config.width and config.height, when nonzero, must agree with it.
// Deterministic for a fixed rng_seed.
std::vector<SearchRecord> genetic_search(const SearchConfig& config, const std::vector<GridPosition>& seeds,
                                         const GeneticConfig& genetic, SearchContext context);

// Malformed results file; line() is 1-based.
class RecordsError : public std::runtime_error {
 public:
  RecordsError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct RecordsFile {
  int width = 0;
  int height = 0;
  std::vector<SearchRecord> records;
};

// "#cgt-search v1 <w>x<h>" followed by "<grid>\t<value>\t<temperature>" lines.
void write_records(std::ostream& out, const RecordsFile& file);
RecordsFile read_records(std::istream& in);
// Throw std::runtime_error on I/O failure.
void write_records_file(const std::string& path, const RecordsFile& file);
RecordsFile read_records_file(const std::string& path);

}  // namespace cgt::domineering

#endif  // CGT_SEARCH_HPP_
