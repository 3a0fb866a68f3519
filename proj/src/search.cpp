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

#include "cgt/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <new>
#include <random>
#include <thread>

#include "absl/container/flat_hash_map.h"
#include "cgt/value_text.hpp"

namespace cgt::domineering {
namespace {

constexpr int kChunkBits = 12;

struct BoardMasks {
  std::uint64_t full = 0;
  std::uint64_t first_row = 0;
  std::uint64_t last_row = 0;
  std::uint64_t first_column = 0;
  std::uint64_t last_column = 0;
};

BoardMasks board_masks(int width, int height) {
  BoardMasks m;
  m.full = GridPosition::full_mask(width, height);
  m.first_row = (std::uint64_t{1} << width) - 1;
  m.last_row = m.first_row << ((height - 1) * width);
  for (int r = 0; r < height; ++r) {
    m.first_column |= std::uint64_t{1} << (r * width);
    m.last_column |= std::uint64_t{1} << (r * width + width - 1);
  }
  return m;
}

bool is_connected(std::uint64_t empty, int width, const BoardMasks& m) {
  std::uint64_t comp = empty & -empty;
  for (;;) {
    const std::uint64_t grown = (comp | (comp << width) | (comp >> width) | ((comp & ~m.last_column) << 1) |
                                 ((comp & ~m.first_column) >> 1)) &
                                empty;
    if (grown == comp) return comp == empty;
    comp = grown;
  }
}

bool spans(std::uint64_t empty, const BoardMasks& m) {
  return (empty & m.first_row) && (empty & m.last_row) && (empty & m.first_column) && (empty & m.last_column);
}

std::runtime_error out_of_memory(const SearchContext& ctx) {
  return std::runtime_error("out of memory: transposition table holds " + std::to_string(ctx.table.size()) +
                            " positions, game store " + std::to_string(ctx.store.stats().nodes) + " nodes");
}

SearchRecord make_record(const GridPosition& p, GameId value, const Dyadic& temperature, SearchContext ctx) {
  return SearchRecord{p, display_value(ctx.store, value), temperature};
}

}  // namespace

void validate(const SearchConfig& config) {
  if (config.width < 1 || config.width > kMaxSide || config.height < 1 || config.height > kMaxSide) {
    throw std::invalid_argument("width and height must be within 1..8");
  }
  if (config.max_empty_tiles && *config.max_empty_tiles < 0) {
    throw std::invalid_argument("max empty tiles must be non-negative");
  }
  if (config.worker_count < 1) throw std::invalid_argument("worker count must be positive");
}

bool passes_threshold(const SearchConfig& config, const Dyadic& temperature) {
  return config.strict_threshold ? temperature > config.min_temperature : temperature >= config.min_temperature;
}

bool record_order(const SearchRecord& a, const SearchRecord& b) {
  if (a.temperature != b.temperature) return a.temperature > b.temperature;
  return display_grid(a.position) < display_grid(b.position);
}

std::vector<SearchRecord> exhaustive_search(const SearchConfig& config, SearchContext ctx, SearchStats* stats) {
  validate(config);
  const int cells = config.width * config.height;
  if (cells > 63) throw std::invalid_argument("exhaustive search supports at most 63 cells");
  const BoardMasks masks = board_masks(config.width, config.height);
  const int chunk_bits = std::min(cells, kChunkBits);
  const std::uint64_t chunk_count = std::uint64_t{1} << (cells - chunk_bits);
  const int max_empty = config.max_empty_tiles.value_or(cells);

  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> evaluated{0};
  std::mutex merge_mu;
  std::vector<SearchRecord> records;
  std::exception_ptr failure;

  auto worker = [&] {
    try {
      Evaluator evaluator(ctx.store, ctx.table);
      std::vector<SearchRecord> local;
      std::uint64_t local_evaluated = 0;
      for (std::uint64_t chunk; (chunk = next_chunk.fetch_add(1)) < chunk_count;) {
        const std::uint64_t begin = chunk << chunk_bits;
        const std::uint64_t end = begin + (std::uint64_t{1} << chunk_bits);
        for (std::uint64_t filled = begin; filled < end; ++filled) {
          const std::uint64_t empty = masks.full & ~filled;
          if (std::popcount(empty) > max_empty || empty == 0) continue;
          if (config.require_spanning && !spans(empty, masks)) continue;
          if (!config.allow_decomposable && !is_connected(empty, config.width, masks)) continue;
          const GridPosition p(config.width, config.height, filled);
          if (config.dedup_symmetry && !is_class_representative(p, config.symmetry)) continue;
          ++local_evaluated;
          const GameId value = evaluator.evaluate(p);
          const Dyadic t = ctx.thermography.temperature(value, config.method);
          if (passes_threshold(config, t)) local.push_back(make_record(p, value, t, ctx));
        }
      }
      std::lock_guard lock(merge_mu);
      records.insert(records.end(), local.begin(), local.end());
      evaluated += local_evaluated;
    } catch (const std::bad_alloc&) {
      std::lock_guard lock(merge_mu);
      if (!failure) failure = std::make_exception_ptr(out_of_memory(ctx));
      next_chunk = chunk_count;
    } catch (...) {
      std::lock_guard lock(merge_mu);
      if (!failure) failure = std::current_exception();
      next_chunk = chunk_count;
    }
  };

  std::vector<std::thread> threads;
  for (int i = 1; i < config.worker_count; ++i) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);

  std::sort(records.begin(), records.end(), record_order);
  if (stats) {
    stats->masks = chunk_count << chunk_bits;
    stats->evaluated = evaluated;
    stats->kept = records.size();
  }
  return records;
}

namespace {

struct Individual {
  GridPosition position;
  GameId value;
  Dyadic temperature;
};

GridPosition class_key(const GridPosition& p, SymmetryGroup group) {
  return group == SymmetryGroup::kDihedral ? symmetry_class(p) : class_representative(p, group);
}

bool individual_order(const Individual& a, const Individual& b) {
  if (a.temperature != b.temperature) return a.temperature > b.temperature;
  return text_less(a.position, b.position);
}

}  // namespace

std::vector<SearchRecord> genetic_search(const SearchConfig& config, const std::vector<GridPosition>& seeds,
                                         const GeneticConfig& genetic, SearchContext ctx) {
  if (seeds.empty()) throw std::invalid_argument("genetic search needs at least one seed");
  const int width = seeds.front().width();
  const int height = seeds.front().height();
  for (const GridPosition& s : seeds) {
    if (s.width() != width || s.height() != height) {
      throw std::invalid_argument("seed " + display_grid(s) + " does not match the first seed's dimensions " +
                                  std::to_string(width) + "x" + std::to_string(height));
    }
  }
  if ((config.width && config.width != width) || (config.height && config.height != height)) {
    throw std::invalid_argument("configured grid size does not match the seeds");
  }
  if (genetic.generations < 0 || genetic.mutations_per_child < 1 || genetic.population_cap < 1) {
    throw std::invalid_argument("generations must be >= 0, mutations per child and population cap >= 1");
  }

  Evaluator evaluator(ctx.store, ctx.table);
  const int cells = width * height;
  const int max_empty = config.max_empty_tiles.value_or(cells);
  std::mt19937_64 rng(genetic.rng_seed);

  absl::flat_hash_map<GridPosition, SearchRecord, GridPositionHash> archive;
  auto score = [&](const GridPosition& p) -> std::optional<Individual> {
    const int empty = p.empty_count();
    if (empty == 0 || empty > max_empty) return std::nullopt;
    if (!config.allow_decomposable && component_count(p) != 1) return std::nullopt;
    const GameId value = evaluator.evaluate(p);
    Individual ind{p, value, ctx.thermography.temperature(value, config.method)};
    if (passes_threshold(config, ind.temperature)) {
      const GridPosition key = config.dedup_symmetry ? class_key(p, config.symmetry) : p;
      if (!archive.contains(key)) {
        const GridPosition shown = config.dedup_symmetry ? class_representative(p, config.symmetry) : p;
        archive.emplace(key, make_record(shown, evaluator.evaluate(shown), ind.temperature, ctx));
      }
    }
    return ind;
  };

  std::vector<Individual> population;
  for (const GridPosition& s : seeds) {
    if (auto ind = score(s)) population.push_back(*ind);
  }

  std::uniform_int_distribution<int> mutation_count(1, genetic.mutations_per_child);
  std::uniform_int_distribution<int> cell(0, cells - 1);
  for (int gen = 0; gen < genetic.generations && !population.empty(); ++gen) {
    std::uniform_int_distribution<std::size_t> parent(0, population.size() - 1);
    std::vector<Individual> pool = population;
    for (int i = 0; i < genetic.population_cap; ++i) {
      std::uint64_t filled = population[parent(rng)].position.filled();
      for (int k = mutation_count(rng); k > 0; --k) filled ^= std::uint64_t{1} << cell(rng);
      if (auto ind = score(GridPosition(width, height, filled))) pool.push_back(*ind);
    }
    std::sort(pool.begin(), pool.end(), individual_order);
    population.clear();
    absl::flat_hash_map<GridPosition, bool, GridPositionHash> seen;
    for (const Individual& ind : pool) {
      if (static_cast<int>(population.size()) == genetic.population_cap) break;
      if (seen.emplace(class_key(ind.position, config.symmetry), true).second) population.push_back(ind);
    }
  }

  std::vector<SearchRecord> out;
  out.reserve(archive.size());
  for (auto& [key, record] : archive) out.push_back(std::move(record));
  std::sort(out.begin(), out.end(), record_order);
  return out;
}

}  // namespace cgt::domineering
