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

#ifndef CGT_EVALUATOR_HPP_
#define CGT_EVALUATOR_HPP_

#include <cstddef>
#include <optional>

#include "cgt/detail/sharded_map.hpp"
#include "cgt/dyadic.hpp"
#include "cgt/game_store.hpp"
#include "cgt/grid.hpp"
#include "cgt/thermograph.hpp"

namespace cgt::domineering {

// Values of already evaluated single components, keyed by normalize().
// Shared between threads; inserts are idempotent.
// Cache of component values by normalized position. Past `capacity`
// positions parts of it are dropped; zero means unbounded.
class TranspositionTable {
 public:
  static constexpr std::size_t kDefaultCapacity = std::size_t{1} << 23;

  explicit TranspositionTable(std::size_t capacity = kDefaultCapacity) : map_(8, capacity) {}

  std::optional<GameId> find(const GridPosition& key) const { return map_.find(key); }
  GameId insert(const GridPosition& key, GameId value) { return map_.insert(key, value); }
  std::size_t size() const { return map_.size(); }
  void clear() { map_.clear(); }
  void set_capacity(std::size_t capacity) { map_.set_capacity(capacity); }
  std::size_t evictions() const { return map_.evictions(); }

 private:
  detail::ShardedMap<GridPosition, GameId, GridPositionHash> map_;
};

class Evaluator {
 public:
  Evaluator(GameStore& store, TranspositionTable& table) : store_(store), table_(table) {}

  // Canonical value of p: the sum of its components' values.
  GameId evaluate(const GridPosition& p);
  // Value of a single connected component without decomposing it first.
  GameId evaluate_component(const GridPosition& component);

  GameStore& store() { return store_; }
  TranspositionTable& table() { return table_; }

 private:
  GameStore& store_;
  TranspositionTable& table_;
};

Dyadic grid_temperature(Evaluator& evaluator, Thermography& thermography, const GridPosition& p,
                        ThermographMethod method = ThermographMethod::kScaffold);

}  // namespace cgt::domineering

#endif  // CGT_EVALUATOR_HPP_
