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

#ifndef CGT_GAME_STORE_HPP_
#define CGT_GAME_STORE_HPP_

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_set.h"
#include "cgt/detail/sharded_map.hpp"
#include "cgt/dyadic.hpp"

namespace cgt {

// Handle of an interned canonical form. Two handles from the same store are
// equal exactly when the games are equal.
enum class GameId : std::uint32_t {};

constexpr std::uint32_t raw(GameId g) { return static_cast<std::uint32_t>(g); }

// Append-only, hash-consed universe of canonical short partizan games.
//
// Every GameId handed out refers to a fully simplified game: options are
// canonical, there are no dominated or reversible options, and structurally
// equal nodes share one id. All member functions are safe to call from
// several threads at once; racing computations of the same node converge to
// one id because interning is idempotent.
class GameStore {
 public:
  GameStore();
  ~GameStore();
  GameStore(const GameStore&) = delete;
  GameStore& operator=(const GameStore&) = delete;

  GameId zero() const { return zero_; }
  GameId star() const { return star_; }
  GameId integer(std::int64_t n) { return number(Dyadic(n)); }
  GameId number(const Dyadic& x);

  // Canonical form of {left | right}. Inputs must be ids from this store.
  GameId construct(std::vector<GameId> left, std::vector<GameId> right);

  bool leq(GameId g, GameId h);
  bool geq(GameId g, GameId h) { return leq(h, g); }
  // Neither g <= h nor h <= g.
  bool confused(GameId g, GameId h) { return !leq(g, h) && !leq(h, g); }
  GameId neg(GameId g);
  GameId add(GameId g, GameId h);
  GameId sub(GameId g, GameId h) { return add(g, neg(h)); }

  bool is_number(GameId g) const { return node(g).is_number; }
  std::optional<Dyadic> number_value(GameId g) const;

  std::span<const GameId> left_options(GameId g) const;
  std::span<const GameId> right_options(GameId g) const;

  // Longest chain of moves (either player) starting from g.
  int birthday(GameId g);

  struct Stats {
    std::size_t nodes = 0;
    std::size_t leq_memo = 0;
    std::size_t add_memo = 0;
  };
  Stats stats() const;

 private:
  struct Node {
    std::vector<GameId> options;  // left options, then right options
    std::uint32_t left_count = 0;
    bool is_number = false;
    Dyadic value;
  };

  struct KeyView {
    std::span<const GameId> left;
    std::span<const GameId> right;
  };
  struct NodeHash {
    using is_transparent = void;
    const GameStore* store;
    std::size_t operator()(GameId id) const;
    std::size_t operator()(const KeyView& k) const;
  };
  struct NodeEq {
    using is_transparent = void;
    const GameStore* store;
    bool operator()(GameId a, GameId b) const { return a == b; }
    bool operator()(GameId a, const KeyView& k) const;
    bool operator()(const KeyView& k, GameId a) const { return (*this)(a, k); }
  };
  struct alignas(64) InternShard {
    std::mutex mu;
    absl::flat_hash_set<GameId, NodeHash, NodeEq> set;
  };

  static constexpr int kChunkBits = 14;
  static constexpr std::size_t kChunkSize = std::size_t{1} << kChunkBits;
  static constexpr std::size_t kMaxChunks = std::size_t{1} << 18;
  static constexpr int kInternShardBits = 6;

  const Node& node(GameId g) const {
    const std::uint32_t i = raw(g);
    return chunks_[i >> kChunkBits].load(std::memory_order_acquire)[i & (kChunkSize - 1)];
  }
  Node& allocate_node(GameId id);

  // `left` and `right` must be sorted and free of duplicates.
  GameId intern(std::vector<GameId> left, std::vector<GameId> right,
                std::optional<Dyadic> number);

  std::optional<Dyadic> number_between(std::span<const GameId> left,
                                       std::span<const GameId> right) const;
  void remove_dominated(std::vector<GameId>& options, bool keep_largest);
  bool bypass_reversible(std::vector<GameId>& left, std::vector<GameId>& right);

  std::unique_ptr<std::atomic<Node*>[]> chunks_;
  std::mutex chunk_mu_;
  std::atomic<std::uint32_t> next_id_{0};
  std::unique_ptr<InternShard[]> intern_;

  detail::ShardedMap<std::pair<std::int64_t, int>, GameId> numbers_;
  detail::ShardedMap<std::uint64_t, bool> leq_memo_{8, std::size_t{1} << 23};
  detail::ShardedMap<std::uint64_t, GameId> add_memo_{8, std::size_t{1} << 22};
  detail::ShardedMap<std::uint32_t, GameId> neg_memo_;
  detail::ShardedMap<std::uint32_t, int> birthday_memo_;

  GameId zero_{};
  GameId star_{};
};

}  // namespace cgt

#endif  // CGT_GAME_STORE_HPP_
