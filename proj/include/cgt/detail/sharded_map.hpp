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

#ifndef CGT_DETAIL_SHARDED_MAP_HPP_
#define CGT_DETAIL_SHARDED_MAP_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>

#include "absl/container/flat_hash_map.h"
#include "absl/hash/hash.h"

namespace cgt::detail {

// Hash map split into independently locked shards. Inserts are
// first-writer-wins, which is all the memo tables need: every writer of a
// given key computes the same value.
//
// With a nonzero capacity the map is a cache: a shard holding its share of
// the capacity is emptied before the next insert into it.
template <class K, class V, class Hash = absl::Hash<K>>
class ShardedMap {
 public:
  explicit ShardedMap(int shard_bits = 6, std::size_t capacity = 0)
      : shard_bits_(shard_bits), shards_(std::make_unique<Shard[]>(std::size_t{1} << shard_bits)) {
    set_capacity(capacity);
  }

  // Zero means unbounded.
  void set_capacity(std::size_t capacity) {
    shard_capacity_ = capacity == 0 ? 0 : std::max<std::size_t>(1, capacity >> shard_bits_);
  }

  std::optional<V> find(const K& key) const {
    const std::size_t h = Hash{}(key);
    const Shard& s = shard_for(h);
    std::lock_guard lock(s.mu);
    auto it = s.map.find(key);
    if (it == s.map.end()) return std::nullopt;
    return it->second;
  }

  // Returns the value stored for `key` after the call.
  V insert(const K& key, const V& value) {
    const std::size_t h = Hash{}(key);
    Shard& s = shard_for(h);
    std::lock_guard lock(s.mu);
    if (shard_capacity_ != 0 && s.map.size() >= shard_capacity_ && !s.map.contains(key)) {
      s.map.clear();
      ++s.evictions;
    }
    return s.map.try_emplace(key, value).first->second;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < shard_count(); ++i) {
      std::lock_guard lock(shards_[i].mu);
      n += shards_[i].map.size();
    }
    return n;
  }

  // Number of shard flushes forced by the capacity.
  std::size_t evictions() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < shard_count(); ++i) {
      std::lock_guard lock(shards_[i].mu);
      n += shards_[i].evictions;
    }
    return n;
  }

  void clear() {
    for (std::size_t i = 0; i < shard_count(); ++i) {
      std::lock_guard lock(shards_[i].mu);
      shards_[i].map.clear();
    }
  }

 private:
  struct alignas(64) Shard {
    mutable std::mutex mu;
    absl::flat_hash_map<K, V, Hash> map;
    std::size_t evictions = 0;
  };

  std::size_t shard_count() const { return std::size_t{1} << shard_bits_; }

  const Shard& shard_for(std::size_t h) const {
    return shards_[(static_cast<std::uint64_t>(h) * 0x9E3779B97F4A7C15ull) >> (64 - shard_bits_)];
  }
  Shard& shard_for(std::size_t h) {
    return shards_[(static_cast<std::uint64_t>(h) * 0x9E3779B97F4A7C15ull) >> (64 - shard_bits_)];
  }

  int shard_bits_;
  std::size_t shard_capacity_ = 0;
  std::unique_ptr<Shard[]> shards_;
};

}  // namespace cgt::detail

#endif  // CGT_DETAIL_SHARDED_MAP_HPP_
