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

#include "cgt/game_store.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "absl/container/flat_hash_map.h"
#include "absl/hash/hash.h"

namespace cgt {
namespace {

void sort_unique(std::vector<GameId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::uint64_t pair_key(GameId a, GameId b) {
  return (static_cast<std::uint64_t>(raw(a)) << 32) | raw(b);
}

}  // namespace

std::size_t GameStore::NodeHash::operator()(const KeyView& k) const {
  using Span = absl::Span<const GameId>;
  return absl::Hash<std::tuple<Span, std::size_t, Span>>{}(
      std::make_tuple(Span(k.left.data(), k.left.size()), k.left.size(), Span(k.right.data(), k.right.size())));
}

std::size_t GameStore::NodeHash::operator()(GameId id) const {
  const Node& n = store->node(id);
  const std::span<const GameId> all(n.options);
  return (*this)(KeyView{all.first(n.left_count), all.subspan(n.left_count)});
}

bool GameStore::NodeEq::operator()(GameId a, const KeyView& k) const {
  const Node& n = store->node(a);
  const std::span<const GameId> all(n.options);
  return std::ranges::equal(all.first(n.left_count), k.left) &&
         std::ranges::equal(all.subspan(n.left_count), k.right);
}

GameStore::GameStore()
    : chunks_(std::make_unique<std::atomic<Node*>[]>(kMaxChunks)),
      intern_(std::make_unique<InternShard[]>(std::size_t{1} << kInternShardBits)) {
  for (std::size_t i = 0; i < (std::size_t{1} << kInternShardBits); ++i) {
    intern_[i].set = absl::flat_hash_set<GameId, NodeHash, NodeEq>(0, NodeHash{this}, NodeEq{this});
  }
  zero_ = number(Dyadic(0));
  star_ = construct({zero_}, {zero_});
}

GameStore::~GameStore() {
  for (std::size_t i = 0; i < kMaxChunks; ++i) {
    delete[] chunks_[i].load(std::memory_order_relaxed);
  }
}

GameStore::Node& GameStore::allocate_node(GameId id) {
  const std::uint32_t i = raw(id);
  const std::size_t chunk = i >> kChunkBits;
  if (chunk >= kMaxChunks) throw std::length_error("game store exhausted");
  Node* base = chunks_[chunk].load(std::memory_order_acquire);
  if (base == nullptr) {
    std::lock_guard lock(chunk_mu_);
    base = chunks_[chunk].load(std::memory_order_relaxed);
    if (base == nullptr) {
      base = new Node[kChunkSize];
      chunks_[chunk].store(base, std::memory_order_release);
    }
  }
  return base[i & (kChunkSize - 1)];
}

GameId GameStore::intern(std::vector<GameId> left, std::vector<GameId> right,
                         std::optional<Dyadic> number) {
  const KeyView key{left, right};
  const std::size_t h = NodeHash{this}(key);
  InternShard& shard = intern_[(static_cast<std::uint64_t>(h) * 0x9E3779B97F4A7C15ull) >>
                               (64 - kInternShardBits)];
  std::lock_guard lock(shard.mu);
  if (auto it = shard.set.find(key); it != shard.set.end()) return *it;

  const GameId id{next_id_.fetch_add(1, std::memory_order_relaxed)};
  Node& n = allocate_node(id);
  n.left_count = static_cast<std::uint32_t>(left.size());
  n.options = std::move(left);
  n.options.insert(n.options.end(), right.begin(), right.end());
  n.is_number = number.has_value();
  if (number) n.value = *number;
  shard.set.insert(id);
  return id;
}

std::span<const GameId> GameStore::left_options(GameId g) const {
  const Node& n = node(g);
  return std::span<const GameId>(n.options).first(n.left_count);
}

std::span<const GameId> GameStore::right_options(GameId g) const {
  const Node& n = node(g);
  return std::span<const GameId>(n.options).subspan(n.left_count);
}

std::optional<Dyadic> GameStore::number_value(GameId g) const {
  const Node& n = node(g);
  if (!n.is_number) return std::nullopt;
  return n.value;
}

GameId GameStore::number(const Dyadic& x) {
  const std::pair<std::int64_t, int> key{x.numerator(), x.exponent()};
  if (auto hit = numbers_.find(key)) return *hit;
  GameId id;
  if (x == Dyadic(0)) {
    id = intern({}, {}, x);
  } else if (x.is_integer()) {
    if (x > Dyadic(0)) {
      id = intern({number(x - 1)}, {}, x);
    } else {
      id = intern({}, {number(x + 1)}, x);
    }
  } else {
    const Dyadic ulp(1, x.exponent());
    GameId lo = number(x - ulp);
    GameId hi = number(x + ulp);
    id = intern({lo}, {hi}, x);
  }
  return numbers_.insert(key, id);
}

std::optional<Dyadic> GameStore::number_between(std::span<const GameId> left,
                                                std::span<const GameId> right) const {
  std::optional<Dyadic> lo;
  std::optional<Dyadic> hi;
  for (GameId g : left) {
    const Node& n = node(g);
    if (!n.is_number) return std::nullopt;
    if (!lo || *lo < n.value) lo = n.value;
  }
  for (GameId g : right) {
    const Node& n = node(g);
    if (!n.is_number) return std::nullopt;
    if (!hi || n.value < *hi) hi = n.value;
  }
  if (lo && hi && !(*lo < *hi)) return std::nullopt;
  return Dyadic::simplest_between(lo, hi);
}

bool GameStore::leq(GameId g, GameId h) {
  if (g == h) return true;
  const Node& a = node(g);
  const Node& b = node(h);
  if (a.is_number && b.is_number) return a.value <= b.value;

  const std::uint64_t key = pair_key(g, h);
  if (auto hit = leq_memo_.find(key)) return *hit;

  bool result;
  if (a.is_number) {
    // Number avoidance: x <= H iff no H^R <= x, when H is not a number.
    result = std::ranges::none_of(right_options(h), [&](GameId hr) { return leq(hr, g); });
  } else if (b.is_number) {
    result = std::ranges::none_of(left_options(g), [&](GameId gl) { return leq(h, gl); });
  } else {
    result = std::ranges::none_of(left_options(g), [&](GameId gl) { return leq(h, gl); }) &&
             std::ranges::none_of(right_options(h), [&](GameId hr) { return leq(hr, g); });
  }
  leq_memo_.insert(key, result);
  return result;
}

void GameStore::remove_dominated(std::vector<GameId>& options, bool keep_largest) {
  if (options.size() < 2) return;
  std::vector<char> dominated(options.size(), 0);
  for (std::size_t i = 0; i < options.size(); ++i) {
    for (std::size_t j = 0; j < options.size(); ++j) {
      if (i == j || dominated[j]) continue;
      const bool dom = keep_largest ? leq(options[i], options[j]) : leq(options[j], options[i]);
      if (dom) {
        dominated[i] = 1;
        break;
      }
    }
  }
  std::size_t out = 0;
  for (std::size_t i = 0; i < options.size(); ++i) {
    if (!dominated[i]) options[out++] = options[i];
  }
  options.resize(out);
}

namespace {

// Comparisons between canonical games and the (not yet canonical) game
// G = {left | right} currently being simplified.
class PendingComparator {
 public:
  PendingComparator(GameStore& store, std::span<const GameId> left, std::span<const GameId> right)
      : store_(store), left_(left), right_(right) {}

  // x <= G
  bool below(GameId x) {
    if (auto it = below_.find(x); it != below_.end()) return it->second;
    bool result = std::ranges::none_of(store_.left_options(x), [&](GameId xl) { return above(xl); }) &&
                  std::ranges::none_of(right_, [&](GameId gr) { return store_.leq(gr, x); });
    below_.emplace(x, result);
    return result;
  }

  // G <= y
  bool above(GameId y) {
    if (auto it = above_.find(y); it != above_.end()) return it->second;
    bool result = std::ranges::none_of(left_, [&](GameId gl) { return store_.leq(y, gl); }) &&
                  std::ranges::none_of(store_.right_options(y), [&](GameId yr) { return below(yr); });
    above_.emplace(y, result);
    return result;
  }

 private:
  GameStore& store_;
  std::span<const GameId> left_;
  std::span<const GameId> right_;
  absl::flat_hash_map<GameId, bool> below_;
  absl::flat_hash_map<GameId, bool> above_;
};

}  // namespace

bool GameStore::bypass_reversible(std::vector<GameId>& left, std::vector<GameId>& right) {
  PendingComparator cmp(*this, left, right);
  bool changed = false;

  std::vector<GameId> new_left;
  new_left.reserve(left.size());
  for (GameId a : left) {
    bool reversed = false;
    for (GameId ar : right_options(a)) {
      if (cmp.below(ar)) {
        const auto repl = left_options(ar);
        new_left.insert(new_left.end(), repl.begin(), repl.end());
        reversed = true;
        break;
      }
    }
    if (!reversed) new_left.push_back(a);
    changed |= reversed;
  }

  std::vector<GameId> new_right;
  new_right.reserve(right.size());
  for (GameId b : right) {
    bool reversed = false;
    for (GameId bl : left_options(b)) {
      if (cmp.above(bl)) {
        const auto repl = right_options(bl);
        new_right.insert(new_right.end(), repl.begin(), repl.end());
        reversed = true;
        break;
      }
    }
    if (!reversed) new_right.push_back(b);
    changed |= reversed;
  }

  if (changed) {
    left = std::move(new_left);
    right = std::move(new_right);
  }
  return changed;
}

GameId GameStore::construct(std::vector<GameId> left, std::vector<GameId> right) {
  for (;;) {
    sort_unique(left);
    sort_unique(right);
    remove_dominated(left, /*keep_largest=*/true);
    remove_dominated(right, /*keep_largest=*/false);
    if (auto x = number_between(left, right)) return number(*x);
    if (!bypass_reversible(left, right)) break;
  }
  return intern(std::move(left), std::move(right), std::nullopt);
}

GameId GameStore::neg(GameId g) {
  const Node& n = node(g);
  if (n.is_number) return number(-n.value);
  if (auto hit = neg_memo_.find(raw(g))) return *hit;
  std::vector<GameId> left;
  std::vector<GameId> right;
  for (GameId r : right_options(g)) left.push_back(neg(r));
  for (GameId l : left_options(g)) right.push_back(neg(l));
  sort_unique(left);
  sort_unique(right);
  const GameId result = intern(std::move(left), std::move(right), std::nullopt);
  neg_memo_.insert(raw(result), g);
  return neg_memo_.insert(raw(g), result);
}

GameId GameStore::add(GameId g, GameId h) {
  if (g == zero_) return h;
  if (h == zero_) return g;
  const Node& a = node(g);
  const Node& b = node(h);
  if (a.is_number && b.is_number) return number(a.value + b.value);
  if (raw(h) < raw(g)) std::swap(g, h);

  const std::uint64_t key = pair_key(g, h);
  if (auto hit = add_memo_.find(key)) return *hit;

  std::vector<GameId> left;
  std::vector<GameId> right;
  auto moves_in = [&](GameId moving, GameId fixed) {
    for (GameId o : left_options(moving)) left.push_back(add(o, fixed));
    for (GameId o : right_options(moving)) right.push_back(add(o, fixed));
  };
  // Number translation: never move in a number component of a sum with a
  // non-number.
  if (node(g).is_number) {
    moves_in(h, g);
  } else if (node(h).is_number) {
    moves_in(g, h);
  } else {
    moves_in(g, h);
    moves_in(h, g);
  }
  const GameId result = construct(std::move(left), std::move(right));
  return add_memo_.insert(key, result);
}

int GameStore::birthday(GameId g) {
  if (auto hit = birthday_memo_.find(raw(g))) return *hit;
  int best = 0;
  for (GameId o : node(g).options) best = std::max(best, birthday(o) + 1);
  return birthday_memo_.insert(raw(g), best);
}

GameStore::Stats GameStore::stats() const {
  return Stats{next_id_.load(), leq_memo_.size(), add_memo_.size()};
}

}  // namespace cgt
