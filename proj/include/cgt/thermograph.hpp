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

#ifndef CGT_THERMOGRAPH_HPP_
#define CGT_THERMOGRAPH_HPP_

#include <memory>
#include <string_view>
#include <utility>
#include <vector>

#include "cgt/detail/sharded_map.hpp"
#include "cgt/dyadic.hpp"
#include "cgt/game_store.hpp"

namespace cgt {

// Continuous piecewise-linear function of the temperature t on [-1, inf),
// stored as exact breakpoints. Adjacent pieces always differ in slope.
class Trajectory {
 public:
  struct Piece {
    Dyadic start;  // piece covers [start, next piece's start)
    Dyadic value;  // value at `start`
    int slope;
    bool operator==(const Piece&) const = default;
  };

  static Trajectory constant(const Dyadic& value);
  // Builds from pieces; the first piece must start at -1 and starts must
  // increase strictly. Continuity is the caller's responsibility.
  static Trajectory from_pieces(std::vector<Piece> pieces);

  Dyadic value_at(const Dyadic& t) const;
  // Slope just above t.
  int slope_at(const Dyadic& t) const;
  const std::vector<Piece>& pieces() const { return pieces_; }
  // Temperatures where the slope changes, highest first.
  std::vector<Dyadic> critical_temperatures() const;

  // f(t) + delta * t.
  Trajectory tilted(int delta) const;
  // Equal to *this below t, constant (= value_at(t)) from t upwards.
  Trajectory frozen_from(const Dyadic& t) const;

  static Trajectory max(const Trajectory& a, const Trajectory& b);
  static Trajectory min(const Trajectory& a, const Trajectory& b);
  static Trajectory difference(const Trajectory& a, const Trajectory& b);

  // Least t >= -1 with f(t) <= 0, for non-increasing f. Empty if f stays
  // positive.
  std::optional<Dyadic> first_nonpositive() const;

  bool operator==(const Trajectory&) const = default;

 private:
  explicit Trajectory(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}
  void merge_collinear();
  std::size_t piece_index(const Dyadic& t) const;

  std::vector<Piece> pieces_;
};

struct Thermograph {
  Trajectory left_wall;
  Trajectory right_wall;
  Dyadic temperature;  // freeze point: walls coincide from here up
  Dyadic mast;         // common wall value above the freeze point
};

enum class ThermographMethod {
  kScaffold,  // full wall construction from the options' walls
  kDirect,    // freeze point by pointwise wall evaluation, no walls kept
};

std::string_view method_name(ThermographMethod m);

// Thermographs, temperatures and mast values of canonical forms, using the
// extended convention: walls start at t = -1, integers freeze at -1 and a
// number m/2^j (j >= 1) freezes at -1/2^j.
class Thermography {
 public:
  explicit Thermography(GameStore& store) : store_(store) {}

  std::shared_ptr<const Thermograph> thermograph(GameId g);
  Dyadic temperature(GameId g, ThermographMethod method = ThermographMethod::kScaffold);
  Dyadic mast_value(GameId g, ThermographMethod method = ThermographMethod::kScaffold);

 private:
  struct Freeze {
    Dyadic temperature;
    Dyadic mast;
  };
  class WallProbe;

  Freeze direct(GameId g);
  int resolution(GameId g);

  GameStore& store_;
  detail::ShardedMap<std::uint32_t, std::shared_ptr<const Thermograph>> scaffold_memo_;
  detail::ShardedMap<std::uint32_t, Freeze> direct_memo_;
  detail::ShardedMap<std::uint32_t, int> resolution_memo_;
};

}  // namespace cgt

#endif  // CGT_THERMOGRAPH_HPP_
