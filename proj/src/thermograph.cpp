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

#include "cgt/thermograph.hpp"

#include <algorithm>
#include <stdexcept>

#include "absl/container/flat_hash_map.h"

namespace cgt {

// ---------------------------------------------------------------------------
// Trajectory

namespace {

const Dyadic kMinusOne(-1);

Dyadic line_at(const Trajectory::Piece& p, const Dyadic& t) {
  return p.value + (t - p.start).times(p.slope);
}

// Sorted union of piece starts.
std::vector<Dyadic> merged_starts(const Trajectory& a, const Trajectory& b) {
  std::vector<Dyadic> ts;
  for (const auto& p : a.pieces()) ts.push_back(p.start);
  for (const auto& p : b.pieces()) ts.push_back(p.start);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

Trajectory envelope(const Trajectory& a, const Trajectory& b, bool upper) {
  const std::vector<Dyadic> ts = merged_starts(a, b);
  std::vector<Trajectory::Piece> out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const Dyadic& t = ts[i];
    const Dyadic va = a.value_at(t);
    const Dyadic vb = b.value_at(t);
    int sa = a.slope_at(t);
    int sb = b.slope_at(t);
    if (!upper) {
      sa = -sa;
      sb = -sb;
    }
    // Work in "upper" orientation: compare signed values.
    const Dyadic ua = upper ? va : -va;
    const Dyadic ub = upper ? vb : -vb;
    const bool a_wins = ua > ub || (ua == ub && sa >= sb);
    const Dyadic& vw = a_wins ? va : vb;
    const int sw = a_wins ? sa : sb;
    const int so = a_wins ? sb : sa;
    const Dyadic gap = a_wins ? ua - ub : ub - ua;
    const int real_sw = upper ? sw : -sw;
    const int real_so = upper ? so : -so;
    out.push_back({t, vw, real_sw});
    if (so > sw) {
      const Dyadic cross = t + (so - sw == 2 ? gap.shifted_down(1) : gap);
      const bool inside = i + 1 == ts.size() || cross < ts[i + 1];
      if (inside) out.push_back({cross, vw + (cross - t).times(real_sw), real_so});
    }
  }
  return Trajectory::from_pieces(std::move(out));
}

}  // namespace

Trajectory Trajectory::constant(const Dyadic& value) { return Trajectory({{kMinusOne, value, 0}}); }

Trajectory Trajectory::from_pieces(std::vector<Piece> pieces) {
  if (pieces.empty() || pieces.front().start != kMinusOne) {
    throw std::invalid_argument("trajectory must start at t = -1");
  }
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (!(pieces[i - 1].start < pieces[i].start)) {
      throw std::invalid_argument("trajectory breakpoints must increase");
    }
  }
  Trajectory t(std::move(pieces));
  t.merge_collinear();
  return t;
}

void Trajectory::merge_collinear() {
  std::vector<Piece> out;
  for (auto& p : pieces_) {
    if (!out.empty() && out.back().slope == p.slope) continue;
    out.push_back(p);
  }
  pieces_ = std::move(out);
}

std::size_t Trajectory::piece_index(const Dyadic& t) const {
  // Last piece whose start is <= t.
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), t,
                             [](const Dyadic& x, const Piece& p) { return x < p.start; });
  return it == pieces_.begin() ? 0 : static_cast<std::size_t>(it - pieces_.begin()) - 1;
}

Dyadic Trajectory::value_at(const Dyadic& t) const { return line_at(pieces_[piece_index(t)], t); }

int Trajectory::slope_at(const Dyadic& t) const { return pieces_[piece_index(t)].slope; }

std::vector<Dyadic> Trajectory::critical_temperatures() const {
  std::vector<Dyadic> out;
  for (std::size_t i = pieces_.size(); i-- > 1;) out.push_back(pieces_[i].start);
  return out;
}

Trajectory Trajectory::tilted(int delta) const {
  std::vector<Piece> out = pieces_;
  for (auto& p : out) {
    p.value += p.start.times(delta);
    p.slope += delta;
  }
  return Trajectory(std::move(out));
}

Trajectory Trajectory::frozen_from(const Dyadic& t) const {
  std::vector<Piece> out;
  for (const auto& p : pieces_) {
    if (p.start < t) out.push_back(p);
  }
  const Dyadic v = value_at(t);
  if (out.empty()) return constant(v);
  out.push_back({t, v, 0});
  return from_pieces(std::move(out));
}

Trajectory Trajectory::max(const Trajectory& a, const Trajectory& b) { return envelope(a, b, true); }

Trajectory Trajectory::min(const Trajectory& a, const Trajectory& b) { return envelope(a, b, false); }

Trajectory Trajectory::difference(const Trajectory& a, const Trajectory& b) {
  std::vector<Piece> out;
  for (const Dyadic& t : merged_starts(a, b)) {
    out.push_back({t, a.value_at(t) - b.value_at(t), a.slope_at(t) - b.slope_at(t)});
  }
  return from_pieces(std::move(out));
}

std::optional<Dyadic> Trajectory::first_nonpositive() const {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    if (p.value <= Dyadic(0)) return p.start;
    if (p.slope < 0) {
      // Gap slopes are -1 or -2 (left wall falling, right wall rising).
      if (p.slope < -2) throw std::logic_error("unexpected trajectory slope");
      const Dyadic root = p.start + (p.slope == -2 ? p.value.shifted_down(1) : p.value);
      if (i + 1 == pieces_.size() || root < pieces_[i + 1].start) return root;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Thermography

std::string_view method_name(ThermographMethod m) {
  return m == ThermographMethod::kScaffold ? "scaffold" : "direct";
}

namespace {

Thermograph number_thermograph(const Dyadic& x) {
  if (x.is_integer()) {
    return Thermograph{Trajectory::constant(x), Trajectory::constant(x), kMinusOne, x};
  }
  const Dyadic ulp(1, x.exponent());
  const Dyadic freeze = -ulp;
  // Left wall x - ulp - t, right wall x + ulp + t, meeting at t = -ulp.
  auto left = Trajectory::from_pieces({{kMinusOne, x - ulp + 1, -1}, {freeze, x, 0}});
  auto right = Trajectory::from_pieces({{kMinusOne, x + ulp - 1, 1}, {freeze, x, 0}});
  return Thermograph{std::move(left), std::move(right), freeze, x};
}

}  // namespace

std::shared_ptr<const Thermograph> Thermography::thermograph(GameId g) {
  if (auto hit = scaffold_memo_.find(raw(g))) return *hit;

  std::shared_ptr<const Thermograph> result;
  if (auto x = store_.number_value(g)) {
    result = std::make_shared<const Thermograph>(number_thermograph(*x));
  } else {
    std::optional<Trajectory> left_scaffold;
    for (GameId o : store_.left_options(g)) {
      Trajectory t = thermograph(o)->right_wall.tilted(-1);
      left_scaffold = left_scaffold ? Trajectory::max(*left_scaffold, t) : std::move(t);
    }
    std::optional<Trajectory> right_scaffold;
    for (GameId o : store_.right_options(g)) {
      Trajectory t = thermograph(o)->left_wall.tilted(+1);
      right_scaffold = right_scaffold ? Trajectory::min(*right_scaffold, t) : std::move(t);
    }
    if (!left_scaffold || !right_scaffold) {
      throw std::logic_error("canonical non-number with an empty option set");
    }
    const Trajectory gap = Trajectory::difference(*left_scaffold, *right_scaffold);
    const auto freeze = gap.first_nonpositive();
    if (!freeze) throw std::logic_error("scaffolds never meet");
    const Dyadic mast = left_scaffold->value_at(*freeze);
    result = std::make_shared<const Thermograph>(Thermograph{
        left_scaffold->frozen_from(*freeze), right_scaffold->frozen_from(*freeze), *freeze, mast});
  }
  return scaffold_memo_.insert(raw(g), result);
}

// Pointwise wall evaluation at one temperature, memoized per probe.
class Thermography::WallProbe {
 public:
  WallProbe(Thermography& th, const Dyadic& t) : th_(th), t_(t) {}

  Dyadic left_wall(GameId g) { return wall(g, true); }
  Dyadic right_wall(GameId g) { return wall(g, false); }

  // Left scaffold minus right scaffold of g at the probe temperature.
  Dyadic scaffold_gap(GameId g) { return left_scaffold(g) - right_scaffold(g); }

  Dyadic left_scaffold(GameId g) {
    std::optional<Dyadic> best;
    for (GameId o : th_.store_.left_options(g)) {
      const Dyadic v = right_wall(o) - t_;
      if (!best || *best < v) best = v;
    }
    return *best;
  }

  Dyadic right_scaffold(GameId g) {
    std::optional<Dyadic> best;
    for (GameId o : th_.store_.right_options(g)) {
      const Dyadic v = left_wall(o) + t_;
      if (!best || v < *best) best = v;
    }
    return *best;
  }

 private:
  Dyadic wall(GameId g, bool left) {
    const std::uint64_t key = (static_cast<std::uint64_t>(raw(g)) << 1) | (left ? 1u : 0u);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Dyadic v;
    if (auto x = th_.store_.number_value(g)) {
      const Dyadic ulp = x->is_integer() ? Dyadic(0) : Dyadic(1, x->exponent());
      const Dyadic freeze = x->is_integer() ? kMinusOne : -ulp;
      if (t_ >= freeze) {
        v = *x;
      } else {
        v = left ? *x - ulp - t_ : *x + ulp + t_;
      }
    } else {
      const Freeze f = th_.direct(g);
      if (t_ >= f.temperature) {
        v = f.mast;
      } else {
        v = left ? left_scaffold(g) : right_scaffold(g);
      }
    }
    memo_.emplace(key, v);
    return v;
  }

  Thermography& th_;
  Dyadic t_;
  absl::flat_hash_map<std::uint64_t, Dyadic> memo_;
};

int Thermography::resolution(GameId g) {
  if (auto x = store_.number_value(g)) return x->exponent();
  if (auto hit = resolution_memo_.find(raw(g))) return *hit;
  int best = 0;
  for (GameId o : store_.left_options(g)) best = std::max(best, resolution(o));
  for (GameId o : store_.right_options(g)) best = std::max(best, resolution(o));
  return resolution_memo_.insert(raw(g), best + 1);
}

Thermography::Freeze Thermography::direct(GameId g) {
  if (auto x = store_.number_value(g)) {
    const Dyadic freeze = x->is_integer() ? kMinusOne : -Dyadic(1, x->exponent());
    return Freeze{freeze, *x};
  }
  if (auto hit = direct_memo_.find(raw(g))) return *hit;
  // Options first, so that probes below only hit memoized freeze points.
  for (GameId o : store_.left_options(g)) direct(o);
  for (GameId o : store_.right_options(g)) direct(o);

  auto gap_at = [&](const Dyadic& t) { return WallProbe(*this, t).scaffold_gap(g); };

  // Every breakpoint of the walls of g, and so the freeze point, is a
  // multiple of 2^-k with k = resolution(g). The gap is non-increasing, so
  // the freeze point is found by bisection over that lattice.
  const int k = resolution(g);
  Dyadic freeze = kMinusOne;
  if (gap_at(kMinusOne) > Dyadic(0)) {
    Dyadic lo = kMinusOne;
    Dyadic hi(0);
    while (gap_at(hi) > Dyadic(0)) {
      lo = hi;
      hi = hi == Dyadic(0) ? Dyadic(1) : hi.times(2);
    }
    const Dyadic ulp(1, k);
    // Invariant: gap(lo) > 0 >= gap(hi).
    while (ulp < hi - lo) {
      Dyadic mid = (lo + hi).shifted_down(1);
      // Snap to the lattice.
      const Dyadic scaled = mid.times(std::int64_t{1} << k);
      mid = Dyadic(scaled.floor(), k);
      if (mid <= lo) mid = lo + ulp;
      if (gap_at(mid) > Dyadic(0)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    freeze = hi;
  }
  const Dyadic mast = WallProbe(*this, freeze).left_scaffold(g);
  return direct_memo_.insert(raw(g), Freeze{freeze, mast});
}

Dyadic Thermography::temperature(GameId g, ThermographMethod method) {
  if (method == ThermographMethod::kDirect) return direct(g).temperature;
  return thermograph(g)->temperature;
}

Dyadic Thermography::mast_value(GameId g, ThermographMethod method) {
  if (method == ThermographMethod::kDirect) return direct(g).mast;
  return thermograph(g)->mast;
}

}  // namespace cgt
