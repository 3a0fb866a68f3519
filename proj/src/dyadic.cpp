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

#include "cgt/dyadic.hpp"

#include <charconv>
#include <stdexcept>

namespace cgt {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("dyadic numerator overflow");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("dyadic numerator overflow");
  }
  return r;
}

// a * 2^k with overflow checking.
std::int64_t scale_up(std::int64_t a, int k) {
  if (k == 0 || a == 0) return a;
  if (k >= 63) throw std::overflow_error("dyadic numerator overflow");
  return checked_mul(a, std::int64_t{1} << k);
}

std::int64_t floor_shift(std::int64_t a, int k) {
  // Arithmetic shift rounds towards negative infinity.
  return a >> k;
}

}  // namespace

Dyadic::Dyadic(std::int64_t numerator, int exponent) : num_(numerator), exp_(exponent) {
  if (exponent < 0) throw std::invalid_argument("negative dyadic exponent");
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && (num_ & 1) == 0) {
    num_ /= 2;
    --exp_;
  }
  if (exp_ > kMaxExponent) throw std::overflow_error("dyadic exponent too large");
}

Dyadic Dyadic::operator-() const {
  if (num_ == INT64_MIN) throw std::overflow_error("dyadic numerator overflow");
  Dyadic r;
  r.num_ = -num_;
  r.exp_ = exp_;
  return r;
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  const int e = std::max(exp_, o.exp_);
  return Dyadic(checked_add(scale_up(num_, e - exp_), scale_up(o.num_, e - o.exp_)), e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::times(std::int64_t factor) const { return Dyadic(checked_mul(num_, factor), exp_); }

Dyadic Dyadic::shifted_down(int k) const { return Dyadic(num_, exp_ + k); }

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
  if (exp_ == o.exp_) return num_ <=> o.num_;
  const int e = std::max(exp_, o.exp_);
  return scale_up(num_, e - exp_) <=> scale_up(o.num_, e - o.exp_);
}

std::int64_t Dyadic::floor() const { return floor_shift(num_, exp_); }

std::int64_t Dyadic::ceil() const { return is_integer() ? num_ : floor() + 1; }

std::string Dyadic::to_string() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(std::int64_t{1} << exp_);
}

std::optional<Dyadic> Dyadic::parse(std::string_view text) {
  auto parse_int = [](std::string_view s, std::int64_t& out) {
    if (s.empty()) return false;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
  };
  const auto slash = text.find('/');
  std::int64_t num = 0;
  if (slash == std::string_view::npos) {
    if (!parse_int(text, num)) return std::nullopt;
    return Dyadic(num);
  }
  std::int64_t den = 0;
  const auto den_text = text.substr(slash + 1);
  if (den_text.empty() || den_text.front() == '-' || den_text.front() == '+') return std::nullopt;
  if (!parse_int(text.substr(0, slash), num) || !parse_int(den_text, den)) {
    return std::nullopt;
  }
  if (den <= 0 || (den & (den - 1)) != 0) return std::nullopt;
  int k = 0;
  while ((std::int64_t{1} << k) != den) ++k;
  return Dyadic(num, k);
}

Dyadic Dyadic::simplest_between(const std::optional<Dyadic>& lo, const std::optional<Dyadic>& hi) {
  if (lo && hi && !(*lo < *hi)) throw std::invalid_argument("empty interval");
  // Integers first, closest to zero.
  if ((!lo || *lo < 0) && (!hi || *hi > 0)) return Dyadic(0);
  if (!hi || (lo && *lo >= 0)) {
    // Interval lies in the non-negative half line: the smallest integer > lo.
    const Dyadic candidate(lo->floor() + 1);
    if (!hi || candidate < *hi) return candidate;
  } else {
    // hi <= 0.
    const Dyadic candidate(hi->ceil() - 1);
    if (!lo || candidate > *lo) return candidate;
  }
  // No integer inside: find the smallest denominator that fits.
  for (int k = 1; k <= kMaxExponent; ++k) {
    // Smallest multiple of 2^-k strictly above lo.
    const std::int64_t m = floor_shift(scale_up(lo->numerator(), k), lo->exponent()) + 1;
    const Dyadic candidate(m, k);
    if (candidate > *lo && candidate < *hi) return candidate;
  }
  throw std::overflow_error("no dyadic between bounds within precision");
}

}  // namespace cgt
