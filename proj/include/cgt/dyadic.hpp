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

#ifndef CGT_DYADIC_HPP_
#define CGT_DYADIC_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace cgt {

// Exact rational m / 2^k kept in lowest terms (m odd whenever k > 0).
// Arithmetic is checked; overflow of the 64-bit numerator throws
// std::overflow_error.
class Dyadic {
 public:
  static constexpr int kMaxExponent = 62;

  constexpr Dyadic() = default;
  // NOLINTNEXTLINE(google-explicit-constructor): integers are dyadic.
  constexpr Dyadic(std::int64_t integer) : num_(integer) {}
  Dyadic(std::int64_t numerator, int exponent);

  std::int64_t numerator() const { return num_; }
  int exponent() const { return exp_; }
  bool is_integer() const { return exp_ == 0; }

  Dyadic operator-() const;
  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
  // Multiplication by a small integer factor (slopes, doubling).
  Dyadic times(std::int64_t factor) const;
  // Exact division by 2^k.
  Dyadic shifted_down(int k = 1) const;

  std::strong_ordering operator<=>(const Dyadic& o) const;
  bool operator==(const Dyadic& o) const = default;

  std::int64_t floor() const;
  std::int64_t ceil() const;

  // "2", "-1/2", "15/8".
  std::string to_string() const;
  // Inverse of to_string. The denominator must be a power of two.
  static std::optional<Dyadic> parse(std::string_view text);

  // The simplest dyadic strictly between the bounds (either bound may be
  // absent). Requires lo < hi when both are present.
  static Dyadic simplest_between(const std::optional<Dyadic>& lo,
                                 const std::optional<Dyadic>& hi);

  std::size_t hash() const {
    return std::hash<std::int64_t>{}(num_) * 31u + static_cast<unsigned>(exp_);
  }

 private:
  std::int64_t num_ = 0;
  int exp_ = 0;
};

inline Dyadic min(const Dyadic& a, const Dyadic& b) { return b < a ? b : a; }
inline Dyadic max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

}  // namespace cgt

template <>
struct std::hash<cgt::Dyadic> {
  std::size_t operator()(const cgt::Dyadic& d) const { return d.hash(); }
};

#endif  // CGT_DYADIC_HPP_
