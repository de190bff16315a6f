// Copyright 2026 The dlash Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DLASH_LAURENT_WINDOW_HPP
#define DLASH_LAURENT_WINDOW_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>

namespace dlash::laurent {

enum class Variable { s, t };

inline constexpr std::int64_t kUnbounded = std::int64_t{1} << 40;
inline constexpr std::int64_t kDefaultDegreeBound = 32;

constexpr bool is_unbounded(std::int64_t v) noexcept { return v >= kUnbounded; }

/// Addition that keeps kUnbounded absorbing.
constexpr std::int64_t saturating_add(std::int64_t a, std::int64_t b) noexcept {
  if (is_unbounded(a) || is_unbounded(b)) return kUnbounded;
  return std::min(a + b, kUnbounded);
}

/// Exponent pair of s^s t^t. Ordered by (total degree, s), which is also the
/// rendering order.
struct Exponent {
  std::int64_t s = 0;
  std::int64_t t = 0;

  constexpr std::int64_t total() const noexcept { return s + t; }

  friend constexpr Exponent operator+(Exponent a, Exponent b) noexcept {
    return {a.s + b.s, a.t + b.t};
  }
  friend constexpr bool operator==(Exponent, Exponent) = default;
  friend constexpr std::strong_ordering operator<=>(Exponent a, Exponent b) noexcept {
    if (auto c = a.total() <=> b.total(); c != 0) return c;
    return a.s <=> b.s;
  }
};

/// Truncation contract of a series, as a box in (e_s, e_s + e_t).
///
/// `min_s` and `min_total` bound the support: every coefficient with
/// e_s < min_s or e_s + e_t < min_total is an exact zero. `max_s` and
/// `max_total` bound what is known: a coefficient with e_s > max_s or
/// e_s + e_t > max_total is unknown. Either maximum may be kUnbounded.
///
/// Measuring the second axis by total degree keeps elements of k((t))((s))
/// such as (t+s)^-1 = sum s^k t^(-1-k) representable.
struct Window {
  std::int64_t min_s = 0;
  std::int64_t max_s = kUnbounded;
  std::int64_t min_total = 0;
  std::int64_t max_total = kUnbounded;

  static constexpr Window exact(std::int64_t min_s = 0, std::int64_t min_total = 0) noexcept {
    return {min_s, kUnbounded, min_total, kUnbounded};
  }
  /// A series in t alone, known through t^max_t.
  static constexpr Window univariate_t(std::int64_t min_t, std::int64_t max_t) noexcept {
    return {0, kUnbounded, min_t, max_t};
  }
  /// A series in s alone, known through s^max_s.
  static constexpr Window univariate_s(std::int64_t min_s, std::int64_t max_s) noexcept {
    return {min_s, max_s, min_s, kUnbounded};
  }
  static constexpr Window bivariate(std::int64_t min_s, std::int64_t max_s,
                                    std::int64_t min_total, std::int64_t max_total) noexcept {
    return {min_s, max_s, min_total, max_total};
  }
  /// The default working window for degree bound D.
  static constexpr Window standard(std::int64_t d = kDefaultDegreeBound) noexcept {
    return {-(d + 1), d, -2 * (d + 1), d};
  }

  constexpr bool in_support(Exponent e) const noexcept {
    return e.s >= min_s && e.total() >= min_total;
  }
  constexpr bool known(Exponent e) const noexcept {
    return (is_unbounded(max_s) || e.s <= max_s) &&
           (is_unbounded(max_total) || e.total() <= max_total);
  }
  constexpr bool contains(Exponent e) const noexcept { return in_support(e) && known(e); }
  constexpr bool empty() const noexcept { return max_s < min_s || max_total < min_total; }
  constexpr bool exact_in_s() const noexcept { return is_unbounded(max_s); }
  constexpr bool exact_in_total() const noexcept { return is_unbounded(max_total); }

  /// Window of a Cauchy product: supports add, and a coefficient is reported
  /// only if every contributing pair is known.
  static constexpr Window product(const Window& a, const Window& b) noexcept {
    return {a.min_s + b.min_s,
            std::min(saturating_add(a.max_s, b.min_s), saturating_add(b.max_s, a.min_s)),
            a.min_total + b.min_total,
            std::min(saturating_add(a.max_total, b.min_total),
                     saturating_add(b.max_total, a.min_total))};
  }
  /// Window of a sum: union of supports, intersection of knowledge.
  static constexpr Window sum(const Window& a, const Window& b) noexcept {
    return {std::min(a.min_s, b.min_s), std::min(a.max_s, b.max_s),
            std::min(a.min_total, b.min_total), std::min(a.max_total, b.max_total)};
  }
  /// Window of the series multiplied by s^ds t^dt.
  constexpr Window shifted(std::int64_t ds, std::int64_t dt) const noexcept {
    return {min_s + ds, saturating_add(max_s, ds), min_total + ds + dt,
            saturating_add(max_total, ds + dt)};
  }
  /// Knowledge intersected with `other`'s; support unchanged.
  constexpr Window clipped_to(const Window& other) const noexcept {
    return {min_s, std::min(max_s, other.max_s), min_total, std::min(max_total, other.max_total)};
  }

  friend constexpr bool operator==(const Window&, const Window&) = default;

  /// e.g. `s in [0, 16], s+t in [-1, 18]`, with `inf` for unbounded maxima.
  std::string to_string() const;
};

}  // namespace dlash::laurent

#endif  // DLASH_LAURENT_WINDOW_HPP
