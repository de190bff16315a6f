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

#ifndef DLASH_LAURENT_SERIES_HPP
#define DLASH_LAURENT_SERIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "dlash/error.hpp"
#include "dlash/f2/poly.hpp"
#include "dlash/laurent/window.hpp"

namespace dlash::laurent {

/// What a series coefficient has to support: a zero value, addition in
/// characteristic 2 and a canonical rendering.
template <class C>
concept SeriesCoefficient = std::regular<C> && requires(C a, const C& b) {
  { b.is_zero() } -> std::convertible_to<bool>;
  { a += b } -> std::same_as<C&>;
  { b.to_string() } -> std::convertible_to<std::string>;
};

/// Truncated iterated Laurent series in s and t (s small against t) with
/// coefficients in C, together with the window on which it is exact.
///
/// Stored terms all lie inside the window; absent cells inside the window
/// are zero. Values are immutable once built.
template <SeriesCoefficient C>
class BasicSeries {
 public:
  using Coefficient = C;
  using Terms = std::map<Exponent, C>;

  /// The exact zero series.
  BasicSeries() : window_(Window::exact()) {}
  explicit BasicSeries(Window window) : window_(window) {}

  /// Terms above the knowledge bounds are dropped, zero coefficients
  /// skipped. A term below the support bounds is a caller error.
  BasicSeries(Window window, Terms terms) : window_(window) {
    for (auto& [e, c] : terms) {
      if (c.is_zero() || !window_.known(e)) continue;
      if (!window_.in_support(e)) {
        throw Error("term s^" + std::to_string(e.s) + " t^" + std::to_string(e.t) +
                    " lies below the window support");
      }
      terms_.emplace(e, std::move(c));
    }
  }

  static BasicSeries monomial(C c, std::int64_t es, std::int64_t et) {
    Terms terms;
    terms.emplace(Exponent{es, et}, std::move(c));
    return BasicSeries(Window::exact(es, es + et), std::move(terms));
  }

  const Window& window() const noexcept { return window_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_known(std::int64_t es, std::int64_t et) const noexcept {
    return window_.known({es, et});
  }

  /// Coefficient of s^es t^et: zero below the support, WindowMiss above the
  /// knowledge bounds.
  C coefficient(std::int64_t es, std::int64_t et) const {
    Exponent e{es, et};
    if (!window_.in_support(e)) return C{};
    if (!window_.known(e)) {
      throw WindowMiss("coefficient of s^" + std::to_string(es) + " t^" + std::to_string(et) +
                       " is outside the window " + window_.to_string());
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? C{} : it->second;
  }

  BasicSeries& operator+=(const BasicSeries& other) {
    window_ = Window::sum(window_, other.window_);
    for (const auto& [e, c] : other.terms_) {
      auto [it, inserted] = terms_.try_emplace(e, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
      }
    }
    drop_unknown();
    return *this;
  }
  friend BasicSeries operator+(BasicSeries a, const BasicSeries& b) { return a += b; }

  /// Same series, exact only on the intersection with `knowledge`.
  BasicSeries restricted(const Window& knowledge) const {
    BasicSeries r = *this;
    r.window_ = window_.clipped_to(knowledge);
    r.drop_unknown();
    return r;
  }

  /// Multiplication by the exact monomial s^ds t^dt.
  BasicSeries shifted(std::int64_t ds, std::int64_t dt) const {
    BasicSeries r(window_.shifted(ds, dt));
    for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.s + ds, e.t + dt}, c);
    return r;
  }

  /// Applies `f` to every coefficient; `f` must send zero to zero.
  template <class F>
  auto map_coefficients(F&& f) const {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    typename BasicSeries<D>::Terms out;
    for (const auto& [e, c] : terms_) {
      auto d = f(c);
      if (!d.is_zero()) out.emplace(e, std::move(d));
    }
    return BasicSeries<D>(window_, std::move(out));
  }

  /// Row of fixed s-exponent `es`, as a series in t.
  BasicSeries s_slice(std::int64_t es) const {
    if (!is_unbounded(window_.max_s) && es > window_.max_s) {
      throw WindowMiss("s^" + std::to_string(es) + " is outside the window " + window_.to_string());
    }
    Window w = Window::univariate_t(window_.min_total - es, saturating_add(window_.max_total, -es));
    Terms out;
    for (const auto& [e, c] : terms_) {
      if (e.s == es) out.emplace(Exponent{0, e.t}, c);
    }
    return BasicSeries(w, std::move(out));
  }

  /// Coefficient of (var)^-1, as a series in the other variable. Raises
  /// WindowMiss if no coefficient of that row or column is known.
  BasicSeries residue(Variable var) const {
    Terms out;
    Window w;
    if (var == Variable::s) {
      if (!is_unbounded(window_.max_s) && window_.max_s < -1) {
        throw WindowMiss("s^-1 is outside the window " + window_.to_string());
      }
      w = Window::univariate_t(window_.min_total + 1, saturating_add(window_.max_total, 1));
      if (window_.min_s > -1) return BasicSeries(w);
      for (const auto& [e, c] : terms_) {
        if (e.s == -1) out.emplace(Exponent{0, e.t}, c);
      }
    } else {
      auto lo = std::max(window_.min_s, window_.min_total + 1);
      auto hi = std::min(window_.max_s, saturating_add(window_.max_total, 1));
      if (hi < lo) throw WindowMiss("t^-1 is outside the window " + window_.to_string());
      w = Window::univariate_s(lo, hi);
      for (const auto& [e, c] : terms_) {
        if (e.t == -1) out.emplace(Exponent{e.s, 0}, c);
      }
    }
    return BasicSeries(w, std::move(out));
  }

  /// First cell, in (total, s) order, where the two series differ inside
  /// their common knowledge box.
  std::optional<Exponent> first_mismatch(const BasicSeries& other) const {
    Window common = window_.clipped_to(other.window_);
    std::optional<Exponent> first;
    auto note = [&](Exponent e) {
      if (common.known(e) && (!first || e < *first)) first = e;
    };
    for (const auto& [e, c] : terms_) {
      auto it = other.terms_.find(e);
      if (it == other.terms_.end() || !(it->second == c)) note(e);
    }
    for (const auto& [e, c] : other.terms_) {
      if (!terms_.contains(e)) note(e);
    }
    return first;
  }

  /// Equal on the common knowledge box.
  bool agrees_with(const BasicSeries& other) const { return !first_mismatch(other); }

  /// Text rendering: terms by (total degree, e_s), e.g. `s + s^2 t^-1`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      std::string mono;
      auto factor = [&](const char* v, std::int64_t k) {
        if (k == 0) return;
        if (!mono.empty()) mono += ' ';
        mono += v;
        if (k != 1) mono += "^" + std::to_string(k);
      };
      factor("s", e.s);
      factor("t", e.t);
      std::string coeff = c.to_string();
      if (mono.empty()) {
        out += coeff;
      } else if (coeff == "1") {
        out += mono;
      } else if (coeff.find(" + ") != std::string::npos) {
        out += "(" + coeff + ") " + mono;
      } else {
        out += coeff + " " + mono;
      }
    }
    return out;
  }

  friend bool operator==(const BasicSeries&, const BasicSeries&) = default;

 private:
  void drop_unknown() {
    std::erase_if(terms_, [&](const auto& kv) { return !window_.known(kv.first); });
  }

  Window window_;
  Terms terms_;
};

using LaurentSeries = BasicSeries<f2::F2Poly>;

/// The series consisting of the single variable.
LaurentSeries variable(Variable v);
LaurentSeries constant(f2::F2Poly c);
/// Exact polynomial in s, t with the given terms.
LaurentSeries polynomial(LaurentSeries::Terms terms);

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b);

/// Cauchy product. The result window never reports a coefficient that an
/// unknown input coefficient could reach. Raises EmptyWindow if nothing is
/// left.
LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b);

/// Frobenius: squares coefficients and doubles exponents.
LaurentSeries series_square(const LaurentSeries& a);

/// Raises the support bounds to the actual leading terms where the window
/// proves no hidden terms lie below.
LaurentSeries tightened(const LaurentSeries& a);

/// Multiplicative inverse. The leading cell (min_s, min_total) must carry
/// the unit coefficient; everything else is then a multiple of it. When `a`
/// is exact in a direction in which the inverse is infinite, the inverse is
/// computed through `cap` orders past its leading term.
LaurentSeries series_inverse(const LaurentSeries& a, std::int64_t cap = kDefaultDegreeBound);

/// a^k for any integer k; negative k goes through series_inverse.
LaurentSeries series_pow(const LaurentSeries& a, std::int64_t k,
                         std::int64_t cap = kDefaultDegreeBound);

/// Substitutes `u` for `var` in `a`.
///
/// Substituting for s needs u with every term of s-degree >= 1 and total
/// degree >= 1; for t, s-degree >= 0 and total degree >= 1. Negative
/// powers of `var` additionally need the leading term of u to be exactly
/// `var`. Violations raise NonComposable.
LaurentSeries series_compose(const LaurentSeries& a, Variable var, const LaurentSeries& u,
                             std::int64_t cap = kDefaultDegreeBound);

/// Compositional inverse of a = var + (higher terms), a series in `var`
/// alone, solved degree by degree. Raises BadValuation unless `a` starts
/// with exactly `var`.
LaurentSeries series_reversion(const LaurentSeries& a, Variable var = Variable::t,
                               std::int64_t cap = kDefaultDegreeBound);

/// Coefficient of (var)^-1 (other variable at exponent 0) as a scalar.
f2::F2Poly residue_scalar(const LaurentSeries& a, Variable var);

}  // namespace dlash::laurent

#endif  // DLASH_LAURENT_SERIES_HPP
