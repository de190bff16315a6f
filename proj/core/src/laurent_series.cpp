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

#include "dlash/laurent/series.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace dlash::laurent {

using f2::F2Poly;
using f2::F2PolyAccumulator;

std::string Window::to_string() const {
  auto bound = [](std::int64_t v) { return is_unbounded(v) ? std::string("inf") : std::to_string(v); };
  return "s in [" + std::to_string(min_s) + ", " + bound(max_s) + "], s+t in [" +
         std::to_string(min_total) + ", " + bound(max_total) + "]";
}

namespace {

const char* name_of(Variable v) { return v == Variable::s ? "s" : "t"; }

// Exponent of `var` in the cell.
std::int64_t exponent_of(Exponent e, Variable var) { return var == Variable::s ? e.s : e.t; }

}  // namespace

LaurentSeries variable(Variable v) {
  return v == Variable::s ? LaurentSeries::monomial(F2Poly::one(), 1, 0)
                          : LaurentSeries::monomial(F2Poly::one(), 0, 1);
}

LaurentSeries constant(F2Poly c) { return LaurentSeries::monomial(std::move(c), 0, 0); }

LaurentSeries polynomial(LaurentSeries::Terms terms) {
  std::int64_t min_s = 0;
  std::int64_t min_total = 0;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (c.is_zero()) continue;
    min_s = first ? e.s : std::min(min_s, e.s);
    min_total = first ? e.total() : std::min(min_total, e.total());
    first = false;
  }
  return LaurentSeries(Window::exact(min_s, min_total), std::move(terms));
}

LaurentSeries series_add(const LaurentSeries& a, const LaurentSeries& b) { return a + b; }

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) {
  Window w = Window::product(a.window(), b.window());
  if (w.empty()) {
    throw EmptyWindow("product of series on " + a.window().to_string() + " and " +
                      b.window().to_string() + " has no exact coefficients");
  }
  std::map<Exponent, F2PolyAccumulator> acc;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      Exponent e = ea + eb;
      if (!is_unbounded(w.max_total) && e.total() > w.max_total) break;  // (total, s) order
      if (!w.known(e)) continue;
      acc[e].add_product(ca, cb);
    }
  }
  LaurentSeries::Terms terms;
  for (auto& [e, poly] : acc) {
    auto c = poly.take();
    if (!c.is_zero()) terms.emplace(e, std::move(c));
  }
  return LaurentSeries(w, std::move(terms));
}

LaurentSeries series_square(const LaurentSeries& a) {
  LaurentSeries::Terms terms;
  for (const auto& [e, c] : a.terms()) terms.emplace(Exponent{2 * e.s, 2 * e.t}, c.square());
  return LaurentSeries(Window::product(a.window(), a.window()), std::move(terms));
}

LaurentSeries tightened(const LaurentSeries& a) {
  Window w = a.window();
  const auto& terms = a.terms();
  // A whole s-row is known only when the total degree is unbounded, and a
  // whole total-degree diagonal only when s is.
  if (w.exact_in_total()) {
    std::int64_t lowest = is_unbounded(w.max_s) ? std::numeric_limits<std::int64_t>::max() : w.max_s + 1;
    for (const auto& [e, c] : terms) lowest = std::min(lowest, e.s);
    if (lowest != std::numeric_limits<std::int64_t>::max()) w.min_s = std::max(w.min_s, lowest);
  }
  if (w.exact_in_s()) {
    std::int64_t lowest = is_unbounded(w.max_total) ? std::numeric_limits<std::int64_t>::max()
                                                    : w.max_total + 1;
    for (const auto& [e, c] : terms) lowest = std::min(lowest, e.total());
    if (lowest != std::numeric_limits<std::int64_t>::max()) w.min_total = std::max(w.min_total, lowest);
  }
  return LaurentSeries(w, terms);
}

LaurentSeries series_inverse(const LaurentSeries& a, std::int64_t cap) {
  if (a.is_zero()) throw NotInvertible("zero series is not invertible");
  LaurentSeries x = tightened(a);
  const Window& w = x.window();
  const Exponent lead{w.min_s, w.min_total - w.min_s};
  if (!w.known(lead)) throw NotInvertible("leading term lies outside the window " + w.to_string());
  if (!x.coefficient(lead.s, lead.t).is_one()) {
    throw NotInvertible("leading coefficient at s^" + std::to_string(lead.s) + " t^" +
                        std::to_string(lead.t) + " is " +
                        x.coefficient(lead.s, lead.t).to_string() + ", not 1");
  }

  // a = lead * (1 + h) with h supported in relative offsets (ds, dtot) >= 0.
  struct Offset {
    std::int64_t ds;
    std::int64_t dtot;
    const F2Poly* coeff;
  };
  std::vector<Offset> h;
  bool grows_s = false;
  bool grows_total = false;
  for (const auto& [e, c] : x.terms()) {
    if (e == lead) continue;
    Offset o{e.s - w.min_s, e.total() - w.min_total, &c};
    grows_s |= o.ds > 0;
    grows_total |= o.dtot > 0;
    h.push_back(o);
  }

  auto extent = [&](std::int64_t known_max, std::int64_t base, bool grows) {
    if (!is_unbounded(known_max)) return known_max - base;
    return grows ? cap : kUnbounded;
  };
  const std::int64_t ys = extent(w.max_s, w.min_s, grows_s);
  const std::int64_t ytot = extent(w.max_total, w.min_total, grows_total);
  const std::int64_t span_s = is_unbounded(ys) ? 0 : ys;
  const std::int64_t span_tot = is_unbounded(ytot) ? 0 : ytot;

  // y = (1 + h)^-1 solves y(c) = [c == 0] + sum_d h(d) y(c - d); every h
  // offset is nonzero and nonnegative, so (s, total) order is a valid
  // evaluation order.
  std::map<std::pair<std::int64_t, std::int64_t>, F2Poly> y;
  for (std::int64_t cs = 0; cs <= span_s; ++cs) {
    for (std::int64_t ct = 0; ct <= span_tot; ++ct) {
      F2PolyAccumulator acc;
      if (cs == 0 && ct == 0) acc.add(F2Poly::one());
      for (const auto& o : h) {
        if (o.ds > cs || o.dtot > ct) continue;
        auto it = y.find({cs - o.ds, ct - o.dtot});
        if (it != y.end()) acc.add_product(*o.coeff, it->second);
      }
      auto c = acc.take();
      if (!c.is_zero()) y.emplace(std::pair{cs, ct}, std::move(c));
    }
  }

  Window result{-w.min_s, is_unbounded(ys) ? kUnbounded : -w.min_s + ys, -w.min_total,
                is_unbounded(ytot) ? kUnbounded : -w.min_total + ytot};
  LaurentSeries::Terms terms;
  for (auto& [rel, c] : y) {
    std::int64_t s = -w.min_s + rel.first;
    std::int64_t total = -w.min_total + rel.second;
    terms.emplace(Exponent{s, total - s}, std::move(c));
  }
  return LaurentSeries(result, std::move(terms));
}

LaurentSeries series_pow(const LaurentSeries& a, std::int64_t k, std::int64_t cap) {
  if (k == 0) return constant(F2Poly::one());
  LaurentSeries base = k > 0 ? a : series_inverse(a, cap);
  std::uint64_t n = k > 0 ? static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(-k);
  std::optional<LaurentSeries> result;
  while (true) {
    if (n & 1) result = result ? series_mul(*result, base) : base;
    n >>= 1;
    if (n == 0) break;
    base = series_square(base);
  }
  return *result;
}

namespace {

// Powers u^k for the exponents a composition needs, sharing the chain of
// Frobenius squares.
class PowerTable {
 public:
  PowerTable(const LaurentSeries& u, std::int64_t cap) : u_(u), cap_(cap) {}

  const LaurentSeries& get(std::int64_t k) {
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    LaurentSeries p = compute(k);
    return cache_.emplace(k, std::move(p)).first->second;
  }

 private:
  LaurentSeries compute(std::int64_t k) {
    if (k == 0) return constant(F2Poly::one());
    auto& squares = k > 0 ? positive_ : negative_;
    if (squares.empty()) squares.push_back(k > 0 ? u_ : series_inverse(u_, cap_));
    std::uint64_t n = k > 0 ? static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(-k);
    std::optional<LaurentSeries> result;
    for (std::size_t bit = 0; n != 0; ++bit, n >>= 1) {
      while (squares.size() <= bit) squares.push_back(series_square(squares.back()));
      if (n & 1) result = result ? series_mul(*result, squares[bit]) : squares[bit];
    }
    return *result;
  }

  const LaurentSeries& u_;
  std::int64_t cap_;
  std::vector<LaurentSeries> positive_;
  std::vector<LaurentSeries> negative_;
  std::map<std::int64_t, LaurentSeries> cache_;
};

}  // namespace

LaurentSeries series_compose(const LaurentSeries& a, Variable var, const LaurentSeries& u,
                             std::int64_t cap) {
  LaurentSeries ut = tightened(u);
  const Window& uw = ut.window();
  const std::int64_t need_s = var == Variable::s ? 1 : 0;
  if (ut.is_zero() || uw.min_s < need_s || uw.min_total < 1) {
    throw NonComposable(std::string("cannot substitute for ") + name_of(var) +
                        ": substituted series on " + uw.to_string() +
                        " does not have positive valuation");
  }
  bool negative = false;
  for (const auto& [e, c] : a.terms()) negative |= exponent_of(e, var) < 0;
  if (negative && (uw.min_s != need_s || uw.min_total != 1 ||
                   !ut.coefficient(need_s, 1 - need_s).is_one())) {
    throw NonComposable(std::string("negative powers of ") + name_of(var) +
                        " need a substituted series with leading term exactly " + name_of(var));
  }

  PowerTable powers(ut, cap);
  // Unknown terms of `a` land outside a's own knowledge box under these
  // valuation conditions, so that box bounds the result.
  Window w = a.window();
  bool first = true;
  std::map<Exponent, F2PolyAccumulator> acc;
  for (const auto& [e, c] : a.terms()) {
    const std::int64_t k = exponent_of(e, var);
    const LaurentSeries& p = powers.get(k);
    const std::int64_t ds = var == Variable::s ? 0 : e.s;
    const std::int64_t dt = var == Variable::s ? e.t : 0;
    Window pw = p.window().shifted(ds, dt);
    if (first) {
      w = Window{pw.min_s, std::min(w.max_s, pw.max_s), pw.min_total,
                 std::min(w.max_total, pw.max_total)};
      first = false;
    } else {
      w = Window::sum(w, pw);
    }
    for (const auto& [pe, pc] : p.terms()) acc[Exponent{pe.s + ds, pe.t + dt}].add_product(c, pc);
  }
  if (first) return LaurentSeries(a.window());
  if (w.empty()) {
    throw NonComposable("composition leaves no exact coefficients (window " + w.to_string() + ")");
  }
  LaurentSeries::Terms terms;
  for (auto& [e, poly] : acc) {
    if (!w.known(e)) continue;
    auto c = poly.take();
    if (!c.is_zero()) terms.emplace(e, std::move(c));
  }
  return LaurentSeries(w, std::move(terms));
}

LaurentSeries series_reversion(const LaurentSeries& a, Variable var, std::int64_t cap) {
  const Variable other = var == Variable::s ? Variable::t : Variable::s;
  for (const auto& [e, c] : a.terms()) {
    if (exponent_of(e, other) != 0) {
      throw BadValuation(std::string("reversion needs a series in ") + name_of(var) + " alone");
    }
  }
  LaurentSeries x = tightened(a);
  const Window& w = x.window();
  const std::int64_t lowest = var == Variable::s ? w.min_s : w.min_total;
  std::int64_t known = var == Variable::s ? w.max_s : w.max_total;
  auto cell = [&](std::int64_t k) { return var == Variable::s ? Exponent{k, 0} : Exponent{0, k}; };
  if (lowest != 1 || !w.known(cell(1)) || !x.terms().contains(cell(1)) ||
      !x.terms().at(cell(1)).is_one()) {
    throw BadValuation(std::string("reversion needs a series starting with exactly ") + name_of(var));
  }
  if (is_unbounded(known)) known = x.terms().size() == 1 ? kUnbounded : cap;
  Window result_window = var == Variable::s ? Window::univariate_s(1, known) : Window::univariate_t(1, known);
  if (is_unbounded(known)) return LaurentSeries(result_window, {{cell(1), F2Poly::one()}});

  // Solve a(b) = var one degree at a time: with b correct below degree k,
  // the degree-k coefficient of a(b) is b_k plus terms that only involve
  // lower coefficients of b.
  LaurentSeries::Terms b{{cell(1), F2Poly::one()}};
  for (std::int64_t k = 2; k <= known; ++k) {
    LaurentSeries partial(var == Variable::s ? Window::univariate_s(1, k) : Window::univariate_t(1, k), b);
    LaurentSeries image = series_compose(x.restricted(var == Variable::s ? Window::univariate_s(1, k)
                                                                         : Window::univariate_t(1, k)),
                                         var, partial, cap);
    F2Poly c = image.coefficient(cell(k).s, cell(k).t);
    if (!c.is_zero()) b.emplace(cell(k), std::move(c));
  }
  return LaurentSeries(result_window, std::move(b));
}

F2Poly residue_scalar(const LaurentSeries& a, Variable var) {
  LaurentSeries r = a.residue(var);
  return r.coefficient(0, 0);
}

}  // namespace dlash::laurent
