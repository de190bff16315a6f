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

#include "dlash/steenrod/dual.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "dlash/error.hpp"

namespace dlash::steenrod {

using f2::Generator;
using f2::Monomial;
using laurent::Exponent;
using laurent::Window;

namespace {

std::int64_t pow2(int i) { return std::int64_t{1} << i; }

// Largest i with 2^i <= bound, or -1.
int top_index(std::int64_t bound) {
  int i = -1;
  while (i + 1 < 62 && pow2(i + 1) <= bound) ++i;
  if (i > static_cast<int>(Generator::kMaxZetaIndex)) {
    throw WindowTooSmall("degree bound " + std::to_string(bound) + " needs zeta_" + std::to_string(i) +
                         ", beyond zeta_" + std::to_string(Generator::kMaxZetaIndex));
  }
  return i;
}

LaurentSeries t_term(F2Poly c, std::int64_t et) {
  return LaurentSeries::monomial(std::move(c), 0, et);
}

std::string mismatch_text(const LaurentSeries& lhs, const LaurentSeries& rhs) {
  auto cell = lhs.first_mismatch(rhs);
  if (!cell) return {};
  auto at = [&](const LaurentSeries& x) {
    auto it = x.terms().find(*cell);
    return it == x.terms().end() ? std::string("0") : it->second.to_string();
  };
  return "s^" + std::to_string(cell->s) + " t^" + std::to_string(cell->t) + ": " + at(lhs) + " vs " +
         at(rhs);
}

// Compares two series on their common window, which must reach s-degree
// `min_s_reach` and total degree `min_total_reach`.
CheckRow compare(std::string identity, int index, const LaurentSeries& lhs, const LaurentSeries& rhs,
                 std::int64_t min_s_reach, std::int64_t min_total_reach) {
  CheckRow row{std::move(identity), index, false, {}};
  Window common = lhs.window().clipped_to(rhs.window());
  if (common.max_s < min_s_reach || common.max_total < min_total_reach) {
    row.mismatch = "common window " + common.to_string() + " is too small";
    return row;
  }
  row.mismatch = mismatch_text(lhs, rhs);
  row.pass = row.mismatch.empty();
  return row;
}

CheckRow compare(std::string identity, int index, const F2Poly& lhs, const F2Poly& rhs) {
  CheckRow row{std::move(identity), index, lhs == rhs, {}};
  if (!row.pass) row.mismatch = lhs.to_string() + " vs " + rhs.to_string();
  return row;
}

LaurentSeries augmented(const LaurentSeries& a) {
  return a.map_coefficients([](const F2Poly& c) { return augmentation(c); });
}

// s + s^2 t^-1, the total power operation on the Tate class.
LaurentSeries tate_total_power() {
  return laurent::polynomial({{Exponent{1, 0}, F2Poly::one()}, {Exponent{2, -1}, F2Poly::one()}});
}

class QTotalCache {
 public:
  template <class F>
  LaurentSeries get(int n, std::int64_t bound, F&& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find({n, bound}); it != cache_.end()) return it->second;
    }
    LaurentSeries value = compute();
    std::lock_guard lock(mutex_);
    return cache_.try_emplace({n, bound}, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, std::int64_t>, LaurentSeries> cache_;
};

QTotalCache& q_cache() {
  static QTotalCache cache;
  return cache;
}

}  // namespace

F2Poly zeta(unsigned i) { return i == 0 ? F2Poly::one() : F2Poly(Generator::zeta(i)); }

LaurentSeries zeta_series(std::int64_t bound, Variable var) {
  LaurentSeries::Terms terms;
  for (int i = 0; i <= top_index(bound); ++i) {
    Exponent e = var == Variable::s ? Exponent{pow2(i), 0} : Exponent{0, pow2(i)};
    terms.emplace(e, zeta(static_cast<unsigned>(i)));
  }
  Window w = var == Variable::s ? Window::univariate_s(1, bound) : Window::univariate_t(1, bound);
  return LaurentSeries(w, std::move(terms));
}

std::vector<F2Poly> conjugate_zeta_recursive(int max_i) {
  std::vector<F2Poly> zbar{F2Poly::one()};
  for (int n = 1; n <= max_i; ++n) {
    F2Poly acc;
    for (int i = 1; i <= n; ++i) acc += zeta(static_cast<unsigned>(i)) * zbar[n - i].pow(pow2(i));
    zbar.push_back(std::move(acc));
  }
  return zbar;
}

std::vector<F2Poly> conjugate_zeta(int max_i, std::int64_t bound) {
  if (max_i < 1) throw Error("conjugate_zeta needs max_i >= 1");
  if (max_i >= 62 || pow2(max_i) > bound) {
    throw WindowTooSmall("zbar_" + std::to_string(max_i) + " sits at t^(2^" + std::to_string(max_i) +
                         "), beyond the degree bound " + std::to_string(bound));
  }
  LaurentSeries rev = laurent::series_reversion(zeta_series(bound), Variable::t, bound);
  auto recursive = conjugate_zeta_recursive(max_i);
  std::vector<F2Poly> zbar{F2Poly::one()};
  for (int i = 1; i <= max_i; ++i) {
    zbar.push_back(rev.coefficient(0, pow2(i)));
    if (!(zbar.back() == recursive[i])) {
      throw Error("conjugation routes disagree at zbar_" + std::to_string(i) + ": " +
                  zbar.back().to_string() + " vs " + recursive[i].to_string());
    }
  }
  return zbar;
}

F2Poly conjugate(const F2Poly& a) {
  unsigned top = 0;
  for (const auto& m : a.monomials()) {
    for (const auto& [id, e] : m.factors()) {
      if (Generator::from_id(id).is_zeta()) top = std::max(top, Generator::from_id(id).zeta_index());
    }
  }
  auto zbar = conjugate_zeta_recursive(static_cast<int>(top));
  std::map<f2::GeneratorId, F2Poly> images;
  for (unsigned i = 1; i <= top; ++i) images.emplace(Generator::zeta(i).id(), zbar[i]);
  return a.substitute(images);
}

F2Poly augmentation(const F2Poly& a) {
  std::vector<Monomial> kept;
  for (const auto& m : a.monomials()) {
    bool has_zeta = std::any_of(m.factors().begin(), m.factors().end(),
                                [](const auto& f) { return Generator::from_id(f.first).is_zeta(); });
    if (!has_zeta) kept.push_back(m);
  }
  return F2Poly::from_monomials(std::move(kept));
}

LaurentSeries q_total_on_zeta(int n, std::int64_t bound) {
  if (n < 0) throw Error("q_total_on_zeta needs n >= 0");
  if (n == 0) return laurent::constant(F2Poly::one());
  return q_cache().get(n, bound, [&] {
    // Identity (2) is solved through t^(bound + 2^n), then shifted down.
    const std::int64_t p = bound + pow2(n);
    LaurentSeries inv = laurent::series_inverse(zeta_series(p + 2));
    LaurentSeries head(Window::univariate_t(0, p));
    LaurentSeries squares(Window::univariate_t(0, p + 1));
    for (int i = n; i <= top_index(p + 1); ++i) {
      if (i >= n + 1) head += t_term(zeta(static_cast<unsigned>(i)), pow2(i));
      if (pow2(i + 1) <= p + 1) {
        squares += t_term(zeta(static_cast<unsigned>(i)).square(), pow2(i + 1));
      }
    }
    LaurentSeries rhs = head + laurent::series_mul(inv, squares);
    return laurent::tightened(rhs.shifted(0, -pow2(n)));
  });
}

LaurentSeries q_total_on_zeta_recursive(int n, std::int64_t bound) {
  if (n < 0) throw Error("q_total_on_zeta_recursive needs n >= 0");
  if (n == 0) return laurent::constant(F2Poly::one());
  LaurentSeries prev = q_total_on_zeta_recursive(n - 1, bound + pow2(n - 1));
  LaurentSeries inv = laurent::series_inverse(zeta_series(bound + 2));
  LaurentSeries out = laurent::constant(zeta(static_cast<unsigned>(n))) +
                      laurent::series_mul(laurent::constant(zeta(static_cast<unsigned>(n - 1)).square()), inv) +
                      prev.shifted(0, -pow2(n - 1));
  return laurent::tightened(out.restricted(Window::univariate_t(0, bound)));
}

LaurentSeries q_total(const F2Poly& a, std::int64_t bound) {
  LaurentSeries out(Window::univariate_t(0, bound));
  for (const auto& m : a.monomials()) {
    for (const auto& [id, e] : m.factors()) {
      Generator g = Generator::from_id(id);
      if (!g.is_zeta()) {
        throw Error("Q(t) is computed on A_* only; " + g.name() + " is not a Milnor generator");
      }
    }
    // Instability: Q(t)m starts at t^|m|.
    if (m.degree() > bound) continue;
    LaurentSeries term = laurent::constant(F2Poly::one());
    for (const auto& [id, e] : m.factors()) {
      Generator g = Generator::from_id(id);
      term = laurent::series_mul(term, laurent::series_pow(q_total_on_zeta(static_cast<int>(g.zeta_index()), bound), e));
    }
    out += term;
  }
  return out.restricted(Window::univariate_t(0, bound));
}

F2Poly q_op(int i, const F2Poly& a, std::int64_t bound) {
  if (i > bound) {
    throw WindowTooSmall("Q^" + std::to_string(i) + " needs a degree bound of at least " + std::to_string(i) +
                         ", got " + std::to_string(bound));
  }
  F2Poly out;
  for (const auto& [d, part] : f2::poly_degree_parts(a)) {
    F2Poly c = q_total(part, bound).coefficient(0, i);
    if (d == i && !(c == part.square())) {
      throw Error("squaring law fails: Q^" + std::to_string(i) + "(" + part.to_string() + ") = " + c.to_string());
    }
    out += c;
  }
  return out;
}

F2Poly q_op(int i, const F2Poly& a) { return q_op(i, a, std::max<std::int64_t>(i, laurent::kDefaultDegreeBound)); }

bool Report::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

std::string Report::to_text() const {
  std::size_t width = 8;
  for (const auto& r : rows) width = std::max(width, r.identity.size());
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  std::string out = title + "\n";
  if (!window.empty()) out += "window: " + window + "\n";
  out += pad("identity", width) + "  index  result  first mismatch\n";
  for (const auto& r : rows) {
    std::string index = std::to_string(r.index);
    out += pad(r.identity, width) + "  " + std::string(5 - std::min<std::size_t>(5, index.size()), ' ') + index +
           "  " + (r.pass ? "pass  " : "FAIL  ");
    out += r.mismatch.empty() ? "  -" : "  " + r.mismatch;
    out += "\n";
  }
  return out;
}

Report verify_steinberger_conjugate(int i_max, std::int64_t bound) {
  if (i_max < 2) throw Error("verify_steinberger_conjugate needs i_max >= 2");
  Report report{"Steinberger: Q^(2^i-2) z1 = zbar_i", {}, {}};
  auto zbar = conjugate_zeta(i_max, bound);
  LaurentSeries q1 = q_total_on_zeta(1, bound);
  LaurentSeries inv = laurent::series_inverse(zeta_series(bound + 2));
  for (int i = 2; i <= i_max; ++i) {
    F2Poly coaction = q1.coefficient(0, pow2(i) - 2);
    F2Poly residue = laurent::residue_scalar(inv.shifted(0, -pow2(i) + 1), Variable::t);
    report.rows.push_back(compare("Q^(2^i-2) z1 = zbar_i (coaction)", i, coaction, zbar[i]));
    report.rows.push_back(compare("res(t^(-2^i+1) zeta(t)^-1 dt) = zbar_i", i, residue, zbar[i]));
  }
  return report;
}

Report verify_steinberger_successor(int i_max, int first, std::int64_t bound) {
  if (i_max < 0 || first < 0) throw Error("verify_steinberger_successor needs nonnegative indices");
  Report report{"Steinberger: Q^(2^i) z_i = z_(i+1) + z_i^2 z1, Q^(2^i) zbar_i = zbar_(i+1)", {}, {}};
  auto zbar = conjugate_zeta(i_max + 1, bound);
  for (int i = first; i <= i_max; ++i) {
    const auto u = static_cast<unsigned>(i);
    F2Poly expected = zeta(u + 1) + zeta(u).square() * zeta(1);
    report.rows.push_back(
        compare("Q^(2^i) z_i = z_(i+1) + z_i^2 z1", i, q_op(static_cast<int>(pow2(i)), zeta(u), bound), expected));
  }
  for (int i = std::max(first, 1); i <= i_max; ++i) {
    report.rows.push_back(
        compare("Q^(2^i) zbar_i = zbar_(i+1)", i, q_op(static_cast<int>(pow2(i)), zbar[i], bound), zbar[i + 1]));
  }
  return report;
}

IdentitySides bisson_joyal_identity1(std::int64_t d) {
  LaurentSeries zs = zeta_series(d, Variable::s);
  LaurentSeries lhs = zs + laurent::series_mul(laurent::series_square(zs),
                                               laurent::series_inverse(zeta_series(d + 2)));
  // Terms with s-degree above d are dropped on both sides.
  LaurentSeries rhs(Window::bivariate(1, d, 0, laurent::kUnbounded));
  for (int i = 0; i <= top_index(d); ++i) {
    LaurentSeries q = q_total_on_zeta(i, d + 2);
    LaurentSeries factor = laurent::polynomial(
        {{Exponent{pow2(i), 0}, F2Poly::one()}, {Exponent{pow2(i + 1), -pow2(i)}, F2Poly::one()}});
    rhs += laurent::series_mul(q, factor);
  }
  return {lhs.restricted(rhs.window()), rhs.restricted(lhs.window())};
}

IdentitySides nishida_conjugate_form(std::int64_t d) {
  LaurentSeries lhs = laurent::series_compose(tate_total_power(), Variable::s, zeta_series(d, Variable::s));
  LaurentSeries zbar = laurent::series_reversion(zeta_series(d + 2), Variable::t, d + 2);
  LaurentSeries rhs = laurent::series_compose(bisson_joyal_identity1(d).rhs, Variable::t, zbar);
  return {lhs.restricted(rhs.window()), rhs.restricted(lhs.window())};
}

Report verify_bisson_joyal_identity1(std::int64_t d) {
  auto [lhs, rhs] = bisson_joyal_identity1(d);
  Report report{"Bisson-Joyal identity (1)", lhs.window().clipped_to(rhs.window()).to_string(), {}};
  report.rows.push_back(compare("zeta(s) + zeta(s)^2 zeta(t)^-1 = sum Q(t)z_i (s^2^i + s^2^(i+1) t^-2^i)", 0,
                                lhs, rhs, d, d));

  LaurentSeries expected = t_term(F2Poly::one(), -1) + laurent::constant(zeta(1)) +
                           laurent::series_inverse(zeta_series(d + 2));
  LaurentSeries row = rhs.s_slice(2) + t_term(F2Poly::one(), -1);
  report.rows.push_back(compare("s^2 row: Q(t) z1 = t^-1 + z1 + zeta(t)^-1", 2, row, expected, 0, d - 2));

  LaurentSeries tate = tate_total_power();
  report.rows.push_back(compare("augmentation of left side = s + s^2 t^-1", 0, augmented(lhs), tate, d, d));
  report.rows.push_back(compare("augmentation of right side = s + s^2 t^-1", 0, augmented(rhs), tate, d, d));
  return report;
}

Report verify_nishida_conjugate_form(std::int64_t d) {
  auto [lhs, rhs] = nishida_conjugate_form(d);
  Report report{"Nishida conjugate form", lhs.window().clipped_to(rhs.window()).to_string(), {}};
  report.rows.push_back(compare("psi_R(Q(t)s) = Q(zbar(t)) psi_R(s)", 0, lhs, rhs, d, d));

  auto identity1 = bisson_joyal_identity1(d);
  LaurentSeries zbar = laurent::series_reversion(zeta_series(d + 2), Variable::t, d + 2);
  LaurentSeries conjugated = laurent::series_compose(identity1.lhs, Variable::t, zbar);
  report.rows.push_back(compare("identity (1) left side at t -> zbar(t) = psi_R(Q(t)s)", 0, conjugated, lhs, d, d));

  LaurentSeries back = laurent::series_compose(rhs, Variable::t, zeta_series(d + 2));
  report.rows.push_back(compare("t -> zeta(t) recovers identity (1) right side", 0, back, identity1.rhs, d, d));
  report.rows.push_back(compare("t -> zeta(t) recovers identity (1) left side", 0, back, identity1.lhs, d, d));

  LaurentSeries tate = tate_total_power();
  report.rows.push_back(compare("augmentation of left side = s + s^2 t^-1", 0, augmented(lhs), tate, d, d));
  report.rows.push_back(compare("augmentation of right side = s + s^2 t^-1", 0, augmented(rhs), tate, d, d));
  return report;
}

}  // namespace dlash::steenrod
