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

#include "dlash/verify/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>

#include "dlash/dyer_lashof/adem.hpp"
#include "dlash/dyer_lashof/total_power.hpp"
#include "dlash/f2/binomial.hpp"
#include "dlash/laurent/series.hpp"
#include "dlash/steenrod/dual.hpp"
#include "dlash/verify/random.hpp"

namespace dlash::verify {

using f2::F2Poly;
using laurent::Exponent;
using laurent::LaurentSeries;
using laurent::Variable;
using laurent::Window;

namespace {

// Outcome of a check body: empty `failure` means pass.
struct Outcome {
  std::string failure;
  std::string summary;
};

CriterionResult timed(int id, std::string name, double budget, const std::function<Outcome()>& body) {
  CriterionResult r{id, std::move(name), false, {}, 0, budget};
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.failure = std::string("raised: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.pass = o.failure.empty();
  r.detail = r.pass ? o.summary : o.failure;
  if (r.pass && r.seconds > budget) {
    r.pass = false;
    r.detail = "took " + std::to_string(r.seconds) + " s, budget " + std::to_string(budget) + " s";
  }
  return r;
}

std::string pair_text(int i, int j) { return "(" + std::to_string(i) + ", " + std::to_string(j) + ")"; }

// `small` must be exact wherever it claims to be: it agrees with the
// longer truncation `big`, and `big` knows every cell `small` does.
std::string soundness_failure(const char* what, const LaurentSeries& small, const LaurentSeries& big) {
  const Window& ws = small.window();
  const Window& wb = big.window();
  if (ws.empty()) return std::string(what) + ": empty window";
  if (ws.max_s > wb.max_s || ws.max_total > wb.max_total) {
    return std::string(what) + ": window " + ws.to_string() + " not inside " + wb.to_string();
  }
  if (auto e = small.first_mismatch(big)) {
    return std::string(what) + ": truncated result wrong at s^" + std::to_string(e->s) + " t^" +
           std::to_string(e->t);
  }
  return {};
}

std::string agreement_failure(const char* what, const LaurentSeries& a, const LaurentSeries& b) {
  Window common = a.window().clipped_to(b.window());
  if (common.empty()) return std::string(what) + ": no common window";
  if (auto e = a.first_mismatch(b)) {
    return std::string(what) + ": differs at s^" + std::to_string(e->s) + " t^" + std::to_string(e->t);
  }
  return {};
}

LaurentSeries random_univariate(Rng& rng, Variable var, std::int64_t top) {
  LaurentSeries::Terms terms;
  auto cell = [&](std::int64_t k) { return var == Variable::s ? Exponent{k, 0} : Exponent{0, k}; };
  terms.emplace(cell(1), F2Poly::one());
  for (std::int64_t k = 2; k <= top; ++k) {
    if (uniform(rng, 0, 2) == 0) continue;
    F2Poly c = random_milnor_poly(rng, 4, 2);
    if (!c.is_zero()) terms.emplace(cell(k), std::move(c));
  }
  Window w = var == Variable::s ? Window::univariate_s(1, top) : Window::univariate_t(1, top);
  return LaurentSeries(w, std::move(terms));
}

LaurentSeries restrict_to(const LaurentSeries& a, std::int64_t max_s, std::int64_t max_total) {
  Window w = a.window();
  w.max_s = std::min(w.max_s, max_s);
  w.max_total = std::min(w.max_total, max_total);
  return a.restricted(w);
}

Outcome series_kernel(int instances) {
  Rng rng(0x5eed'0008);
  constexpr std::int64_t cap = 12;
  int checked = 0;

  for (int k = 0; k < instances; ++k) {
    const std::int64_t ls = uniform(rng, -2, 2);
    const std::int64_t lt = uniform(rng, -3, 3);
    const std::int64_t ss = uniform(rng, 0, 3);
    const std::int64_t st = uniform(rng, 1, 6);
    LaurentSeries big = random_unit_series(rng, ls, lt, ss == 0 ? 0 : ss + 2, st + 3);
    LaurentSeries small = restrict_to(big, ss == 0 ? laurent::kUnbounded : ls + ss, ls + lt + st);
    LaurentSeries inv = laurent::series_inverse(small, cap);
    if (auto f = soundness_failure("inverse", inv, laurent::series_inverse(big, cap)); !f.empty()) return {f, {}};
    LaurentSeries one = laurent::series_mul(small, inv);
    if (!one.window().contains({0, 0})) return {"inverse: a * a^-1 does not reach the unit cell", {}};
    if (auto f = agreement_failure("a * a^-1 = 1", one, laurent::constant(F2Poly::one())); !f.empty()) return {f, {}};
    if (auto f = agreement_failure("(a^-1)^-1 = a", laurent::series_inverse(inv, cap), small); !f.empty()) {
      return {f, {}};
    }
    ++checked;
  }

  for (int k = 0; k < instances; ++k) {
    const Variable var = k % 2 == 0 ? Variable::t : Variable::s;
    const std::int64_t lo_s = uniform(rng, -1, 1);
    const std::int64_t lo_total = uniform(rng, -3, 0);
    Window big_window{lo_s, lo_s + 5, lo_total, lo_total + 9};
    LaurentSeries a_big = random_series(rng, big_window, 0.3);
    LaurentSeries a = restrict_to(a_big, lo_s + 3, lo_total + 6);

    // Bivariate substitution, soundness only. Truncating `a` is checked
    // against an exact `u` and vice versa: with both truncated, extra terms
    // of the longer `a` can meet short powers of `u` and the longer
    // computation need not know every cell the shorter one does.
    const std::int64_t su = uniform(rng, 0, 2);
    const std::int64_t tu = uniform(rng, 1, 4);
    LaurentSeries u_big = var == Variable::t ? random_unit_series(rng, 0, 1, su + 2, tu + 3)
                                             : random_unit_series(rng, 1, 0, su + 2, tu + 3);
    LaurentSeries u = restrict_to(u_big, (var == Variable::t ? 0 : 1) + su, 1 + tu);
    LaurentSeries u_exact = laurent::polynomial(u.terms());
    LaurentSeries a_exact = laurent::polynomial(a.terms());
    if (auto f = soundness_failure("compose, truncated a", laurent::series_compose(a, var, u_exact, cap),
                                   laurent::series_compose(a_big, var, u_exact, cap));
        !f.empty()) {
      return {f, {}};
    }
    if (auto f = soundness_failure("compose, truncated u", laurent::series_compose(a_exact, var, u, cap),
                                   laurent::series_compose(a_exact, var, u_big, cap));
        !f.empty()) {
      return {f, {}};
    }

    // Substitution in one variable, undone by its reversion.
    LaurentSeries v = random_univariate(rng, var, uniform(rng, 3, 8));
    LaurentSeries back = laurent::series_compose(laurent::series_compose(a, var, v, cap), var,
                                                 laurent::series_reversion(v, var, cap), cap);
    if (auto f = agreement_failure("compose round trip", back, a); !f.empty()) return {f, {}};
    ++checked;
  }

  for (int k = 0; k < instances; ++k) {
    const Variable var = k % 2 == 0 ? Variable::t : Variable::s;
    const std::int64_t top = uniform(rng, 2, 10);
    LaurentSeries u_big = random_univariate(rng, var, top + 4);
    LaurentSeries u = var == Variable::t ? restrict_to(u_big, laurent::kUnbounded, top)
                                         : restrict_to(u_big, top, laurent::kUnbounded);
    LaurentSeries r = laurent::series_reversion(u, var, cap);
    if (auto f = soundness_failure("reversion", r, laurent::series_reversion(u_big, var, cap)); !f.empty()) {
      return {f, {}};
    }
    LaurentSeries x = laurent::variable(var);
    if (auto f = agreement_failure("u(r) = var", laurent::series_compose(u, var, r, cap), x); !f.empty()) {
      return {f, {}};
    }
    if (auto f = agreement_failure("r(u) = var", laurent::series_compose(r, var, u, cap), x); !f.empty()) {
      return {f, {}};
    }
    ++checked;
  }

  for (int k = 0; k < instances; ++k) {
    Window wa{uniform(rng, -2, 1), 0, uniform(rng, -3, 1), 0};
    wa.max_s = wa.min_s + uniform(rng, 0, 4);
    wa.max_total = wa.min_total + uniform(rng, 2, 7);
    Window wb{uniform(rng, -2, 1), 0, uniform(rng, -3, 1), 0};
    wb.max_s = wb.min_s + uniform(rng, 0, 4);
    wb.max_total = wb.min_total + uniform(rng, 2, 7);
    Window wa_big = wa, wb_big = wb;
    wa_big.max_s += 3;
    wa_big.max_total += 3;
    wb_big.max_s += 3;
    wb_big.max_total += 3;
    LaurentSeries a_big = random_series(rng, wa_big, 0.4);
    LaurentSeries b_big = random_series(rng, wb_big, 0.4);
    LaurentSeries p = laurent::series_mul(a_big.restricted(wa), b_big.restricted(wb));
    if (auto f = soundness_failure("product", p, laurent::series_mul(a_big, b_big)); !f.empty()) return {f, {}};
    ++checked;
  }
  return {{}, std::to_string(checked) + " instances (inverse, compose, reversion, product)"};
}

}  // namespace

CriterionResult check_adem_soundness() {
  return timed(1, "Adem soundness", 30, [] {
    std::size_t count = 0;
    for (int n = 0; n <= 3; ++n) {
      dl::GradedClass x{"x", n};
      for (const auto& rel : dl::symmetry_extract_relations(x, Window::bivariate(n, 20, 3 * n, 20))) {
        if (rel.relation.is_zero()) continue;
        ++count;
        auto reduced = dl::reduce_to_admissible(rel.relation);
        if (!reduced.is_zero()) {
          return Outcome{"relation at " + pair_text(static_cast<int>(rel.cell.s), static_cast<int>(rel.cell.t)) +
                             " on x[" + std::to_string(n) + "] reduces to " + reduced.to_string(),
                         {}};
        }
      }
    }
    return Outcome{{}, std::to_string(count) + " nonzero relations, |x| = 0..3, i+j <= 20, all reduce to 0"};
  });
}

CriterionResult check_adem_completeness() {
  return timed(2, "Adem completeness", 60, [] {
    std::size_t count = 0;
    for (int n = 1; n <= 2; ++n) {
      dl::GradedClass x{"x", n};
      auto solution = dl::derive_adem_from_symmetry(x, 16);
      if (!solution.unresolved.empty()) {
        return Outcome{"unresolved word " + dl::word_to_string(solution.unresolved.front()) + " on " + x.to_string(),
                       {}};
      }
      for (int j = 0; j <= 16; ++j) {
        for (int i = 2 * j + 1; i + j <= 16; ++i) {
          auto rel = dl::adem_relation(i, j);
          dl::DLSum expected(x);
          for (const auto& [a, b] : rel.rhs) {
            dl::Word w{a, b};
            if (!dl::violates_instability(w, n)) expected.toggle(w);
          }
          const dl::Word lhs{i, j};
          if (dl::violates_instability(lhs, n)) {
            // Both sides vanish on x.
            if (!expected.is_zero()) {
              return Outcome{"unstable " + dl::word_to_string(lhs) + " x[" + std::to_string(n) +
                                 "] has nonzero right side " + expected.to_string(),
                             {}};
            }
            continue;
          }
          auto it = solution.expressed.find(lhs);
          if (it == solution.expressed.end()) {
            return Outcome{"no relation derived for " + dl::word_to_string(lhs) + " on " + x.to_string(), {}};
          }
          if (!(it->second == expected)) {
            return Outcome{"derived " + dl::word_to_string(lhs) + " = " + it->second.to_string() + ", Adem gives " +
                               expected.to_string(),
                           {}};
          }
          ++count;
        }
      }
    }
    return Outcome{{}, std::to_string(count) + " Adem relations reproduced, |x| in {1, 2}, i+j <= 16"};
  });
}

CriterionResult check_residue_replay() {
  return timed(3, "Residue-proof replay", 5, [] {
    std::size_t count = 0;
    const LaurentSeries t_plus_s = laurent::polynomial({{Exponent{0, 1}, F2Poly::one()}, {Exponent{1, 0}, F2Poly::one()}});
    for (int i = 0; i <= 16; ++i) {
      for (int j = 0; i + j <= 16; ++j) {
        for (int l = i / 2 - 2; l <= i + j + 2; ++l) {
          LaurentSeries f = laurent::series_pow(t_plus_s, l - j - 1, 64).shifted(i - 2 * l - 1, l + j + 1);
          LaurentSeries res = f.residue(Variable::s);
          LaurentSeries expected = f2::binom_mod2(l - j - 1, 2 * l - i)
                                       ? LaurentSeries::monomial(F2Poly::one(), 0, i)
                                       : LaurentSeries();
          if (!res.window().known({0, i}) || !res.agrees_with(expected)) {
            return Outcome{"(i, j, l) = (" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(l) +
                               "): residue " + res.to_string(),
                           {}};
          }
          ++count;
        }
      }
    }
    return Outcome{{}, std::to_string(count) + " triples (i, j, l), i+j <= 16"};
  });
}

CriterionResult check_identity1(std::int64_t d) {
  return timed(4, "Bisson-Joyal identity (1) at D = " + std::to_string(d), 10, [d] {
    auto report = steenrod::verify_bisson_joyal_identity1(d);
    for (const auto& row : report.rows) {
      if (!row.pass) return Outcome{row.identity + ": " + row.mismatch, {}};
    }
    return Outcome{{}, std::to_string(report.rows.size()) + " checks on " + report.window};
  });
}

CriterionResult check_nishida(std::int64_t d) {
  return timed(5, "Nishida conjugate form at D = " + std::to_string(d), 10, [d] {
    auto report = steenrod::verify_nishida_conjugate_form(d);
    for (const auto& row : report.rows) {
      if (!row.pass) return Outcome{row.identity + ": " + row.mismatch, {}};
    }
    return Outcome{{}, std::to_string(report.rows.size()) + " checks on " + report.window};
  });
}

CriterionResult check_steinberger() {
  return timed(6, "Steinberger corollaries", 30, [] {
    std::size_t count = 0;
    for (const auto& report : {steenrod::verify_steinberger_conjugate(5, 32),
                               steenrod::verify_steinberger_successor(4, 1, 32)}) {
      for (const auto& row : report.rows) {
        if (!row.pass) return Outcome{row.identity + " at i = " + std::to_string(row.index) + ": " + row.mismatch, {}};
        ++count;
      }
    }
    return Outcome{{}, std::to_string(count) + " checks: Q^(2^i-2) z1 = zbar_i (2..5, coaction and residue), "
                                               "successor forms (1..4)"};
  });
}

CriterionResult check_binomial_oracle() {
  return timed(7, "Binomial oracle", 1, [] {
    // Exact binomials by Pascal's rule; C(64, 32) < 2^63.
    std::vector<std::vector<unsigned __int128>> pascal(65);
    for (int n = 0; n <= 64; ++n) {
      pascal[n].assign(n + 1, 1);
      for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
    for (int n = 0; n <= 64; ++n) {
      for (int k = 0; k <= n; ++k) {
        if (f2::binom_mod2(n, k) != ((pascal[n][k] & 1) == 1)) {
          return Outcome{"binom(" + std::to_string(n) + ", " + std::to_string(k) + ")", {}};
        }
      }
    }
    // binom(-m, k) is the t^k coefficient of (1+t)^-m.
    const LaurentSeries one_plus_t = laurent::polynomial({{Exponent{0, 0}, F2Poly::one()}, {Exponent{0, 1}, F2Poly::one()}});
    for (int m = 1; m <= 8; ++m) {
      LaurentSeries p = laurent::series_pow(one_plus_t, -m, 40);
      for (int k = 0; k <= 40; ++k) {
        if (f2::binom_mod2(-m, k) != p.coefficient(0, k).is_one()) {
          return Outcome{"binom(" + std::to_string(-m) + ", " + std::to_string(k) + ")", {}};
        }
      }
    }
    return Outcome{{}, "2145 nonnegative pairs, 328 negative-top pairs"};
  });
}

CriterionResult check_series_kernel(int instances) {
  return timed(8, "Series kernel properties", 30, [instances] { return series_kernel(instances); });
}

CriterionResult check_milnor_laws() {
  return timed(9, "Property laws on A_*", 30, [] {
    for (int n = 1; n <= 5; ++n) {
      LaurentSeries q = steenrod::q_total_on_zeta(n, 32);
      for (int i = 1; i < (1 << n) - 1; ++i) {
        if (!q.coefficient(0, i).is_zero()) {
          return Outcome{"instability: t^" + std::to_string(i) + " in Q(t) z" + std::to_string(n), {}};
        }
      }
    }
    Rng rng(0x5eed'0009);
    for (int k = 0; k < 200; ++k) {
      const int d = uniform(rng, 1, 24);
      F2Poly m(random_milnor_monomial(rng, d));
      F2Poly q = steenrod::q_total(m, d).coefficient(0, d);
      if (!(q == m.square())) return Outcome{"squaring: Q^" + std::to_string(d) + "(" + m.to_string() + ") = " + q.to_string(), {}};
    }
    for (int k = 0; k < 100; ++k) {
      F2Poly a = random_milnor_poly(rng, 8, 3);
      F2Poly b = random_milnor_poly(rng, 8, 3);
      const int n = uniform(rng, 0, 20);
      F2Poly convolution;
      for (int i = 0; i <= n; ++i) convolution += steenrod::q_op(i, a, n) * steenrod::q_op(n - i, b, n);
      F2Poly direct = steenrod::q_op(n, a * b, n);
      if (!(direct == convolution)) {
        return Outcome{"Cartan: Q^" + std::to_string(n) + "((" + a.to_string() + ")(" + b.to_string() + "))", {}};
      }
    }
    return Outcome{{}, "instability n <= 5, squaring on 200 monomials, Cartan on 100 products"};
  });
}

std::vector<CriterionResult> run_acceptance(std::int64_t identity_bound) {
  return {check_adem_soundness(),       check_adem_completeness(), check_residue_replay(),
          check_identity1(identity_bound), check_nishida(identity_bound), check_steinberger(),
          check_binomial_oracle(),      check_series_kernel(),     check_milnor_laws()};
}

std::string format_result(const CriterionResult& r) {
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.3f s", r.seconds);
  return std::string(r.pass ? "PASS" : "FAIL") + "  [" + std::to_string(r.id) + "] " + r.name + ": " + r.detail +
         " (" + seconds + ")";
}

}  // namespace dlash::verify
