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

#include <gtest/gtest.h>

#include "dlash/error.hpp"
#include "dlash/f2/binomial.hpp"
#include "dlash/laurent/series.hpp"
#include "dlash/verify/random.hpp"

namespace {

using namespace dlash::laurent;
using dlash::f2::F2Poly;
using dlash::f2::Generator;

const F2Poly kOne = F2Poly::one();
F2Poly z(unsigned i) { return F2Poly(Generator::zeta(i)); }

LaurentSeries mono(std::int64_t es, std::int64_t et, F2Poly c = F2Poly::one()) {
  return LaurentSeries::monomial(std::move(c), es, et);
}

// Term-wise equality; windows are compared separately where they matter.
void expect_terms(const LaurentSeries& a, const LaurentSeries& b) {
  EXPECT_EQ(a.terms(), b.terms()) << a.to_string() << " vs " << b.to_string();
}

TEST(Window, ProductAndSumRules) {
  Window a = Window::univariate_t(-1, 10);
  Window b = Window::univariate_t(2, 6);
  Window p = Window::product(a, b);
  EXPECT_EQ(p.min_total, 1);
  EXPECT_EQ(p.max_total, 5);  // min(10 + 2, 6 - 1)
  EXPECT_TRUE(is_unbounded(p.max_s));
  Window s = Window::sum(a, b);
  EXPECT_EQ(s.min_total, -1);
  EXPECT_EQ(s.max_total, 6);
  EXPECT_EQ(Window::standard(16).to_string(), "s in [-17, 16], s+t in [-34, 16]");
}

TEST(Series, BelowSupportIsZeroAboveKnowledgeIsUnknown) {
  LaurentSeries a(Window::univariate_t(1, 4), {{{0, 1}, kOne}, {{0, 3}, z(1)}});
  EXPECT_TRUE(a.coefficient(0, -5).is_zero());
  EXPECT_EQ(a.coefficient(0, 3), z(1));
  EXPECT_TRUE(a.coefficient(0, 4).is_zero());
  EXPECT_THROW(a.coefficient(0, 5), dlash::WindowMiss);
  EXPECT_THROW(LaurentSeries(Window::univariate_t(1, 4), {{{0, 0}, kOne}}), dlash::Error);
}

TEST(Series, Addition) {
  expect_terms(series_add(mono(0, -1) + constant(kOne), mono(0, -1)), constant(kOne));
  EXPECT_TRUE(series_add(mono(0, 1, z(1)), mono(0, 1, z(1))).is_zero());
  LaurentSeries a = mono(1, 0) + mono(2, -1);
  expect_terms(series_add(a, LaurentSeries()), a);
}

TEST(Series, ProductExamples) {
  LaurentSeries q = mono(1, 0) + mono(2, -1);  // s + s^2 t^-1
  expect_terms(series_mul(q, q), mono(2, 0) + mono(4, -2));
  expect_terms(series_mul(variable(Variable::t), mono(0, -1)), constant(kOne));
  EXPECT_EQ(series_square(q), series_mul(q, q));
}

TEST(Series, ProductWindowShrinks) {
  LaurentSeries a(Window::univariate_t(0, 5), {{{0, 0}, kOne}, {{0, 5}, z(2)}});
  LaurentSeries b(Window::univariate_t(-2, 3), {{{0, -2}, kOne}});
  LaurentSeries p = series_mul(a, b);
  EXPECT_EQ(p.window().max_total, 3);  // min(5 - 2, 3 + 0)
  EXPECT_THROW(series_mul(LaurentSeries(Window::univariate_t(5, 4)), a), dlash::EmptyWindow);
}

TEST(Series, GeometricInverse) {
  LaurentSeries a = constant(kOne) + mono(0, 1, z(1));
  LaurentSeries inv = series_inverse(a, 10);
  for (int k = 0; k <= 10; ++k) EXPECT_EQ(inv.coefficient(0, k), z(1).pow(k));
  EXPECT_THROW(inv.coefficient(0, 11), dlash::WindowMiss);
  EXPECT_TRUE(series_mul(a, inv).agrees_with(constant(kOne)));
}

TEST(Series, InverseOfTPlusSLivesInIteratedLaurentSeries) {
  // (t + s)^-1 = sum_k s^k t^(-1-k), every term of total degree -1.
  LaurentSeries inv = series_inverse(variable(Variable::t) + variable(Variable::s), 6);
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(inv.coefficient(k, -1 - k), kOne);
  EXPECT_TRUE(inv.coefficient(1, -1).is_zero());
}

TEST(Series, InverseErrors) {
  EXPECT_THROW(series_inverse(LaurentSeries()), dlash::NotInvertible);
  EXPECT_THROW(series_inverse(mono(0, 1, z(1)) + mono(0, 2)), dlash::NotInvertible);
}

TEST(Series, BinomialSeriesOfNegativePowers) {
  LaurentSeries one_plus_t = constant(kOne) + variable(Variable::t);
  LaurentSeries p = series_pow(one_plus_t, -3, 20);
  for (int k = 0; k <= 20; ++k) {
    EXPECT_EQ(p.coefficient(0, k).is_one(), dlash::f2::binom_mod2(-3, k)) << k;
  }
}

TEST(Series, ResidueAndSlices) {
  LaurentSeries a = mono(-1, 3, z(1)) + mono(-1, 4) + mono(2, -1, z(2)) + mono(0, -1);
  expect_terms(a.residue(Variable::s), mono(0, 3, z(1)) + mono(0, 4));
  expect_terms(a.residue(Variable::t), mono(2, 0, z(2)) + constant(kOne));
  EXPECT_EQ(residue_scalar(a, Variable::t), kOne);
  expect_terms(a.s_slice(-1), mono(0, 3, z(1)) + mono(0, 4));
}

TEST(Series, Rendering) {
  EXPECT_EQ((mono(1, 0) + mono(2, -1)).to_string(), "s + s^2 t^-1");
  EXPECT_EQ((mono(0, 2, z(1).pow(3) + z(2)) + mono(0, 1, z(1).pow(2))).to_string(),
            "z1^2 t + (z1^3 + z2) t^2");
  EXPECT_EQ(LaurentSeries().to_string(), "0");
}

TEST(Series, ComposeExamples) {
  // (t + t^-1) at t -> t + t^2 = t + t^2 + t^-1 (1 + t)^-1.
  LaurentSeries a = mono(0, 1) + mono(0, -1);
  LaurentSeries u = mono(0, 1) + mono(0, 2);
  LaurentSeries c = series_compose(a, Variable::t, u, 8);
  LaurentSeries expected = mono(0, 1) + mono(0, 2) + series_mul(mono(0, -1), series_inverse(constant(kOne) + mono(0, 1), 8));
  EXPECT_TRUE(c.agrees_with(expected));
  EXPECT_GE(c.window().max_total, 6);

  // s -> zeta(s) in s + s^2 t^-1.
  LaurentSeries zs(Window::univariate_s(1, 8), {{{1, 0}, kOne}, {{2, 0}, z(1)}, {{4, 0}, z(2)}, {{8, 0}, z(3)}});
  LaurentSeries q = mono(1, 0) + mono(2, -1);
  LaurentSeries qs = series_compose(q, Variable::s, zs);
  EXPECT_TRUE(qs.agrees_with(zs + series_mul(series_square(zs), mono(0, -1))));
}

TEST(Series, ComposeErrors) {
  LaurentSeries a = mono(0, -1);
  EXPECT_THROW(series_compose(a, Variable::t, constant(kOne)), dlash::NonComposable);
  EXPECT_THROW(series_compose(a, Variable::t, mono(0, 2)), dlash::NonComposable);
  EXPECT_THROW(series_compose(mono(1, 0), Variable::s, variable(Variable::t)), dlash::NonComposable);
}

TEST(Series, ReversionOfTPlusTSquaredIsCatalanParity) {
  // The reversion of t + t^2 has coefficients (-1)^(k-1) C_(k-1), and the
  // Catalan number C_m is odd iff m + 1 is a power of two.
  LaurentSeries u(Window::univariate_t(1, 40), {{{0, 1}, kOne}, {{0, 2}, kOne}});
  LaurentSeries r = series_reversion(u, Variable::t);
  for (int k = 1; k <= 40; ++k) EXPECT_EQ(r.coefficient(0, k).is_one(), (k & (k - 1)) == 0) << k;
}

TEST(Series, ReversionErrors) {
  EXPECT_THROW(series_reversion(mono(0, 2) + mono(0, 3)), dlash::BadValuation);
  EXPECT_THROW(series_reversion(mono(0, 1, z(1))), dlash::BadValuation);
  EXPECT_THROW(series_reversion(mono(0, 1) + mono(1, 1)), dlash::BadValuation);
}

// The randomized window-soundness checks of the acceptance suite use their
// own seeds; these use others.
TEST(SeriesProperty, TruncatedInverseNeverReportsWrongCoefficients) {
  dlash::verify::Rng rng(0x5eed'1a01);
  for (int k = 0; k < 200; ++k) {
    const int ls = dlash::verify::uniform(rng, -2, 2);
    const int lt = dlash::verify::uniform(rng, -2, 2);
    LaurentSeries big = dlash::verify::random_unit_series(rng, ls, lt, 4, 8);
    Window small_w = big.window();
    small_w.max_s -= dlash::verify::uniform(rng, 0, 3);
    small_w.max_total -= dlash::verify::uniform(rng, 1, 5);
    LaurentSeries small = big.restricted(small_w);
    LaurentSeries inv_small = series_inverse(small);
    LaurentSeries inv_big = series_inverse(big);
    EXPECT_LE(inv_small.window().max_total, inv_big.window().max_total);
    EXPECT_FALSE(inv_small.first_mismatch(inv_big).has_value());
  }
}

TEST(SeriesProperty, PowersAgreeWithRepeatedProducts) {
  dlash::verify::Rng rng(0x5eed'1a02);
  for (int k = 0; k < 50; ++k) {
    LaurentSeries a = dlash::verify::random_unit_series(rng, 0, dlash::verify::uniform(rng, -1, 1), 2, 5);
    const int e = dlash::verify::uniform(rng, 1, 6);
    LaurentSeries prod = a;
    for (int i = 1; i < e; ++i) prod = series_mul(prod, a);
    LaurentSeries pw = series_pow(a, e);
    EXPECT_EQ(pw.window(), prod.window());
    EXPECT_FALSE(pw.first_mismatch(prod).has_value());
    EXPECT_FALSE(series_mul(series_pow(a, -e), pw).first_mismatch(constant(kOne)).has_value());
  }
}

TEST(SeriesProperty, TightenedKeepsTermsAndRaisesSupport) {
  LaurentSeries a(Window::univariate_t(-5, 10), {{{0, 2}, z(1)}, {{0, 7}, kOne}});
  LaurentSeries t = tightened(a);
  EXPECT_EQ(t.window().min_total, 2);
  EXPECT_EQ(t.terms(), a.terms());
}

}  // namespace
