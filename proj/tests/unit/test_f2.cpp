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

#include <vector>

#include "dlash/error.hpp"
#include "dlash/f2/binomial.hpp"
#include "dlash/f2/poly.hpp"
#include "dlash/verify/random.hpp"

namespace {

using dlash::f2::binom_mod2;
using dlash::f2::F2Poly;
using dlash::f2::Generator;
using dlash::f2::Monomial;

F2Poly z(unsigned i) { return F2Poly(Generator::zeta(i)); }

// Exact binomials by Pascal's rule.
std::vector<std::vector<unsigned __int128>> pascal(int rows) {
  std::vector<std::vector<unsigned __int128>> p(rows + 1);
  for (int n = 0; n <= rows; ++n) {
    p[n].assign(n + 1, 1);
    for (int k = 1; k < n; ++k) p[n][k] = p[n - 1][k - 1] + p[n - 1][k];
  }
  return p;
}

TEST(BinomMod2, MatchesExactBinomialsThrough64) {
  auto p = pascal(64);
  for (int n = 0; n <= 64; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(binom_mod2(n, k), (p[n][k] & 1) == 1) << n << " " << k;
  }
}

TEST(BinomMod2, BottomOutsideRangeIsZero) {
  EXPECT_FALSE(binom_mod2(5, -1));
  EXPECT_FALSE(binom_mod2(5, 6));
  EXPECT_FALSE(binom_mod2(0, 1));
  EXPECT_TRUE(binom_mod2(0, 0));
  EXPECT_FALSE(binom_mod2(-3, -1));
}

TEST(BinomMod2, NegativeTopsViaUpperNegation) {
  // binom(-m, k) = (-1)^k binom(m+k-1, k).
  auto p = pascal(64);
  for (int m = 1; m <= 20; ++m) {
    for (int k = 0; m + k - 1 <= 64; ++k) {
      EXPECT_EQ(binom_mod2(-m, k), (p[m + k - 1][k] & 1) == 1) << -m << " " << k;
    }
  }
  // (1+x)^-1 = 1 + x + x^2 + ..., (1+x)^-2 = 1 + x^2 + x^4 + ... mod 2.
  for (int k = 0; k < 30; ++k) {
    EXPECT_TRUE(binom_mod2(-1, k));
    EXPECT_EQ(binom_mod2(-2, k), k % 2 == 0);
  }
}

TEST(BinomMod2, UsableInConstantExpressions) {
  static_assert(binom_mod2(6, 2));
  static_assert(!binom_mod2(6, 1));
  static_assert(binom_mod2(-1, 7));
}

TEST(F2Poly, AdditionIsCharacteristicTwo) {
  F2Poly a = z(1) * z(1) + z(2);
  EXPECT_TRUE((a + a).is_zero());
  EXPECT_EQ(a + F2Poly(), a);
  EXPECT_EQ((z(1) + z(2)) + z(2), z(1));
}

TEST(F2Poly, FromMonomialsCancelsPairs) {
  Monomial m(Generator::zeta(1), 2);
  Monomial n(Generator::zeta(3));
  EXPECT_TRUE(F2Poly::from_monomials({m, m}).is_zero());
  EXPECT_EQ(F2Poly::from_monomials({m, n, m}), F2Poly(n));
}

TEST(F2Poly, ProductAndFrobenius) {
  F2Poly a = z(1) + z(2);
  EXPECT_EQ(a * a, z(1).pow(2) + z(2).pow(2));
  EXPECT_EQ(a.square(), a * a);
  EXPECT_EQ(a.pow(4), a.square().square());
  EXPECT_EQ(a.pow(0), F2Poly::one());
  EXPECT_EQ((z(1) + F2Poly::one()).pow(3), z(1).pow(3) + z(1).pow(2) + z(1) + F2Poly::one());
}

TEST(F2Poly, CanonicalRendering) {
  EXPECT_EQ(F2Poly().to_string(), "0");
  EXPECT_EQ(F2Poly::one().to_string(), "1");
  EXPECT_EQ((z(2) + z(1).pow(3)).to_string(), "z1^3 + z2");
  EXPECT_EQ((z(3) + z(1) * z(2).pow(2) + z(1).pow(7) + z(1).pow(4) * z(2)).to_string(),
            "z1 z2^2 + z1^4 z2 + z1^7 + z3");
}

TEST(F2Poly, Degrees) {
  EXPECT_EQ(Generator::zeta(1).degree(), 1);
  EXPECT_EQ(Generator::zeta(4).degree(), 15);
  EXPECT_EQ((z(1) * z(2)).homogeneous_degree(), 4);
  EXPECT_EQ((z(1) + z(2)).homogeneous_degree(), std::nullopt);
  EXPECT_EQ(F2Poly().homogeneous_degree(), std::nullopt);
  auto parts = dlash::f2::poly_degree_parts(z(1) + z(2) + z(1).pow(3));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts.at(3), z(2) + z(1).pow(3));
}

TEST(F2Poly, Symbols) {
  F2Poly a(Generator::symbol("a_deg4", 4));
  EXPECT_EQ((a * z(1)).homogeneous_degree(), 5);
  EXPECT_EQ(Generator::symbol("a_deg4", 4), Generator::symbol("a_deg4"));
  EXPECT_THROW(Generator::symbol("a_deg4", 5), dlash::Error);

  F2Poly u(Generator::symbol("undeclared_u"));
  EXPECT_THROW(dlash::f2::poly_degree_parts(u), dlash::UndeclaredGenerator);
  EXPECT_EQ((u + u).to_string(), "0");
}

TEST(F2Poly, SubstituteIsARingMap) {
  std::map<dlash::f2::GeneratorId, F2Poly> images{{Generator::zeta(2).id(), z(2) + z(1).pow(3)}};
  EXPECT_EQ((z(1) * z(2)).substitute(images), z(1) * z(2) + z(1).pow(4));
  EXPECT_EQ(z(3).substitute(images), z(3));
}

TEST(F2Poly, RingLawsOnRandomPolynomials) {
  dlash::verify::Rng rng(0x5eed'f201);
  for (int k = 0; k < 300; ++k) {
    F2Poly a = dlash::verify::random_milnor_poly(rng, 10, 4);
    F2Poly b = dlash::verify::random_milnor_poly(rng, 10, 4);
    F2Poly c = dlash::verify::random_milnor_poly(rng, 10, 4);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b).square(), a.square() + b.square());
    dlash::f2::F2PolyAccumulator acc;
    acc.add_product(a, b);
    acc.add_product(a, c);
    EXPECT_EQ(acc.take(), a * (b + c));
  }
}

}  // namespace
