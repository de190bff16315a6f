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

#include <fstream>
#include <sstream>
#include <string>

#include "dlash/error.hpp"
#include "dlash/steenrod/dual.hpp"
#include "dlash/verify/random.hpp"

namespace {

using namespace dlash::steenrod;
using dlash::f2::F2Poly;

F2Poly z(unsigned i) { return zeta(i); }
const F2Poly kOne = F2Poly::one();

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(DLASH_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(in.good()) << name;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Zeta, SeriesIsSumOfPowersOfTwo) {
  LaurentSeries zs = zeta_series(16);
  EXPECT_EQ(zs.to_string(), "t + z1 t^2 + z2 t^4 + z3 t^8 + z4 t^16");
  EXPECT_EQ(zs.window().max_total, 16);
  EXPECT_EQ(zeta(0), kOne);
}

TEST(Conjugate, KnownValues) {
  auto zbar = conjugate_zeta(3);
  ASSERT_EQ(zbar.size(), 4u);
  EXPECT_EQ(zbar[0], kOne);
  EXPECT_EQ(zbar[1], z(1));
  EXPECT_EQ(zbar[2], z(1).pow(3) + z(2));
  EXPECT_EQ(zbar[3].to_string(), "z1 z2^2 + z1^4 z2 + z1^7 + z3");
}

TEST(Conjugate, ReversionAgreesWithRecursion) {
  EXPECT_EQ(conjugate_zeta(6, 64), conjugate_zeta_recursive(6));
}

TEST(Conjugate, NeedsAWindowReachingTwoToTheI) {
  EXPECT_THROW(conjugate_zeta(5, 16), dlash::WindowTooSmall);
  EXPECT_NO_THROW(conjugate_zeta(5, 32));
}

TEST(Conjugate, IsAnInvolutiveRingMap) {
  for (unsigned i = 1; i <= 5; ++i) EXPECT_EQ(conjugate(conjugate(z(i))), z(i)) << i;
  dlash::verify::Rng rng(0x5eed'5701);
  for (int k = 0; k < 40; ++k) {
    F2Poly a = dlash::verify::random_milnor_poly(rng, 12, 3);
    F2Poly b = dlash::verify::random_milnor_poly(rng, 12, 3);
    EXPECT_EQ(conjugate(a * b), conjugate(a) * conjugate(b));
    EXPECT_EQ(conjugate(conjugate(a)), a);
  }
}

TEST(Conjugate, AntipodeIdentity) {
  // sum_i zeta_{n-i}^{2^i} zbar_i = 0 for n >= 1.
  auto zbar = conjugate_zeta(5);
  for (int n = 1; n <= 5; ++n) {
    F2Poly sum;
    for (int i = 0; i <= n; ++i) sum += z(n - i).pow(std::uint64_t{1} << i) * zbar[i];
    EXPECT_TRUE(sum.is_zero()) << n;
  }
}

TEST(Augmentation, KillsPositiveDegree) {
  EXPECT_EQ(augmentation(kOne + z(1) + z(2) * z(1)), kOne);
  EXPECT_TRUE(augmentation(z(3)).is_zero());
}

TEST(QTotal, ActionOnZetaOne) {
  LaurentSeries q = q_total_on_zeta(1, 8);
  EXPECT_EQ(q.coefficient(0, 1), z(1).pow(2));
  EXPECT_EQ(q.coefficient(0, 2), z(1).pow(3) + z(2));
  EXPECT_TRUE(q.coefficient(0, 0).is_zero());
  EXPECT_EQ(q.to_string().rfind("z1^2 t + (z1^3 + z2) t^2", 0), 0u);
}

TEST(QTotal, ActionOnUnitIsOne) {
  LaurentSeries q = q_total_on_zeta(0, 16);
  EXPECT_EQ(q.coefficient(0, 0), kOne);
  for (int k = 1; k <= 16; ++k) EXPECT_TRUE(q.coefficient(0, k).is_zero()) << k;
}

TEST(QTotal, AgreesWithRecursion) {
  for (int n = 1; n <= 5; ++n) {
    LaurentSeries a = q_total_on_zeta(n, 24);
    LaurentSeries b = q_total_on_zeta_recursive(n, 24);
    EXPECT_TRUE(a.agrees_with(b)) << n;
    EXPECT_GE(a.window().clipped_to(b.window()).max_total, 24);
  }
}

TEST(QTotal, IsUnstable) {
  // Q^i z_n = 0 for i < |z_n|, and Q^{|z_n|} z_n = z_n^2.
  for (unsigned n = 1; n <= 4; ++n) {
    const int d = (1 << n) - 1;
    LaurentSeries q = q_total_on_zeta(static_cast<int>(n), 32);
    for (int i = 0; i < d; ++i) EXPECT_TRUE(q.coefficient(0, i).is_zero()) << n << " " << i;
    EXPECT_EQ(q.coefficient(0, d), z(n).pow(2));
  }
}

TEST(QTotal, MatchesGoldenFiles) {
  for (int n = 0; n <= 3; ++n) {
    const std::string name = "q_total_zeta_" + std::to_string(n) + "_d32.txt";
    EXPECT_EQ(q_total_on_zeta(n, 32).to_string() + "\n", read_golden(name)) << name;
  }
}

TEST(QTotal, IsMultiplicative) {
  LaurentSeries a = q_total(z(1) * z(2), 20);
  LaurentSeries b = dlash::laurent::series_mul(q_total_on_zeta(1, 20), q_total_on_zeta(2, 20));
  EXPECT_TRUE(a.agrees_with(b));
  EXPECT_THROW(q_total(F2Poly(dlash::f2::Generator::symbol("not_a_zeta", 2))), dlash::Error);
}

TEST(QOp, Examples) {
  EXPECT_EQ(q_op(2, z(1)), z(2) + z(1).pow(3));
  EXPECT_EQ(q_op(4, z(1) * z(2)), z(1).pow(2) * z(2).pow(2));
  EXPECT_TRUE(q_op(0, z(1)).is_zero());
  EXPECT_EQ(q_op(0, kOne), kOne);
  EXPECT_THROW(q_op(40, z(1), 32), dlash::WindowTooSmall);
}

TEST(QOp, SquaresInTheBottomDegree) {
  dlash::verify::Rng rng(0x5eed'5702);
  for (int k = 0; k < 30; ++k) {
    const int d = dlash::verify::uniform(rng, 1, 10);
    F2Poly a = dlash::verify::random_homogeneous_poly(rng, d, 3);
    EXPECT_EQ(q_op(d, a), a.square()) << a.to_string();
    EXPECT_TRUE(q_op(d - 1, a).is_zero()) << a.to_string();
  }
}

TEST(Reports, SteinbergerAndBissonJoyalPass) {
  EXPECT_TRUE(verify_steinberger_conjugate(4, 32).passed());
  EXPECT_TRUE(verify_steinberger_successor(3, 1, 32).passed());
  Report r = verify_bisson_joyal_identity1(12);
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_EQ(r.rows.size(), 4u);
  Report nc = verify_nishida_conjugate_form(12);
  EXPECT_TRUE(nc.passed()) << nc.to_text();
  EXPECT_EQ(nc.rows.size(), 6u);
}

TEST(Reports, SuccessorIdentityHoldsFromIndexZero) {
  Report r = verify_steinberger_successor(0, 0, 32);
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(Reports, PerturbedSidesAreDetected) {
  IdentitySides sides = bisson_joyal_identity1(10);
  EXPECT_TRUE(sides.lhs.agrees_with(sides.rhs));
  LaurentSeries bumped = sides.rhs + LaurentSeries::monomial(z(1), 0, 3);
  auto e = sides.lhs.first_mismatch(bumped);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(*e, (dlash::laurent::Exponent{0, 3}));
}

TEST(Reports, TextTableListsEveryRow) {
  Report r = verify_steinberger_conjugate(3, 32);
  std::string text = r.to_text();
  EXPECT_NE(text.find(r.title), std::string::npos);
  for (const auto& row : r.rows) EXPECT_NE(text.find(row.identity), std::string::npos);
}

}  // namespace
