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

#include "dlash/verify/random.hpp"

#include <string>
#include <vector>

namespace dlash::verify {

using f2::F2Poly;
using f2::Generator;
using f2::Monomial;
using laurent::Exponent;
using laurent::LaurentSeries;
using laurent::Window;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Monomial random_milnor_monomial(Rng& rng, int degree) {
  std::vector<Monomial::Factor> factors;
  int left = degree;
  for (unsigned i = 5; i >= 1 && left > 0; --i) {
    const int d = (1 << i) - 1;
    if (d > left) continue;
    const int e = i == 1 ? left : uniform(rng, 0, left / d);
    if (e > 0) factors.emplace_back(Generator::zeta(i).id(), static_cast<std::uint32_t>(e));
    left -= e * d;
  }
  // Factor ids must ascend.
  std::vector<Monomial::Factor> sorted(factors.rbegin(), factors.rend());
  return Monomial::from_factors(sorted);
}

F2Poly random_milnor_poly(Rng& rng, int max_degree, int max_terms) {
  std::vector<Monomial> ms;
  const int n = uniform(rng, 1, max_terms);
  for (int k = 0; k < n; ++k) ms.push_back(random_milnor_monomial(rng, uniform(rng, 0, max_degree)));
  return F2Poly::from_monomials(std::move(ms));
}

F2Poly random_homogeneous_poly(Rng& rng, int degree, int max_terms) {
  std::vector<Monomial> ms;
  const int n = uniform(rng, 1, max_terms);
  for (int k = 0; k < n; ++k) ms.push_back(random_milnor_monomial(rng, degree));
  return F2Poly::from_monomials(std::move(ms));
}

LaurentSeries random_unit_series(Rng& rng, std::int64_t lead_s, std::int64_t lead_t, std::int64_t span_s,
                                 std::int64_t span_total) {
  LaurentSeries::Terms terms;
  terms.emplace(Exponent{lead_s, lead_t}, F2Poly::one());
  std::bernoulli_distribution keep(0.4);
  for (std::int64_t ds = 0; ds <= span_s; ++ds) {
    for (std::int64_t dtot = 0; dtot <= span_total; ++dtot) {
      if ((ds == 0 && dtot == 0) || !keep(rng)) continue;
      F2Poly c = random_milnor_poly(rng, 4, 2);
      if (c.is_zero()) continue;
      terms.emplace(Exponent{lead_s + ds, lead_t + dtot - ds}, std::move(c));
    }
  }
  const std::int64_t lead_total = lead_s + lead_t;
  Window w{lead_s, lead_s + span_s, lead_total, lead_total + span_total};
  if (span_s == 0) w.max_s = laurent::kUnbounded;
  return LaurentSeries(w, std::move(terms));
}

LaurentSeries random_series(Rng& rng, const Window& window, double density) {
  LaurentSeries::Terms terms;
  std::bernoulli_distribution keep(density);
  for (std::int64_t s = window.min_s; s <= window.max_s; ++s) {
    for (std::int64_t total = window.min_total; total <= window.max_total; ++total) {
      if (!keep(rng)) continue;
      F2Poly c = random_milnor_poly(rng, 4, 2);
      if (!c.is_zero()) terms.emplace(Exponent{s, total - s}, std::move(c));
    }
  }
  return LaurentSeries(window, std::move(terms));
}

dl::DLSum random_dl_sum(Rng& rng) {
  static const char* const kNames[] = {"x", "y", "u", "class_a", "b2"};
  dl::GradedClass cls{kNames[uniform(rng, 0, 4)], uniform(rng, -4, 6)};
  dl::DLSum sum(cls);
  const int terms = uniform(rng, 1, 5);
  while (static_cast<int>(sum.size()) < terms) {
    dl::Word w(static_cast<std::size_t>(uniform(rng, 0, 4)));
    for (auto& i : w) i = uniform(rng, -3, 40);
    sum.toggle(w);
  }
  return sum;
}

}  // namespace dlash::verify
