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

#ifndef DLASH_VERIFY_RANDOM_HPP
#define DLASH_VERIFY_RANDOM_HPP

#include <cstdint>
#include <random>

#include "dlash/dyer_lashof/monomial.hpp"
#include "dlash/f2/poly.hpp"
#include "dlash/laurent/series.hpp"

// Seeded generators for the randomized checks. Everything is a function of
// the engine state, so a fixed seed gives a fixed instance list.

namespace dlash::verify {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);

/// Random monomial in zeta_1..zeta_5 of degree exactly `degree`, built
/// greedily from the top generator down.
f2::Monomial random_milnor_monomial(Rng& rng, int degree);

/// Sum of up to `max_terms` random monomials of degree <= max_degree.
f2::F2Poly random_milnor_poly(Rng& rng, int max_degree, int max_terms);

/// Sum of up to `max_terms` random monomials of degree exactly `degree`.
f2::F2Poly random_homogeneous_poly(Rng& rng, int degree, int max_terms);

/// A unit-led series: lead * (1 + h), where lead = s^lead_s t^lead_t and h
/// has random small coefficients at offsets up to (span_s, span_total),
/// the window holding every stored term. `span_s == 0` gives a series in
/// t alone.
laurent::LaurentSeries random_unit_series(Rng& rng, std::int64_t lead_s, std::int64_t lead_t,
                                          std::int64_t span_s, std::int64_t span_total);

/// A random series on the given window with finite maxima.
laurent::LaurentSeries random_series(Rng& rng, const laurent::Window& window, double density);

/// A random nonzero sum of words on a class with a random name and degree.
dl::DLSum random_dl_sum(Rng& rng);

}  // namespace dlash::verify

#endif  // DLASH_VERIFY_RANDOM_HPP
