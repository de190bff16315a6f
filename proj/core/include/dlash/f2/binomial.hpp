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

#ifndef DLASH_F2_BINOMIAL_HPP
#define DLASH_F2_BINOMIAL_HPP

#include <cstdint>

namespace dlash::f2 {

/// Parity of the generalized binomial coefficient
/// top (top-1) ... (top-bottom+1) / bottom!.
///
/// For top >= 0 this is Lucas' theorem at p = 2. Negative tops use
/// binom(-a, k) = binom(a+k-1, k) mod 2, i.e. the coefficient of x^k in
/// (1+x)^-a over F2. Any negative bottom gives 0.
constexpr bool binom_mod2(std::int64_t top, std::int64_t bottom) noexcept {
  if (bottom < 0) return false;
  if (top >= 0) return bottom <= top && (bottom & (top - bottom)) == 0;
  // (a+k-1) - k = a-1 for a = -top.
  return (bottom & (-top - 1)) == 0;
}

}  // namespace dlash::f2

#endif  // DLASH_F2_BINOMIAL_HPP
