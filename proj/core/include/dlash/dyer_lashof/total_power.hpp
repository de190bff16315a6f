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

#ifndef DLASH_DYER_LASHOF_TOTAL_POWER_HPP
#define DLASH_DYER_LASHOF_TOTAL_POWER_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "dlash/dyer_lashof/monomial.hpp"
#include "dlash/laurent/series.hpp"

namespace dlash::dl {

using DLSeries = laurent::BasicSeries<DLSum>;

/// Coefficient of s^es t^et in
///   Q(t)Q(s)x = sum_{i,j} (Q^i Q^j x) (s + s^2 t^-1)^j t^i,
/// i.e. the Q^i Q^j x with j + k = es, i - k = et and binom(j, k) odd,
/// restricted to words that survive instability.
DLSum total_power_coefficient(const GradedClass& x, std::int64_t es, std::int64_t et);

/// The expansion of Q(t)Q(s)x on the knowledge box of `window` (its maxima
/// must be finite). Support starts at s^n, total degree 3n for |x| = n.
DLSeries total_power_series(const GradedClass& x, const laurent::Window& window);

/// coeff(a, b) + coeff(b, a) of Q(t)Q(s)x: zero by the symmetry in s and t.
struct SymmetryRelation {
  laurent::Exponent cell;  // cell.s <= cell.t
  DLSum relation;
};

/// One relation per unordered pair of cells {(a,b), (b,a)} that both lie in
/// the window, diagonal included.
std::vector<SymmetryRelation> symmetry_extract_relations(const GradedClass& x,
                                                         const laurent::Window& window);

/// Result of Gaussian elimination over F2 on a relation set, with
/// non-admissible words ordered before admissible ones.
struct RelationSolution {
  /// Each non-admissible word that is a pivot, expressed as a sum of
  /// admissible words.
  std::map<Word, DLSum> expressed;
  /// Non-admissible words that are pivots but still reference another
  /// non-admissible word (underdetermined system).
  std::vector<Word> unresolved;
  /// Relations among admissible words alone. Nonempty means the input
  /// relations contradict linear independence of admissible monomials.
  std::vector<DLSum> admissible_dependencies;
};

RelationSolution solve_relations(const std::vector<DLSum>& relations);

/// Adem relations on x re-derived from the symmetry of Q(t)Q(s)x: extracts
/// the relations with i + j <= bound and solves them.
RelationSolution derive_adem_from_symmetry(const GradedClass& x, int bound);

}  // namespace dlash::dl

#endif  // DLASH_DYER_LASHOF_TOTAL_POWER_HPP
