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

#ifndef DLASH_DYER_LASHOF_ADEM_HPP
#define DLASH_DYER_LASHOF_ADEM_HPP

#include <cstddef>
#include <map>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "dlash/dyer_lashof/monomial.hpp"

namespace dlash::dl {

/// Q^i Q^j = sum of Q^{i+j-l} Q^l over the listed pairs, for i > 2j. The
/// right side is independent of the class; instability is applied when
/// the relation is used.
struct AdemRelation {
  int i = 0;
  int j = 0;
  std::vector<std::pair<int, int>> rhs;  // (i+j-l, l), l increasing

  std::string to_string() const;  // Q^6 Q^2 = Q^5 Q^3
};

/// Coefficients binom(l-j-1, 2l-i) mod 2. Raises AlreadyAdmissible when
/// i <= 2j.
AdemRelation adem_relation(int i, int j);

/// Rewrites sums of words to admissible form.
///
/// The leftmost non-admissible pair is replaced by its Adem relation until
/// none is left; words with an instability-zero suffix are deleted.
/// Results are memoized per (word, class degree). The memo is the only
/// shared state; concurrent callers may race to fill an entry, and every
/// writer stores the same value.
class AdmissibleReducer {
 public:
  static constexpr std::size_t kDefaultStepLimit = 1'000'000;

  explicit AdmissibleReducer(std::size_t step_limit = kDefaultStepLimit)
      : step_limit_(step_limit) {}

  DLSum reduce(const DLSum& sum);
  /// Admissible words summing to Q^word x for |x| = class_degree.
  std::set<Word> reduce_word(const Word& word, int class_degree);

  std::size_t cache_size() const;
  void clear();

 private:
  std::set<Word> reduce_counted(const Word& word, int class_degree, std::size_t& steps);

  std::size_t step_limit_;
  mutable std::shared_mutex mutex_;
  std::map<std::pair<int, Word>, std::set<Word>> memo_;
};

/// Reduces with a process-wide reducer.
DLSum reduce_to_admissible(const DLSum& sum);
AdmissibleReducer& default_reducer();

/// Q^i applied to every term of `sum`, reduced to admissible form.
DLSum apply_operation(int i, const DLSum& sum);

}  // namespace dlash::dl

#endif  // DLASH_DYER_LASHOF_ADEM_HPP
