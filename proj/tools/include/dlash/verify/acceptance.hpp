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

#ifndef DLASH_VERIFY_ACCEPTANCE_HPP
#define DLASH_VERIFY_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dlash/laurent/window.hpp"

// The acceptance suite. `dlash verify-all` and the acceptance test binary
// both run exactly these checks.

namespace dlash::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  /// What was checked, or the first failure.
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

/// Relations from symmetry_extract_relations reduce to 0, |x| in {0..3},
/// i+j <= 20.
CriterionResult check_adem_soundness();
/// Elimination on the symmetry relations reproduces adem_relation(i, j),
/// |x| in {1, 2}, i+j <= 16.
CriterionResult check_adem_completeness();
/// res_s t^(l+j+1) s^(i-2l-1) (t+s)^(l-j-1) = binom(l-j-1, 2l-i) t^i.
CriterionResult check_residue_replay();
CriterionResult check_identity1(std::int64_t degree_bound);
CriterionResult check_nishida(std::int64_t degree_bound);
CriterionResult check_steinberger();
CriterionResult check_binomial_oracle();
/// Randomized round trips and window soundness, `instances` of each kind.
CriterionResult check_series_kernel(int instances = 500);
CriterionResult check_milnor_laws();

/// Criteria 1-9 in order; `identity_bound` is the D of criteria 4 and 5.
std::vector<CriterionResult> run_acceptance(std::int64_t identity_bound = 16);

/// `PASS  [4] Bisson-Joyal identity (1) at D = 16: ... (0.01 s)`
std::string format_result(const CriterionResult& r);

}  // namespace dlash::verify

#endif  // DLASH_VERIFY_ACCEPTANCE_HPP
