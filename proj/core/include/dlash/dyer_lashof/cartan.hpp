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

#ifndef DLASH_DYER_LASHOF_CARTAN_HPP
#define DLASH_DYER_LASHOF_CARTAN_HPP

#include <set>
#include <string>
#include <utility>

#include "dlash/dyer_lashof/monomial.hpp"

namespace dlash::dl {

/// F2-sum of tensors Q^I x (x) Q^J y.
class TensorSum {
 public:
  TensorSum(GradedClass left, GradedClass right)
      : left_(std::move(left)), right_(std::move(right)) {}

  const GradedClass& left_class() const noexcept { return left_; }
  const GradedClass& right_class() const noexcept { return right_; }
  const std::set<std::pair<Word, Word>>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void toggle(const Word& left, const Word& right);
  /// Bilinear product of two sums.
  void add_product(const DLSum& left, const DLSum& right);

  std::string to_string() const;  // Q^3 x[2] (x) Q^3 y[3] + ...
  friend bool operator==(const TensorSum&, const TensorSum&) = default;

 private:
  GradedClass left_;
  GradedClass right_;
  std::set<std::pair<Word, Word>> terms_;
};

/// Q^n(a (x) b) = sum_{i+j=n} Q^i(a) (x) Q^j(b), each factor reduced to
/// admissible form. Squares stay formal: Q^{|y|} y is not replaced by y^2.
TensorSum cartan_expand(int n, const DLSum& left, const DLSum& right);

}  // namespace dlash::dl

#endif  // DLASH_DYER_LASHOF_CARTAN_HPP
