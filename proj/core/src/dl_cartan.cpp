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

#include "dlash/dyer_lashof/cartan.hpp"

#include <algorithm>
#include <limits>

#include "dlash/dyer_lashof/adem.hpp"
#include "dlash/error.hpp"

namespace dlash::dl {

void TensorSum::toggle(const Word& left, const Word& right) {
  auto key = std::pair{left, right};
  if (auto it = terms_.find(key); it != terms_.end()) {
    terms_.erase(it);
  } else {
    terms_.insert(std::move(key));
  }
}

void TensorSum::add_product(const DLSum& left, const DLSum& right) {
  if (left.is_zero() || right.is_zero()) return;
  if (!(*left.graded_class() == left_) || !(*right.graded_class() == right_)) {
    throw Error("tensor factors do not match " + left_.to_string() + " (x) " + right_.to_string());
  }
  for (const auto& a : left.words()) {
    for (const auto& b : right.words()) toggle(a, b);
  }
}

std::string TensorSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [a, b] : terms_) {
    if (!out.empty()) out += " + ";
    out += DLMonomial{a, left_}.to_string() + " (x) " + DLMonomial{b, right_}.to_string();
  }
  return out;
}

namespace {

int min_degree(const DLSum& sum) {
  int d = std::numeric_limits<int>::max();
  for (const auto& w : sum.words()) d = std::min(d, word_degree(w, sum.graded_class()->degree));
  return d;
}

}  // namespace

TensorSum cartan_expand(int n, const DLSum& left, const DLSum& right) {
  if (left.is_zero() || right.is_zero()) {
    GradedClass none{"0", 0};
    return TensorSum(left.graded_class().value_or(none), right.graded_class().value_or(none));
  }
  TensorSum out(*left.graded_class(), *right.graded_class());
  // Q^i vanishes below the degree of every term it meets.
  for (int i = min_degree(left); i <= n - min_degree(right); ++i) {
    out.add_product(apply_operation(i, left), apply_operation(n - i, right));
  }
  return out;
}

}  // namespace dlash::dl
