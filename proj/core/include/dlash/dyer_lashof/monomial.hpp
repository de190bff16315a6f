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

#ifndef DLASH_DYER_LASHOF_MONOMIAL_HPP
#define DLASH_DYER_LASHOF_MONOMIAL_HPP

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dlash::dl {

/// A homotopy class x with its degree |x|. Any integer degree is allowed.
struct GradedClass {
  std::string name;
  int degree = 0;

  std::string to_string() const;  // x[2]
  friend bool operator==(const GradedClass&, const GradedClass&) = default;
  friend auto operator<=>(const GradedClass&, const GradedClass&) = default;
};

/// Upper indices (i_1, ..., i_k) of Q^{i_1} ... Q^{i_k}; the last entry acts
/// first.
using Word = std::vector<int>;

/// Degree of Q^I x.
int word_degree(const Word& word, int class_degree);
/// i_j <= 2 i_{j+1} for all consecutive pairs.
bool is_admissible(const Word& word);
/// Some suffix applies Q^i to a class y with i < |y|.
bool violates_instability(const Word& word, int class_degree);
std::string word_to_string(const Word& word);

struct DLMonomial {
  Word word;
  GradedClass cls;

  int degree() const { return word_degree(word, cls.degree); }
  bool admissible() const { return is_admissible(word); }
  std::string to_string() const;  // Q^6 Q^2 x[2]

  friend bool operator==(const DLMonomial&, const DLMonomial&) = default;
};

/// Formal F2-sum of Dyer-Lashof monomials on one class. Repeated words
/// cancel in pairs. The zero sum may carry no class; all zero sums compare
/// equal.
class DLSum {
 public:
  DLSum() = default;
  explicit DLSum(GradedClass cls) : cls_(std::move(cls)) {}
  DLSum(GradedClass cls, std::initializer_list<Word> words);
  static DLSum of(const DLMonomial& m);

  const std::optional<GradedClass>& graded_class() const noexcept { return cls_; }
  const std::set<Word>& words() const noexcept { return words_; }
  bool is_zero() const noexcept { return words_.empty(); }
  std::size_t size() const noexcept { return words_.size(); }
  std::vector<DLMonomial> monomials() const;

  /// Adds (and so possibly cancels) one word.
  void toggle(const Word& word);

  /// Raises dlash::Error when the two sums live on different classes.
  DLSum& operator+=(const DLSum& other);
  friend DLSum operator+(DLSum a, const DLSum& b) { return a += b; }
  friend bool operator==(const DLSum& a, const DLSum& b) {
    if (a.words_.empty() || b.words_.empty()) return a.words_ == b.words_;
    return a.words_ == b.words_ && a.cls_ == b.cls_;
  }

  /// Terms joined by ` + ` in word order; `0` for the zero sum.
  std::string to_string() const;

 private:
  std::optional<GradedClass> cls_;
  std::set<Word> words_;
};

}  // namespace dlash::dl

#endif  // DLASH_DYER_LASHOF_MONOMIAL_HPP
