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

#include "dlash/dyer_lashof/adem.hpp"

#include <mutex>

#include "dlash/error.hpp"
#include "dlash/f2/binomial.hpp"

namespace dlash::dl {

std::string AdemRelation::to_string() const {
  std::string out = word_to_string({i, j}) + " = ";
  if (rhs.empty()) return out + "0";
  for (std::size_t k = 0; k < rhs.size(); ++k) {
    if (k > 0) out += " + ";
    out += word_to_string({rhs[k].first, rhs[k].second});
  }
  return out;
}

AdemRelation adem_relation(int i, int j) {
  if (i <= 2 * j) {
    throw AlreadyAdmissible("Q^" + std::to_string(i) + " Q^" + std::to_string(j) +
                            " is already admissible");
  }
  AdemRelation rel{i, j, {}};
  // binom(l-j-1, 2l-i) needs 2l >= i; since i > 2j this forces l > j, so the
  // top is nonnegative and the bottom must not exceed it: l <= i-j-1.
  const int lo = (i + 1) >> 1;  // ceil(i/2), also for negative i
  const int hi = i - j - 1;
  for (int l = lo; l <= hi; ++l) {
    if (f2::binom_mod2(l - j - 1, 2 * l - i)) rel.rhs.emplace_back(i + j - l, l);
  }
  return rel;
}

std::set<Word> AdmissibleReducer::reduce_word(const Word& word, int class_degree) {
  std::size_t steps = 0;
  return reduce_counted(word, class_degree, steps);
}

std::set<Word> AdmissibleReducer::reduce_counted(const Word& word, int class_degree,
                                                 std::size_t& steps) {
  if (violates_instability(word, class_degree)) return {};
  std::size_t pos = 0;
  while (pos + 1 < word.size() && word[pos] <= 2 * word[pos + 1]) ++pos;
  if (pos + 1 >= word.size()) return {word};

  auto key = std::pair{class_degree, word};
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  if (++steps > step_limit_) {
    throw RewriteLimitExceeded("admissible reduction of " + word_to_string(word) + " on a class of degree " +
                               std::to_string(class_degree) + " exceeded " +
                               std::to_string(step_limit_) + " rewrite steps");
  }

  std::set<Word> result;
  const auto rel = adem_relation(word[pos], word[pos + 1]);
  for (const auto& [a, b] : rel.rhs) {
    Word next = word;
    next[pos] = a;
    next[pos + 1] = b;
    for (const auto& w : reduce_counted(next, class_degree, steps)) {
      if (auto it = result.find(w); it != result.end()) {
        result.erase(it);
      } else {
        result.insert(w);
      }
    }
  }

  std::unique_lock lock(mutex_);
  memo_.insert_or_assign(std::move(key), result);
  return result;
}

DLSum AdmissibleReducer::reduce(const DLSum& sum) {
  if (sum.is_zero()) return sum;
  const auto& cls = *sum.graded_class();
  DLSum out(cls);
  std::size_t steps = 0;
  for (const auto& w : sum.words()) {
    for (const auto& r : reduce_counted(w, cls.degree, steps)) out.toggle(r);
  }
  return out;
}

std::size_t AdmissibleReducer::cache_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

void AdmissibleReducer::clear() {
  std::unique_lock lock(mutex_);
  memo_.clear();
}

AdmissibleReducer& default_reducer() {
  static AdmissibleReducer reducer;
  return reducer;
}

DLSum reduce_to_admissible(const DLSum& sum) { return default_reducer().reduce(sum); }

DLSum apply_operation(int i, const DLSum& sum) {
  if (sum.is_zero()) return sum;
  DLSum raised(*sum.graded_class());
  for (const auto& w : sum.words()) {
    Word next;
    next.reserve(w.size() + 1);
    next.push_back(i);
    next.insert(next.end(), w.begin(), w.end());
    raised.toggle(next);
  }
  return reduce_to_admissible(raised);
}

}  // namespace dlash::dl
