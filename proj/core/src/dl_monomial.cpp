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

#include "dlash/dyer_lashof/monomial.hpp"

#include <numeric>

#include "dlash/error.hpp"

namespace dlash::dl {

std::string GradedClass::to_string() const { return name + "[" + std::to_string(degree) + "]"; }

int word_degree(const Word& word, int class_degree) {
  return std::accumulate(word.begin(), word.end(), class_degree);
}

bool is_admissible(const Word& word) {
  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    if (word[k] > 2 * word[k + 1]) return false;
  }
  return true;
}

bool violates_instability(const Word& word, int class_degree) {
  int d = class_degree;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < d) return true;
    d += *it;
  }
  return false;
}

std::string word_to_string(const Word& word) {
  std::string out;
  for (int i : word) {
    if (!out.empty()) out += ' ';
    out += "Q^" + std::to_string(i);
  }
  return out;
}

std::string DLMonomial::to_string() const {
  auto w = word_to_string(word);
  return w.empty() ? cls.to_string() : w + " " + cls.to_string();
}

DLSum::DLSum(GradedClass cls, std::initializer_list<Word> words) : cls_(std::move(cls)) {
  for (const auto& w : words) toggle(w);
}

DLSum DLSum::of(const DLMonomial& m) {
  DLSum s(m.cls);
  s.toggle(m.word);
  return s;
}

std::vector<DLMonomial> DLSum::monomials() const {
  std::vector<DLMonomial> out;
  out.reserve(words_.size());
  for (const auto& w : words_) out.push_back({w, *cls_});
  return out;
}

void DLSum::toggle(const Word& word) {
  if (!cls_) throw Error("cannot add a word to a sum with no class");
  if (auto it = words_.find(word); it != words_.end()) {
    words_.erase(it);
  } else {
    words_.insert(word);
  }
}

DLSum& DLSum::operator+=(const DLSum& other) {
  if (other.words_.empty()) {
    if (!cls_) cls_ = other.cls_;
    return *this;
  }
  if (cls_ && words_.empty()) cls_.reset();
  if (!cls_) {
    cls_ = other.cls_;
  } else if (!(*cls_ == *other.cls_)) {
    throw Error("cannot add sums over " + cls_->to_string() + " and " + other.cls_->to_string());
  }
  for (const auto& w : other.words_) toggle(w);
  return *this;
}

std::string DLSum::to_string() const {
  if (words_.empty()) return "0";
  std::string out;
  for (const auto& w : words_) {
    if (!out.empty()) out += " + ";
    out += DLMonomial{w, *cls_}.to_string();
  }
  return out;
}

}  // namespace dlash::dl
