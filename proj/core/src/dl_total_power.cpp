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

#include "dlash/dyer_lashof/total_power.hpp"

#include <algorithm>
#include <cstdint>

#include "dlash/dyer_lashof/adem.hpp"
#include "dlash/error.hpp"
#include "dlash/f2/binomial.hpp"

namespace dlash::dl {

using laurent::Exponent;
using laurent::is_unbounded;
using laurent::Window;

DLSum total_power_coefficient(const GradedClass& x, std::int64_t es, std::int64_t et) {
  // (s + s^2 t^-1)^j t^i = sum_k binom(j, k) s^{j+k} t^{i-k}; j >= n by
  // instability, so j runs over [n, es].
  DLSum out(x);
  const int n = x.degree;
  for (std::int64_t j = n; j <= es; ++j) {
    const std::int64_t k = es - j;
    const std::int64_t i = et + k;
    if (!f2::binom_mod2(j, k)) continue;
    Word w{static_cast<int>(i), static_cast<int>(j)};
    if (violates_instability(w, n)) continue;
    out.toggle(w);
  }
  return out;
}

DLSeries total_power_series(const GradedClass& x, const Window& window) {
  if (is_unbounded(window.max_s) || is_unbounded(window.max_total)) {
    throw Error("total_power_series needs a window with finite maxima");
  }
  const std::int64_t n = x.degree;
  Window w{n, window.max_s, 3 * n, window.max_total};
  DLSeries::Terms terms;
  for (std::int64_t es = n; es <= w.max_s; ++es) {
    for (std::int64_t total = 3 * n; total <= w.max_total; ++total) {
      auto c = total_power_coefficient(x, es, total - es);
      if (!c.is_zero()) terms.emplace(Exponent{es, total - es}, std::move(c));
    }
  }
  return DLSeries(w, std::move(terms));
}

std::vector<SymmetryRelation> symmetry_extract_relations(const GradedClass& x, const Window& window) {
  if (is_unbounded(window.max_s) || is_unbounded(window.max_total)) {
    throw Error("symmetry_extract_relations needs a window with finite maxima");
  }
  std::vector<SymmetryRelation> out;
  for (std::int64_t a = window.min_s; a <= window.max_s; ++a) {
    for (std::int64_t b = a; b <= window.max_s && a + b <= window.max_total; ++b) {
      auto rel = total_power_coefficient(x, a, b) + total_power_coefficient(x, b, a);
      out.push_back({Exponent{a, b}, std::move(rel)});
    }
  }
  return out;
}

namespace {

// Dense F2 row over a fixed column numbering.
class BitRow {
 public:
  explicit BitRow(std::size_t columns) : bits_((columns + 63) / 64, 0) {}

  void flip(std::size_t c) { bits_[c / 64] ^= std::uint64_t{1} << (c % 64); }
  bool test(std::size_t c) const { return (bits_[c / 64] >> (c % 64)) & 1; }
  BitRow& operator^=(const BitRow& o) {
    for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] ^= o.bits_[k];
    return *this;
  }
  std::optional<std::size_t> lowest() const {
    for (std::size_t k = 0; k < bits_.size(); ++k) {
      if (bits_[k] != 0) return k * 64 + static_cast<std::size_t>(__builtin_ctzll(bits_[k]));
    }
    return std::nullopt;
  }

 private:
  std::vector<std::uint64_t> bits_;
};

}  // namespace

RelationSolution solve_relations(const std::vector<DLSum>& relations) {
  RelationSolution solution;
  std::optional<GradedClass> cls;
  std::vector<Word> non_admissible;
  std::vector<Word> admissible;
  {
    std::set<Word> seen;
    for (const auto& r : relations) {
      if (r.is_zero()) continue;
      if (!cls) cls = r.graded_class();
      seen.insert(r.words().begin(), r.words().end());
    }
    for (const auto& w : seen) (is_admissible(w) ? admissible : non_admissible).push_back(w);
  }
  if (!cls) return solution;

  std::vector<Word> columns = non_admissible;
  columns.insert(columns.end(), admissible.begin(), admissible.end());
  std::map<Word, std::size_t> index;
  for (std::size_t c = 0; c < columns.size(); ++c) index.emplace(columns[c], c);

  // Reduced row echelon form; the pivot of each row is its lowest column.
  std::map<std::size_t, BitRow> pivots;
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    BitRow row(columns.size());
    for (const auto& w : r.words()) row.flip(index.at(w));
    for (const auto& [c, p] : pivots) {
      if (row.test(c)) row ^= p;
    }
    auto lead = row.lowest();
    if (!lead) continue;
    for (auto& [c, p] : pivots) {
      if (p.test(*lead)) p ^= row;
    }
    pivots.emplace(*lead, std::move(row));
  }

  const std::size_t first_admissible = non_admissible.size();
  for (const auto& [c, row] : pivots) {
    DLSum rest(*cls);
    bool clean = true;
    for (std::size_t k = 0; k < columns.size(); ++k) {
      if (k == c || !row.test(k)) continue;
      if (k < first_admissible) clean = false;
      rest.toggle(columns[k]);
    }
    if (c >= first_admissible) {
      rest.toggle(columns[c]);
      solution.admissible_dependencies.push_back(std::move(rest));
    } else if (clean) {
      solution.expressed.emplace(columns[c], std::move(rest));
    } else {
      solution.unresolved.push_back(columns[c]);
    }
  }
  return solution;
}

RelationSolution derive_adem_from_symmetry(const GradedClass& x, int bound) {
  auto rels = symmetry_extract_relations(x, Window::bivariate(x.degree, bound, 3 * x.degree, bound));
  std::vector<DLSum> sums;
  sums.reserve(rels.size());
  for (auto& r : rels) sums.push_back(std::move(r.relation));
  return solve_relations(sums);
}

}  // namespace dlash::dl
