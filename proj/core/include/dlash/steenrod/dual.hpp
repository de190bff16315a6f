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

#ifndef DLASH_STEENROD_DUAL_HPP
#define DLASH_STEENROD_DUAL_HPP

#include <cstdint>
#include <vector>

#include "dlash/f2/poly.hpp"
#include "dlash/laurent/series.hpp"

// The dual Steenrod algebra A_* = F2[z1, z2, ...], |zi| = 2^i - 1, and the
// action of the total power operation Q(t) on it.
//
// Truncation is given by a degree bound D: series in t are known through
// t^D unless noted otherwise.

namespace dlash::steenrod {

using f2::F2Poly;
using laurent::LaurentSeries;
using laurent::Variable;

/// zeta_i, with zeta_0 = 1.
F2Poly zeta(unsigned i);

/// zeta(var) = sum_{i>=0} zeta_i var^(2^i), known through var^bound.
LaurentSeries zeta_series(std::int64_t bound, Variable var = Variable::t);

/// Conjugates zbar_0 = 1, zbar_1, ..., zbar_max_i, indexed by i. Read off
/// series_reversion(zeta(t)) and checked against conjugate_zeta_recursive.
/// Raises WindowTooSmall if 2^max_i > bound.
std::vector<F2Poly> conjugate_zeta(int max_i, std::int64_t bound = laurent::kDefaultDegreeBound);

/// Same, from zbar_n = sum_{i=1}^n zeta_i zbar_{n-i}^(2^i). Exact.
std::vector<F2Poly> conjugate_zeta_recursive(int max_i);

/// The antipode: the ring map zeta_i -> zbar_i.
F2Poly conjugate(const F2Poly& a);

/// The augmentation A_* -> F2 applied coefficientwise: zeta_i -> 0 for
/// i >= 1, free symbols kept.
F2Poly augmentation(const F2Poly& a);

/// Q(t) zeta_n through t^bound, from identity (2):
///   t^(2^n) Q(t) zeta_n = sum_{i>=n+1} zeta_i t^(2^i)
///                         + zeta(t)^-1 sum_{i>=n} zeta_i^2 t^(2^(i+1)).
/// Results are cached per (n, bound).
LaurentSeries q_total_on_zeta(int n, std::int64_t bound = laurent::kDefaultDegreeBound);

/// Q(t) zeta_n from the recursion
///   Q(t) zeta_n = zeta_n + zeta_{n-1}^2 zeta(t)^-1 + t^(-2^(n-1)) Q(t) zeta_{n-1},
/// starting at Q(t) 1 = 1. Used as a cross-check only.
LaurentSeries q_total_on_zeta_recursive(int n, std::int64_t bound = laurent::kDefaultDegreeBound);

/// Q(t) a through t^bound, extended multiplicatively from the generators.
LaurentSeries q_total(const F2Poly& a, std::int64_t bound = laurent::kDefaultDegreeBound);

/// Q^i a. The one-argument form sizes the window to i; the bounded form
/// raises WindowTooSmall when i > bound. Throws if the squaring law
/// Q^|a| a = a^2 fails on a homogeneous a.
F2Poly q_op(int i, const F2Poly& a);
F2Poly q_op(int i, const F2Poly& a, std::int64_t bound);

/// One line of a verification report.
struct CheckRow {
  std::string identity;
  int index = 0;
  bool pass = false;
  /// First differing bidegree, or the two sides, when `pass` is false.
  std::string mismatch;
};

struct Report {
  std::string title;
  /// Window the checks were made on, empty for exact checks.
  std::string window;
  std::vector<CheckRow> rows;

  bool passed() const;
  /// Fixed-width table: identity, index, result, first mismatch.
  std::string to_text() const;
};

/// Q^(2^i - 2) zeta_1 = zbar_i for 2 <= i <= i_max, from Q(t) zeta_1 and
/// from the residue res(t^(-2^i + 1) zeta(t)^-1 dt).
Report verify_steinberger_conjugate(int i_max, std::int64_t bound = laurent::kDefaultDegreeBound);

/// Q^(2^i) zeta_i = zeta_{i+1} + zeta_i^2 zeta_1 for first <= i <= i_max and
/// Q^(2^i) zbar_i = zbar_{i+1} for max(first, 1) <= i <= i_max. At i = 0 the
/// conjugate form reads Q^1 1 = zbar_1 and is false.
Report verify_steinberger_successor(int i_max, int first = 0,
                                    std::int64_t bound = laurent::kDefaultDegreeBound);

/// Both sides of an identity of bivariate series.
struct IdentitySides {
  LaurentSeries lhs;
  LaurentSeries rhs;
};

/// zeta(s) + zeta(s)^2 zeta(t)^-1 and sum_i Q(t)zeta_i (s^(2^i) + s^(2^(i+1)) t^(-2^i)),
/// both known for s-degree <= d.
IdentitySides bisson_joyal_identity1(std::int64_t d);

/// Q(s)-form of the Nishida relation for x = s: psi_R(Q(t)s) evaluated as
/// (s + s^2 t^-1) with s -> zeta(s), against identity (1)'s right side
/// with t -> zbar(t).
IdentitySides nishida_conjugate_form(std::int64_t d);

Report verify_bisson_joyal_identity1(std::int64_t d);
Report verify_nishida_conjugate_form(std::int64_t d);

}  // namespace dlash::steenrod

#endif  // DLASH_STEENROD_DUAL_HPP
