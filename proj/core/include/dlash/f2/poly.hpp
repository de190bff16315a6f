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

#ifndef DLASH_F2_POLY_HPP
#define DLASH_F2_POLY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace dlash::f2 {

using GeneratorId = std::uint32_t;

/// A polynomial generator: either a Milnor generator zeta_i (i >= 1) or a
/// named free symbol.
///
/// Symbols are interned process-wide by name. A symbol may be created
/// without a degree, but graded operations on it then raise
/// UndeclaredGenerator. Redeclaring a symbol with a different degree is an
/// error.
class Generator {
 public:
  static constexpr GeneratorId kSymbolBase = GeneratorId{1} << 24;
  static constexpr unsigned kMaxZetaIndex = 30;

  static Generator zeta(unsigned index);
  static Generator symbol(std::string_view name, int degree);
  static Generator symbol(std::string_view name);
  static Generator from_id(GeneratorId id);

  GeneratorId id() const noexcept { return id_; }
  bool is_zeta() const noexcept { return id_ < kSymbolBase; }
  unsigned zeta_index() const noexcept { return is_zeta() ? id_ : 0; }

  /// |zeta_i| = 2^i - 1; symbols report their declared degree.
  std::optional<int> degree() const;
  std::string name() const;

  friend bool operator==(Generator, Generator) = default;
  friend auto operator<=>(Generator, Generator) = default;

 private:
  explicit Generator(GeneratorId id) : id_(id) {}
  GeneratorId id_ = 1;
};

/// A monomial with implicit coefficient 1: a sorted list of
/// (generator, positive exponent) factors. The empty list is the unit.
class Monomial {
 public:
  using Factor = std::pair<GeneratorId, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(Generator g, std::uint32_t exponent = 1);
  static Monomial from_factors(std::span<const Factor> factors);

  std::span<const Factor> factors() const noexcept {
    return {factors_.data(), factors_.size()};
  }
  bool is_unit() const noexcept { return factors_.empty(); }
  std::uint32_t exponent(Generator g) const noexcept;

  /// Throws UndeclaredGenerator when a factor has no degree.
  int degree() const;
  std::optional<int> try_degree() const;

  Monomial pow(std::uint32_t k) const;
  std::size_t hash() const noexcept;
  std::string to_string() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.factors_ == b.factors_;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) noexcept {
    return a.factors_ < b.factors_;
  }

 private:
  boost::container::small_vector<Factor, 4> factors_;
};

/// Sparse polynomial over F2: a set of monomials, stored sorted and
/// duplicate free. Addition is symmetric difference.
class F2Poly {
 public:
  F2Poly() = default;
  F2Poly(Monomial m);   // NOLINT(google-explicit-constructor)
  F2Poly(Generator g);  // NOLINT(google-explicit-constructor)

  static F2Poly one() { return F2Poly(Monomial{}); }
  /// Builds a polynomial from an arbitrary monomial list; repeated
  /// monomials cancel in pairs.
  static F2Poly from_monomials(std::vector<Monomial> monomials);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const noexcept {
    return terms_.size() == 1 && terms_.front().is_unit();
  }
  std::span<const Monomial> monomials() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool contains(const Monomial& m) const;

  F2Poly& operator+=(const F2Poly& other);
  F2Poly& operator*=(const F2Poly& other);
  friend F2Poly operator+(F2Poly a, const F2Poly& b) { return a += b; }
  friend F2Poly operator*(const F2Poly& a, const F2Poly& b);
  friend bool operator==(const F2Poly&, const F2Poly&) = default;

  /// Frobenius: doubles every exponent.
  F2Poly square() const;
  F2Poly pow(std::uint64_t k) const;

  /// Ring map fixing every generator not in `images`.
  F2Poly substitute(const std::map<GeneratorId, F2Poly>& images) const;

  /// Homogeneous degree, or nullopt if the polynomial is zero or mixed.
  std::optional<int> homogeneous_degree() const;

  /// Canonical rendering: monomials by (degree, generator order), zeta_i
  /// as `zi`, exponents as `^k`, factors separated by a space, terms by
  /// ` + `. Zero renders as `0`.
  std::string to_string() const;

 private:
  std::vector<Monomial> terms_;
};

/// Splits `a` into homogeneous components; throws UndeclaredGenerator when a
/// symbol carries no degree.
std::map<int, F2Poly> poly_degree_parts(const F2Poly& a);

/// Collects raw monomials and cancels pairs once at the end. Cheaper than
/// repeated `+=` when summing many products into one coefficient.
class F2PolyAccumulator {
 public:
  void add(const F2Poly& p);
  void add_product(const F2Poly& a, const F2Poly& b);
  bool empty() const noexcept { return raw_.empty(); }
  F2Poly take();

 private:
  std::vector<Monomial> raw_;
};

}  // namespace dlash::f2

#endif  // DLASH_F2_POLY_HPP
