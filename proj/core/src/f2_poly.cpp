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

#include "dlash/f2/poly.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "dlash/error.hpp"

namespace dlash::f2 {

namespace {

struct SymbolEntry {
  std::string name;
  std::optional<int> degree;
};

class SymbolTable {
 public:
  GeneratorId intern(std::string_view name, std::optional<int> degree) {
    std::unique_lock lock(mutex_);
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) {
      auto& entry = entries_[it->second - Generator::kSymbolBase];
      if (degree) {
        if (entry.degree && *entry.degree != *degree) {
          throw Error("symbol '" + entry.name + "' redeclared with degree " +
                      std::to_string(*degree) + " (was " +
                      std::to_string(*entry.degree) + ")");
        }
        entry.degree = degree;
      }
      return it->second;
    }
    if (name.empty()) throw Error("empty symbol name");
    auto id = Generator::kSymbolBase + static_cast<GeneratorId>(entries_.size());
    entries_.push_back({std::string(name), degree});
    ids_.emplace(std::string(name), id);
    return id;
  }

  SymbolEntry lookup(GeneratorId id) const {
    std::shared_lock lock(mutex_);
    auto index = id - Generator::kSymbolBase;
    if (index >= entries_.size()) throw Error("unknown generator id");
    return entries_[index];
  }

 private:
  mutable std::shared_mutex mutex_;
  std::vector<SymbolEntry> entries_;
  std::unordered_map<std::string, GeneratorId> ids_;
};

SymbolTable& symbols() {
  static SymbolTable table;
  return table;
}

// Rendering order: degree first (undeclared symbols count as 0), then the
// factor list.
bool render_less(const Monomial& a, const Monomial& b) {
  auto da = a.try_degree().value_or(0);
  auto db = b.try_degree().value_or(0);
  if (da != db) return da < db;
  auto fa = a.factors();
  auto fb = b.factors();
  return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end());
}

void cancel_pairs(std::vector<Monomial>& ms) {
  std::sort(ms.begin(), ms.end());
  auto out = ms.begin();
  for (auto it = ms.begin(); it != ms.end();) {
    auto next = std::find_if(it, ms.end(), [&](const Monomial& m) { return !(m == *it); });
    if (std::distance(it, next) % 2 == 1) *out++ = std::move(*it);
    it = next;
  }
  ms.erase(out, ms.end());
}

}  // namespace

// ---------------------------------------------------------------- Generator

Generator Generator::zeta(unsigned index) {
  if (index == 0 || index > kMaxZetaIndex) {
    throw Error("zeta index out of range: " + std::to_string(index));
  }
  return Generator(index);
}

Generator Generator::symbol(std::string_view name, int degree) {
  return Generator(symbols().intern(name, degree));
}

Generator Generator::symbol(std::string_view name) {
  return Generator(symbols().intern(name, std::nullopt));
}

Generator Generator::from_id(GeneratorId id) {
  if (id < kSymbolBase) return zeta(id);
  symbols().lookup(id);
  return Generator(id);
}

std::optional<int> Generator::degree() const {
  if (is_zeta()) return (1 << id_) - 1;
  return symbols().lookup(id_).degree;
}

std::string Generator::name() const {
  if (is_zeta()) return "z" + std::to_string(id_);
  return symbols().lookup(id_).name;
}

// ----------------------------------------------------------------- Monomial

Monomial::Monomial(Generator g, std::uint32_t exponent) {
  if (exponent > 0) factors_.emplace_back(g.id(), exponent);
}

Monomial Monomial::from_factors(std::span<const Factor> factors) {
  Monomial m;
  m.factors_.assign(factors.begin(), factors.end());
  std::sort(m.factors_.begin(), m.factors_.end());
  // Merge repeated generators, drop zero exponents.
  auto out = m.factors_.begin();
  for (auto it = m.factors_.begin(); it != m.factors_.end(); ++it) {
    if (out != m.factors_.begin() && std::prev(out)->first == it->first) {
      std::prev(out)->second += it->second;
    } else if (it->second != 0) {
      *out++ = *it;
    }
  }
  m.factors_.erase(out, m.factors_.end());
  return m;
}

std::uint32_t Monomial::exponent(Generator g) const noexcept {
  for (const auto& [id, e] : factors_) {
    if (id == g.id()) return e;
  }
  return 0;
}

std::optional<int> Monomial::try_degree() const {
  int total = 0;
  for (const auto& [id, e] : factors_) {
    auto d = Generator::from_id(id).degree();
    if (!d) return std::nullopt;
    total += *d * static_cast<int>(e);
  }
  return total;
}

int Monomial::degree() const {
  for (const auto& [id, e] : factors_) {
    auto g = Generator::from_id(id);
    if (!g.degree()) throw UndeclaredGenerator("generator '" + g.name() + "' has no declared degree");
  }
  return *try_degree();
}

Monomial Monomial::pow(std::uint32_t k) const {
  if (k == 0) return {};
  Monomial m = *this;
  for (auto& f : m.factors_) f.second *= k;
  return m;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [id, e] : factors_) {
    h ^= std::hash<std::uint64_t>{}((std::uint64_t{id} << 32) | e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [id, e] : factors_) {
    if (!out.empty()) out += ' ';
    out += Generator::from_id(id).name();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->first < ib->first) {
      m.factors_.push_back(*ia++);
    } else if (ib->first < ia->first) {
      m.factors_.push_back(*ib++);
    } else {
      m.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  m.factors_.insert(m.factors_.end(), ia, a.factors_.end());
  m.factors_.insert(m.factors_.end(), ib, b.factors_.end());
  return m;
}

// ------------------------------------------------------------------- F2Poly

F2Poly::F2Poly(Monomial m) { terms_.push_back(std::move(m)); }

F2Poly::F2Poly(Generator g) : F2Poly(Monomial(g)) {}

F2Poly F2Poly::from_monomials(std::vector<Monomial> monomials) {
  cancel_pairs(monomials);
  F2Poly p;
  p.terms_ = std::move(monomials);
  return p;
}

bool F2Poly::contains(const Monomial& m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m);
}

F2Poly& F2Poly::operator+=(const F2Poly& other) {
  if (other.terms_.empty()) return *this;
  std::vector<Monomial> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(),
                                other.terms_.end(), std::back_inserter(merged));
  terms_ = std::move(merged);
  return *this;
}

F2Poly operator*(const F2Poly& a, const F2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  std::vector<Monomial> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) raw.push_back(x * y);
  }
  return F2Poly::from_monomials(std::move(raw));
}

F2Poly& F2Poly::operator*=(const F2Poly& other) { return *this = *this * other; }

F2Poly F2Poly::square() const {
  F2Poly p;
  p.terms_.reserve(terms_.size());
  // Doubling exponents preserves the factor-list order.
  for (const auto& m : terms_) p.terms_.push_back(m.pow(2));
  return p;
}

F2Poly F2Poly::pow(std::uint64_t k) const {
  F2Poly result = one();
  F2Poly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base = base.square();
  }
  return result;
}

F2Poly F2Poly::substitute(const std::map<GeneratorId, F2Poly>& images) const {
  F2PolyAccumulator acc;
  for (const auto& m : terms_) {
    std::vector<Monomial::Factor> kept;
    F2Poly image = one();
    for (const auto& [id, e] : m.factors()) {
      auto it = images.find(id);
      if (it == images.end()) {
        kept.emplace_back(id, e);
      } else {
        image *= it->second.pow(e);
      }
    }
    if (image.is_zero()) continue;
    acc.add_product(image, F2Poly(Monomial::from_factors(kept)));
  }
  return acc.take();
}

std::optional<int> F2Poly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.front().degree();
  for (const auto& m : terms_) {
    if (m.degree() != d) return std::nullopt;
  }
  return d;
}

std::string F2Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Monomial*> order;
  order.reserve(terms_.size());
  for (const auto& m : terms_) order.push_back(&m);
  std::sort(order.begin(), order.end(),
            [](const Monomial* a, const Monomial* b) { return render_less(*a, *b); });
  std::string out;
  for (const auto* m : order) {
    if (!out.empty()) out += " + ";
    out += m->to_string();
  }
  return out;
}

std::map<int, F2Poly> poly_degree_parts(const F2Poly& a) {
  std::map<int, std::vector<Monomial>> parts;
  for (const auto& m : a.monomials()) parts[m.degree()].push_back(m);
  std::map<int, F2Poly> out;
  for (auto& [d, ms] : parts) out.emplace(d, F2Poly::from_monomials(std::move(ms)));
  return out;
}

// -------------------------------------------------------- F2PolyAccumulator

void F2PolyAccumulator::add(const F2Poly& p) {
  raw_.insert(raw_.end(), p.monomials().begin(), p.monomials().end());
}

void F2PolyAccumulator::add_product(const F2Poly& a, const F2Poly& b) {
  for (const auto& x : a.monomials()) {
    for (const auto& y : b.monomials()) raw_.push_back(x * y);
  }
}

F2Poly F2PolyAccumulator::take() {
  auto p = F2Poly::from_monomials(std::move(raw_));
  raw_.clear();
  return p;
}

}  // namespace dlash::f2
