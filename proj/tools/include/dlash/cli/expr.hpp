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

#ifndef DLASH_CLI_EXPR_HPP
#define DLASH_CLI_EXPR_HPP

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dlash/dyer_lashof/monomial.hpp"
#include "dlash/error.hpp"

namespace dlash::cli {

/// Grammar, whitespace-insensitive:
///
///   sum   := term ('+' term)*
///   term  := ('Q^' int)* class | '0'
///   class := ident '[' int ']'
///
/// A term with no operations is the bare class.
struct ExprAst {
  struct Term {
    dl::Word word;
    dl::GradedClass cls;
    bool zero = false;

    friend bool operator==(const Term&, const Term&) = default;
  };
  std::vector<Term> terms;

  /// Terms as written, joined by ` + `.
  std::string to_string() const;
  friend bool operator==(const ExprAst&, const ExprAst&) = default;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::set<std::string> expected, std::string found);

  std::size_t offset() const noexcept { return offset_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::set<std::string> expected_;
};

ExprAst parse_expression(std::string_view text);

/// Sums the terms in F2. All nonzero terms must share one class.
dl::DLSum to_sum(const ExprAst& ast);

}  // namespace dlash::cli

#endif  // DLASH_CLI_EXPR_HPP
