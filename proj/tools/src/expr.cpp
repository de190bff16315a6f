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

#include "dlash/cli/expr.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace dlash::cli {

namespace {

std::string join_expected(const std::set<std::string>& expected) {
  std::string out;
  std::size_t k = 0;
  for (const auto& e : expected) {
    if (k > 0) out += k + 1 == expected.size() ? " or " : ", ";
    out += e;
    ++k;
  }
  return out;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprAst parse() {
    ExprAst ast;
    ast.terms.push_back(term());
    while (true) {
      skip_ws();
      if (at_end()) break;
      if (peek() != '+') fail({"'+'", "end of input"});
      ++pos_;
      ast.terms.push_back(term());
    }
    return ast;
  }

 private:
  ExprAst::Term term() {
    skip_ws();
    ExprAst::Term t;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      if (integer() != 0) {
        pos_ = start;
        fail({"'0'", "'Q^'", "identifier"});
      }
      t.zero = true;
      return t;
    }
    while (operation_ahead()) {
      ++pos_;  // Q
      skip_ws();
      ++pos_;  // ^
      t.word.push_back(integer());
      skip_ws();
    }
    if (at_end() || !ident_start(peek())) {
      if (t.word.empty()) fail({"'0'", "'Q^'", "identifier"});
      fail({"'Q^'", "identifier"});
    }
    const std::size_t start = pos_;
    while (!at_end() && ident_char(peek())) ++pos_;
    t.cls.name = std::string(text_.substr(start, pos_ - start));
    expect('[');
    t.cls.degree = integer();
    expect(']');
    return t;
  }

  // `Q` followed by `^`, possibly with whitespace between.
  bool operation_ahead() {
    skip_ws();
    if (at_end() || peek() != 'Q') return false;
    std::size_t k = pos_ + 1;
    while (k < text_.size() && std::isspace(static_cast<unsigned char>(text_[k]))) ++k;
    return k < text_.size() && text_[k] == '^';
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t end = pos_;
    if (end < text_.size() && text_[end] == '-') ++end;
    const std::size_t digits = end;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end == digits) fail({"integer"});
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + end, value);
    if (ec != std::errc{}) throw SyntaxError(start, {"integer in int range"}, std::string(text_.substr(start, end - start)));
    pos_ = end;
    return value;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail({std::string("'") + c + "'"});
    ++pos_;
  }

  [[noreturn]] void fail(std::set<std::string> expected) {
    skip_ws();
    std::string found = at_end() ? "end of input" : "'" + std::string(1, peek()) + "'";
    throw SyntaxError(pos_, std::move(expected), std::move(found));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::set<std::string> expected, std::string found)
    : Error("syntax error at offset " + std::to_string(offset) + ": expected " + join_expected(expected) +
            ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

std::string ExprAst::to_string() const {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    out += t.zero ? "0" : dl::DLMonomial{t.word, t.cls}.to_string();
  }
  return out;
}

ExprAst parse_expression(std::string_view text) { return Parser(text).parse(); }

dl::DLSum to_sum(const ExprAst& ast) {
  std::optional<dl::GradedClass> cls;
  for (const auto& t : ast.terms) {
    if (t.zero) continue;
    if (!cls) {
      cls = t.cls;
    } else if (!(*cls == t.cls)) {
      throw Error("terms live on different classes: " + cls->to_string() + " and " + t.cls.to_string());
    }
  }
  if (!cls) return {};
  dl::DLSum sum(*cls);
  for (const auto& t : ast.terms) {
    if (!t.zero) sum.toggle(t.word);
  }
  return sum;
}

}  // namespace dlash::cli
