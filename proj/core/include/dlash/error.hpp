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

#ifndef DLASH_ERROR_HPP
#define DLASH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dlash {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A free symbol was used in a graded context without a declared degree.
class UndeclaredGenerator : public Error {
 public:
  using Error::Error;
};

/// Raised when a coefficient is requested above the knowledge bounds of a
/// truncated series.
class WindowMiss : public Error {
 public:
  using Error::Error;
};

class EmptyWindow : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class NonComposable : public Error {
 public:
  using Error::Error;
};

class BadValuation : public Error {
 public:
  using Error::Error;
};

class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

class AlreadyAdmissible : public Error {
 public:
  using Error::Error;
};

/// The admissible rewriting exceeded its step ceiling.
class RewriteLimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace dlash

#endif  // DLASH_ERROR_HPP
