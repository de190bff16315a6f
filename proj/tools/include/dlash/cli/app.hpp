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

#ifndef DLASH_CLI_APP_HPP
#define DLASH_CLI_APP_HPP

#include <iosfwd>

namespace dlash::cli {

inline constexpr int kExitOk = 0;
/// A verification failed, or a window or parse error.
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// The `dlash` command line. Results go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dlash::cli

#endif  // DLASH_CLI_APP_HPP
