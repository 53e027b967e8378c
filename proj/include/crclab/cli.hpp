// Copyright 2026 The crclab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CRCLAB_CLI_HPP
#define CRCLAB_CLI_HPP

#include <iosfwd>

namespace crclab::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kOk = 0, kClaimFailed = 1, kUsageError = 2 };

/// Entry point shared by the crclab binary and the tests. Reports go to out
/// (or the --report file), diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace crclab::cli

#endif  // CRCLAB_CLI_HPP
