// Copyright 2026 The Cyclotorus Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every command prints one JSON envelope
//
//   {"command": ..., "params": {...}, "result": ..., "elapsed_ms": ...}
//
// on `out`; `verify` first streams one JSON line per checked instance.
// Diagnostics go to `err`.

#ifndef CYCLOTORUS_CLI_HPP_
#define CYCLOTORUS_CLI_HPP_

#include <cstdint>
#include <ostream>

namespace cyclotorus::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kPrecondition = 3,
};

// Largest cyclotomic index the single-shot commands accept.
inline constexpr std::uint64_t kMaxIndex = 20000;

// Default upper bound on --max for `verify`.
inline constexpr std::uint64_t kDefaultVerifyCeiling = 31;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cyclotorus::cli

#endif  // CYCLOTORUS_CLI_HPP_
