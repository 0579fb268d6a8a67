// Copyright 2026 The pauligl Authors
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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pauligl::cli {

/** Process exit codes. */
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDomain = 2,
  kExitVerifyMismatch = 3,
};

/** Name of the variable that overrides the default pruning tolerance. */
inline constexpr const char* kToleranceEnv = "PAULIGL_TOL";

/**
 * Runs one command line. `args[0]` is the program name. Input files may be
 * "-" for stdin. `tolerance_override` carries the value of PAULIGL_TOL, if
 * set.
 */
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err,
        const std::optional<std::string>& tolerance_override = std::nullopt);

}  // namespace pauligl::cli
