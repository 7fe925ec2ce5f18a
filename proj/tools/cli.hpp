// Copyright 2026 The zxparam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZXPARAM_TOOLS_CLI_HPP
#define ZXPARAM_TOOLS_CLI_HPP

#include <iosfwd>

namespace zxparam::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kInternalError = 2,
    kVerificationFailed = 3,
    kOracleBeatsOptimizer = 4,
};

/// Entry point of the zxparam tool; stdout and stderr are injectable for tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zxparam::cli

#endif  // ZXPARAM_TOOLS_CLI_HPP
