// Copyright 2026 The dpsum Authors. All rights reserved.
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


#ifndef DPSUM_TOOLS_CLI_HPP_
#define DPSUM_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace dpsum::cli {

enum ExitCode { kOk = 0, kVerificationFailure = 1, kUsage = 2, kNumerical = 3 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace dpsum::cli

#endif  // DPSUM_TOOLS_CLI_HPP_
