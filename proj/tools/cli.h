// Copyright 2026 The gridmp Authors.
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

#ifndef GRIDMP_TOOLS_CLI_H_
#define GRIDMP_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace gridmp::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;
inline constexpr int kBudget = 3;

// Runs `gridmp <args...>` (args excludes the program name).
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gridmp::cli

#endif  // GRIDMP_TOOLS_CLI_H_
