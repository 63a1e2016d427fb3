// Copyright 2026 The fibeq Authors
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

// Command-line front end. Kept as a library function so tests can drive it
// without spawning processes.

#ifndef FIBEQ_CLI_HPP_
#define FIBEQ_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace fibeq {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;         // equivalent / no leaks / done
inline constexpr int kExitFinding = 1;    // not equivalent / leaks found
inline constexpr int kExitUsage = 2;      // usage, parse or capacity error
inline constexpr int kExitInternal = 3;   // broken internal invariant

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace fibeq

#endif  // FIBEQ_CLI_HPP_
