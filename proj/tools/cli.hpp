/*
 * Copyright 2026 The quivcomp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// quivcomp command line: argument parsing and subcommand dispatch, kept out
// of main() so tests can drive it with string streams.

#ifndef QUIVCOMP_TOOLS_CLI_HPP
#define QUIVCOMP_TOOLS_CLI_HPP

#include <ostream>

namespace quivcomp {

/// Exit codes.
inline constexpr int kExitDecided = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUndecided = 2;

/// Default prime comes from $QUIVCOMP_PRIME when set, else 101.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quivcomp

#endif  // QUIVCOMP_TOOLS_CLI_HPP
