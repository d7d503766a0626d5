// Copyright 2026 The Spider Authors
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

#ifndef SPIDER_CLI_HPP_
#define SPIDER_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "spider/checks.hpp"
#include "spider/generators.hpp"

namespace spider::cli {

// Process exit codes. Stable; documented in the README.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNoSpider = 1;      // oracle: no spider exists
inline constexpr int kExitPrecondition = 2;  // solve: min out-degree below 2*ell
inline constexpr int kExitInvalid = 3;       // verify: spider rejected
inline constexpr int kExitUsage = 64;
inline constexpr int kExitParse = 65;
inline constexpr int kExitNoInput = 66;      // input file cannot be opened
inline constexpr int kExitInternal = 70;     // invariant violation

enum class Command { kGenerate, kSolve, kVerify, kOracle, kSearch, kBench };

struct CommandConfig {
  Command command = Command::kSolve;
  std::string input = "-";   // graph path, "-" for stdin
  std::string output = "-";  // generate only
  std::string spider_path;   // verify only
  std::size_t ell = 0;
  Mode mode = Mode::kChecked;
  std::uint64_t seed = 0;
  GeneratorSpec generator;
  std::size_t trials = 1;
  std::size_t cap = 16;
  std::vector<std::size_t> sizes{10000, 30000, 100000};
  std::size_t reps = 3;
  bool trace = false;
};

// Parses `args` (without the program name) and executes the command.
// Payloads go to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

// Executes an already validated configuration.
int execute(const CommandConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace spider::cli

#endif  // SPIDER_CLI_HPP_
