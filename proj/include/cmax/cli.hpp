// Copyright 2026 The cmaxlab Authors
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

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmax::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Name of the environment variable holding the sweep thread count.
inline constexpr const char* kThreadsEnv = "CMAXLAB_THREADS";

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses a flat key=value file. Blank lines and lines starting with '#'
/// are skipped; '_' in keys is read as '-'. Throws UsageError.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path);

/// Splices "--key=value" entries from any --config file directly after the
/// subcommand name, so later command-line flags take precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& args);

/// nullopt when unset or empty; UsageError unless a positive integer.
std::optional<int> threads_from_env(const char* value);

/// Runs the command line without the program name. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmax::cli
