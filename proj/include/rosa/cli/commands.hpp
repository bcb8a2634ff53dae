// Copyright 2026 The ROSA Engine Authors
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

#ifndef ROSA__CLI__COMMANDS_HPP_
#define ROSA__CLI__COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rosa::cli
{

enum ExitCode : int
{
  kExitOk = 0,
  kExitValidation = 1,
  kExitMission = 2,
  kExitInternal = 3,
};

struct RunConfig
{
  std::filesystem::path scenario;
  std::int64_t max_ticks{1000};
  std::uint64_t seed{0};
  std::optional<std::filesystem::path> trace_path;
  std::optional<std::filesystem::path> metrics_path;
  bool quiet{false};
};

/// Prints "<E> entities, <R> relations, <T> total" or the load error.
int cmd_validate(const std::filesystem::path & path, std::ostream & out, std::ostream & err);

int cmd_run(const RunConfig & config, std::ostream & out, std::ostream & err);

/// Query names: selectable-actions, selectable-designs FUNCTION,
/// selectable-configs COMPONENT, adaptable-functions, adaptable-components,
/// status [NAME]. `overrides` are MEASURE=VALUE measurements applied first.
int cmd_query(
  const std::filesystem::path & path, const std::string & query, const std::string & argument,
  const std::vector<std::string> & overrides, std::ostream & out, std::ostream & err);

int cmd_generate(
  int n_actions, int n_structural, int n_parameter, const std::filesystem::path & out_path,
  std::ostream & out, std::ostream & err);

/// Full command line entry point (argv[0] is the program name).
int run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err);

}  // namespace rosa::cli

#endif  // ROSA__CLI__COMMANDS_HPP_
