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

#ifndef ROSA__SIM__PROCESS_TABLE_HPP_
#define ROSA__SIM__PROCESS_TABLE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rosa::sim
{

enum class ProcessState { Stopped, Running };

struct SimProcess
{
  std::string component;
  ProcessState state{ProcessState::Stopped};
  std::optional<std::int64_t> pid;  // present iff running
  std::map<std::string, std::string> parameters;
  std::set<std::int64_t> start_failure_ticks;  // scripted start refusals
  int starts{0};
  int stops{0};
};

/// Simulated process lifecycle. Pids are assigned from a monotonically
/// increasing counter and never reused.
class ProcessTable
{
public:
  explicit ProcessTable(std::int64_t first_pid = 1000);

  /// Registers a component; processes start stopped.
  void add(const std::string & component);
  bool has(const std::string & component) const;

  void script_start_failure(const std::string & component, std::int64_t tick);

  /// Starts (or restarts with new parameters) the process. Returns nullopt
  /// when a start failure is scripted for `tick` or `refuse` is set.
  std::optional<std::int64_t> start(
    const std::string & component, const std::map<std::string, std::string> & parameters,
    std::int64_t tick, bool refuse = false);
  void stop(const std::string & component);
  void set_parameters(
    const std::string & component, const std::map<std::string, std::string> & parameters);

  bool running(const std::string & component) const;
  const SimProcess & get(const std::string & component) const;
  std::vector<std::string> running_components() const;
  const std::map<std::string, SimProcess> & all() const {return processes_;}

  /// Live value of a parameter of a running process.
  std::optional<std::string> parameter(const std::string & component, const std::string & key) const;

  int operations() const {return operations_;}

private:
  SimProcess & get_mut(const std::string & component);

  std::map<std::string, SimProcess> processes_;
  std::int64_t next_pid_;
  int operations_{0};
};

}  // namespace rosa::sim

#endif  // ROSA__SIM__PROCESS_TABLE_HPP_
