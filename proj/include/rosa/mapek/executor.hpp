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

#ifndef ROSA__MAPEK__EXECUTOR_HPP_
#define ROSA__MAPEK__EXECUTOR_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "rosa/mapek/knowledge_base.hpp"

namespace rosa::mapek
{

using ParameterMap = std::map<std::string, std::string>;

/// What the executor needs from the managed subsystem.
class ManagedSystem
{
public:
  virtual ~ManagedSystem() = default;

  /// Starts the component's process with `parameters`. Returns the pid, or
  /// nullopt when the process refuses to start.
  virtual std::optional<std::int64_t> start_process(
    const std::string & component, const ParameterMap & parameters, std::int64_t tick) = 0;
  virtual void stop_process(const std::string & component, std::int64_t tick) = 0;
  virtual void set_parameters(
    const std::string & component, const ParameterMap & parameters, std::int64_t tick) = 0;
};

/// Applies reconfiguration plans to the managed subsystem. Stateless like
/// the planner: everything it needs is read from the knowledge base.
class Executor
{
public:
  Executor(KnowledgeBase & kb, ManagedSystem & system);

  /// Executes the plan carried by a "reconfiguration plan" event.
  std::optional<std::string> handle(const Event & event);

  /// Stops deactivated components, starts activated ones and pushes
  /// parameters; records result and end time. Returns the result.
  std::string execute_plan(era::InstanceId plan, std::int64_t tick);

private:
  ParameterMap parameters_of(era::InstanceId comp) const;

  KnowledgeBase & kb_;
  ManagedSystem & system_;
};

}  // namespace rosa::mapek

#endif  // ROSA__MAPEK__EXECUTOR_HPP_
