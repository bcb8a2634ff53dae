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

#include "rosa/sim/process_table.hpp"

#include <stdexcept>

namespace rosa::sim
{

ProcessTable::ProcessTable(std::int64_t first_pid)
: next_pid_(first_pid)
{
}

void ProcessTable::add(const std::string & component)
{
  processes_.emplace(component, SimProcess{component, ProcessState::Stopped, {}, {}, {}, 0, 0});
}

bool ProcessTable::has(const std::string & component) const
{
  return processes_.count(component) > 0;
}

SimProcess & ProcessTable::get_mut(const std::string & component)
{
  auto it = processes_.find(component);
  if (it == processes_.end()) {
    throw std::out_of_range("no simulated process for component '" + component + "'");
  }
  return it->second;
}

const SimProcess & ProcessTable::get(const std::string & component) const
{
  auto it = processes_.find(component);
  if (it == processes_.end()) {
    throw std::out_of_range("no simulated process for component '" + component + "'");
  }
  return it->second;
}

void ProcessTable::script_start_failure(const std::string & component, std::int64_t tick)
{
  get_mut(component).start_failure_ticks.insert(tick);
}

std::optional<std::int64_t> ProcessTable::start(
  const std::string & component, const std::map<std::string, std::string> & parameters,
  std::int64_t tick, bool refuse)
{
  auto & p = get_mut(component);
  ++operations_;
  if (refuse || p.start_failure_ticks.count(tick) > 0) {
    p.state = ProcessState::Stopped;
    p.pid.reset();
    return std::nullopt;
  }
  p.state = ProcessState::Running;
  p.pid = next_pid_++;
  p.parameters = parameters;
  ++p.starts;
  return p.pid;
}

void ProcessTable::stop(const std::string & component)
{
  auto & p = get_mut(component);
  ++operations_;
  p.state = ProcessState::Stopped;
  p.pid.reset();
  ++p.stops;
}

void ProcessTable::set_parameters(
  const std::string & component, const std::map<std::string, std::string> & parameters)
{
  auto & p = get_mut(component);
  ++operations_;
  for (const auto & [k, v] : parameters) {
    p.parameters[k] = v;
  }
}

bool ProcessTable::running(const std::string & component) const
{
  auto it = processes_.find(component);
  return it != processes_.end() && it->second.state == ProcessState::Running;
}

std::vector<std::string> ProcessTable::running_components() const
{
  std::vector<std::string> out;
  for (const auto & [name, p] : processes_) {
    if (p.state == ProcessState::Running) {
      out.push_back(name);
    }
  }
  return out;
}

std::optional<std::string> ProcessTable::parameter(
  const std::string & component, const std::string & key) const
{
  auto it = processes_.find(component);
  if (it == processes_.end() || it->second.state != ProcessState::Running) {
    return std::nullopt;
  }
  auto kv = it->second.parameters.find(key);
  if (kv == it->second.parameters.end()) {
    return std::nullopt;
  }
  return kv->second;
}

}  // namespace rosa::sim
