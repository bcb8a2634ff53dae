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

#include "rosa/mapek/executor.hpp"

#include <spdlog/spdlog.h>

#include "rosa/model/rosa_schema.hpp"

namespace rosa::mapek
{

namespace m = rosa::model;
using era::InstanceId;

Executor::Executor(KnowledgeBase & kb, ManagedSystem & system)
: kb_(kb), system_(system)
{
}

std::optional<std::string> Executor::handle(const Event & event)
{
  if (event.kind != EventKind::ReconfigurationPlan || !event.plan) {
    return std::nullopt;
  }
  return execute_plan(*event.plan, event.tick);
}

ParameterMap Executor::parameters_of(InstanceId comp) const
{
  ParameterMap out;
  for (const auto & [k, v] : kb_.component_parameters_get(comp)) {
    out[k] = v;
  }
  return out;
}

std::string Executor::execute_plan(InstanceId plan_id, std::int64_t tick)
{
  auto plan = kb_.reconfiguration_plan_get(plan_id);
  if (!plan.result.empty()) {
    return plan.result;  // already executed
  }
  const auto & store = kb_.store();
  std::string result = "completed";

  for (auto comp : plan.deactivations) {
    system_.stop_process(m::name_of(store, comp), tick);
    kb_.component_active_set(comp, false);
  }
  for (auto comp : plan.activations) {
    const auto name = m::name_of(store, comp);
    auto pid = system_.start_process(name, parameters_of(comp), tick);
    if (!pid) {
      spdlog::warn("component '{}' failed to start", name);
      result = "failed";
      kb_.component_failure_set(comp, tick);
      continue;
    }
    kb_.component_active_set(comp, true, pid);
  }
  for (auto cc : plan.parameter_adaptations) {
    auto comp = inference::configuration_component(store, cc);
    if (m::flag(store, comp, m::attr::kIsActive)) {
      system_.set_parameters(m::name_of(store, comp), parameters_of(comp), tick);
    }
  }
  kb_.reconfiguration_plan_result_set(plan_id, result, tick);
  return result;
}

}  // namespace rosa::mapek
