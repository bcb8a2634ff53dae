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

#include <stdexcept>
#include <string>

#include "rosa/model/element_count.hpp"

namespace rosa::model
{

namespace
{

// Appends the elements of one action. Every design and configuration gets a
// priority and a constraint on the action's quality attribute.
void add_action(ModelSection & m, int index, const ActionAdaptations & adapt)
{
  const std::string s = std::to_string(index);
  const std::string action = "action_" + s;
  const std::string function = "function_" + s;
  const std::string component = "component_" + s;
  const std::string qa = "quality_" + s;

  m.actions.push_back({action, 0});
  m.functions.push_back({function, false, 0});
  m.components.push_back({component, false, "", "", false, 0});
  m.measures.push_back({qa, MeasureKind::Quality, 0});
  m.requirements.push_back({action, {function}, 0});

  auto add_design = [&](const std::string & name, const std::string & comp, int prio) {
      m.designs.push_back({name, function, {comp}, prio, 0});
      m.constraints.push_back({qa, ">=", 0.0, name, 0});
    };
  auto add_configuration =
    [&](const std::string & name, const std::string & comp, const std::string & value, int prio) {
      const std::string label = "param_" + name;
      m.parameters.push_back({label, "mode", value, 0});
      m.configurations.push_back({name, comp, {label}, prio, 0});
      m.constraints.push_back({qa, ">=", 0.0, name, 0});
    };

  add_design("design_" + s, component, 1);
  add_configuration("config_" + s, component, "base", 1);

  for (int j = 1; j <= adapt.structural; ++j) {
    const std::string sj = s + "_" + std::to_string(j);
    const std::string alt = "component_" + sj;
    m.components.push_back({alt, false, "", "", false, 0});
    add_design("design_" + sj, alt, j + 1);
    add_configuration("config_alt_" + sj, alt, "base", 1);
  }
  for (int k = 1; k <= adapt.parameter; ++k) {
    const std::string sk = s + "_" + std::to_string(k);
    add_configuration("config_" + sk, component, "mode_" + std::to_string(k), k + 1);
  }
}

}  // namespace

ScenarioDocument generate_hypothetical(
  int n_actions, const std::vector<ActionAdaptations> & per_action)
{
  if (n_actions < 1) {
    throw std::invalid_argument("n_actions must be at least 1");
  }
  if (per_action.size() != static_cast<std::size_t>(n_actions)) {
    throw std::invalid_argument("per-action adaptation list must have n_actions entries");
  }
  ScenarioDocument doc;
  for (int i = 0; i < n_actions; ++i) {
    const auto & a = per_action[static_cast<std::size_t>(i)];
    if (a.structural < 0 || a.parameter < 0) {
      throw std::invalid_argument("adaptation counts must be non-negative");
    }
    add_action(doc.model, i + 1, a);
  }
  return doc;
}

ScenarioDocument generate_hypothetical(int n_actions, int n_structural, int n_parameter)
{
  std::vector<ActionAdaptations> per_action(
    static_cast<std::size_t>(n_actions > 0 ? n_actions : 0), {n_structural, n_parameter});
  return generate_hypothetical(n_actions, per_action);
}

std::int64_t hypothetical_elements_per_action(int n_structural, int n_parameter)
{
  return 10 + 6 * static_cast<std::int64_t>(n_structural) +
         3 * static_cast<std::int64_t>(n_parameter);
}

}  // namespace rosa::model
