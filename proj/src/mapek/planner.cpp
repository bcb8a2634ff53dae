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

#include "rosa/mapek/planner.hpp"

#include <limits>

#include "rosa/model/rosa_schema.hpp"

namespace rosa::mapek
{

namespace m = rosa::model;
namespace inf = rosa::inference;
using era::InstanceId;

Planner::Planner(KnowledgeBase & kb)
: kb_(kb)
{
}

std::optional<InstanceId> Planner::handle(const Event & event)
{
  switch (event.kind) {
    case EventKind::InsertMonitoringData: {
        auto delta = plan_configuration();
        if (delta.empty()) {
          return std::nullopt;
        }
        return kb_.select_configuration(delta, event.tick);
      }
    case EventKind::ActionUpdate:
      return kb_.select_configuration(plan_configuration(), event.tick);
    case EventKind::ReconfigurationPlan:
      break;
  }
  return std::nullopt;
}

std::optional<InstanceId> Planner::best_candidate(
  InstanceId owner, const std::vector<InstanceId> & candidates) const
{
  if (candidates.empty()) {
    return std::nullopt;
  }
  const auto & store = kb_.store();
  if (auto measure = kb_.preferred_measure_for(owner)) {
    std::optional<InstanceId> best;
    double best_score = 0.0;
    for (auto cand : candidates) {
      for (auto est : inf::estimations_on(store, cand)) {
        const auto & inst = store.get(est);
        if (inst.fillers(m::role::kMeasure).at(0) != *measure) {
          continue;
        }
        double v = inst.get(m::attr::kValue)->as_double();
        double score = inst.get(m::attr::kType)->as_string() == "minimize" ? -v : v;
        // Strict improvement keeps the priority order as tie breaker.
        if (!best || score > best_score) {
          best = cand;
          best_score = score;
        }
        break;
      }
    }
    if (best) {
      return best;
    }
  }
  return candidates.front();
}

SelectionDelta Planner::plan_configuration()
{
  const auto & store = kb_.store();
  SelectionDelta delta;
  for (auto f : kb_.function_adaptable()) {
    auto best = best_candidate(f, kb_.function_designs_selectable(f));
    if (best && best != inf::selected_function_design(store, f)) {
      delta.function_designs.push_back(*best);
    }
  }
  // Component requiredness follows the design selection, so it is written
  // before the components are analysed.
  if (!delta.function_designs.empty()) {
    kb_.apply_selection(delta);
  }
  for (auto comp : kb_.component_adaptable()) {
    auto best = best_candidate(comp, kb_.component_configuration_selectable(comp));
    if (best && best != inf::selected_configuration(store, comp)) {
      delta.component_configurations.push_back(*best);
    }
  }
  return delta;
}

}  // namespace rosa::mapek
