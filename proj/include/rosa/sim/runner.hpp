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

#ifndef ROSA__SIM__RUNNER_HPP_
#define ROSA__SIM__RUNNER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "rosa/model/scenario.hpp"
#include "rosa/sim/trace.hpp"

namespace rosa::sim
{

struct RunOptions
{
  std::int64_t max_ticks{1000};
  std::uint64_t seed{0};
  /// Rebuild planner and executor before every event (statelessness check).
  bool rebuild_components{false};
};

struct RunResult
{
  Metrics metrics;
  std::vector<std::string> trace;  // one JSON document per tick
  std::vector<std::string> event_log;  // "<tick> <kind> <epoch>"
  std::vector<PlanRecord> plans;  // non-empty plans, in creation order
  std::vector<ActionRecord> actions;  // RequiredAction opens and closes
  std::vector<FeasibilityRecord> feasibility;  // flips after diagnostics

  /// Trace lines joined with '\n' (JSONL).
  std::string trace_text() const;
  /// Selected design of `function` after each tick ("" when none).
  std::vector<std::string> selections_of(const std::string & element) const;
};

/// Runs the scenario in lockstep: plant step, diagnostics ingestion, event
/// processing, behavior tree tick, event processing, trace record. Stops at
/// mission success or failure, or after max_ticks ("timeout"). Validates the
/// document first (throws model::ScenarioError).
RunResult run_scenario(const model::ScenarioDocument & doc, const RunOptions & options);

}  // namespace rosa::sim

#endif  // ROSA__SIM__RUNNER_HPP_
