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

#ifndef ROSA__SIM__TRACE_HPP_
#define ROSA__SIM__TRACE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace rosa::sim
{

/// Rounds to 1e-6 so traces do not depend on the last bits of a double.
double round6(double v);

struct PlanRecord
{
  std::int64_t tick{0};
  std::uint64_t id{0};
  std::vector<std::string> activations;
  std::vector<std::string> deactivations;
  std::vector<std::string> adaptations;  // configuration names
  std::string result;

  nlohmann::json to_json() const;
};

struct ActionRecord
{
  std::int64_t tick{0};
  std::string action;
  bool opened{false};
  std::string result;  // closing result
};

/// An action whose feasibility changed while the knowledge base absorbed a
/// tick's diagnostics.
struct FeasibilityRecord
{
  std::int64_t tick{0};
  std::string action;
  bool feasible{false};
};

struct Metrics
{
  std::string result;  // success, failure or timeout
  std::int64_t ticks{0};
  std::optional<std::int64_t> search_time;
  double distance_inspected{0.0};
  std::int64_t plans{0};  // non-empty plans executed
  std::int64_t failed_plans{0};
  std::int64_t engine_cycles{0};
  std::vector<std::string> route;
  std::map<std::string, std::optional<std::int64_t>> reaction_ticks;  // per label
};

/// Flat "key: value" document, one field per line, stable order.
std::string format_metrics(const Metrics & metrics);

/// Ticks from each labeled uncertainty to the first response at or after the
/// uncertainty's tick: a reconfiguration plan executed, an action opened or
/// closed by the task layer, or an action feasibility flip the task layer's
/// conditions observe. nullopt when nothing reacted.
std::optional<std::int64_t> reaction_ticks(
  std::int64_t event_tick, const std::vector<PlanRecord> & plans,
  const std::vector<ActionRecord> & actions,
  const std::vector<FeasibilityRecord> & flips = {});

}  // namespace rosa::sim

#endif  // ROSA__SIM__TRACE_HPP_
