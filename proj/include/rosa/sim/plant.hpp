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

#ifndef ROSA__SIM__PLANT_HPP_
#define ROSA__SIM__PLANT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rosa/bt/behavior_tree.hpp"
#include "rosa/mapek/event.hpp"
#include "rosa/mapek/executor.hpp"
#include "rosa/model/scenario.hpp"
#include "rosa/sim/process_table.hpp"

namespace rosa::sim
{

// Well-known plant variables and flags.
inline const std::string kBattery = "battery";
inline const std::string kWaterVisibility = "water_visibility";
inline const std::string kSearchProgress = "search_progress";
inline const std::string kInspectedDistance = "inspected_distance";
inline const std::string kPipelineFound = "pipeline_found";
inline const std::string kRecharging = "recharging";
inline const std::string kInspectionDone = "inspection_done";

struct PlantState
{
  std::int64_t tick{0};
  std::map<std::string, double> vars;
  std::set<std::string> flags;
  std::string position;  // graph node, empty when unused
  std::set<std::string> failed_components;
  std::vector<std::string> route;  // corridors completed, in order
  std::optional<std::int64_t> pipeline_found_tick;

  double var(const std::string & name) const;
  bool flag(const std::string & name) const {return flags.count(name) > 0;}
};

/// Deterministic managed subsystem: simulated processes plus a scalar plant
/// model, scripted timeline injection and the domain behaviors of the
/// mission leaves.
class Simulator : public mapek::ManagedSystem, public bt::DomainBehaviors
{
public:
  Simulator(const model::ScenarioDocument & doc, std::uint64_t seed);

  /// Advances the plant to `tick` (previous + 1, or 0 for the first call)
  /// and returns the diagnostics emitted at this tick: scripted timeline
  /// events first, then periodic monitor readings.
  std::vector<mapek::Diagnostic> step(std::int64_t tick);

  // ManagedSystem
  std::optional<std::int64_t> start_process(
    const std::string & component, const mapek::ParameterMap & parameters,
    std::int64_t tick) override;
  void stop_process(const std::string & component, std::int64_t tick) override;
  void set_parameters(
    const std::string & component, const mapek::ParameterMap & parameters,
    std::int64_t tick) override;

  // DomainBehaviors
  bt::TickResult tick_behavior(const std::string & name, std::int64_t tick) override;
  void halt_behavior(const std::string & name, std::int64_t tick) override;

  const PlantState & state() const {return state_;}
  const ProcessTable & processes() const {return processes_;}

  /// Timeline events with a label, for the reaction-time metric.
  std::vector<model::TimelineEvent> labeled_events() const;

private:
  struct Behavior
  {
    model::BehaviorDecl decl;
    double progress{0.0};
  };

  double setting(const std::string & key, double fallback) const;
  double param(const Behavior & b, const std::string & key, double fallback) const;
  bool components_ready(const Behavior & b) const;
  double rate_factor(const Behavior & b) const;
  std::string measurement_kind(const std::string & measure) const;
  void set_var(const std::string & name, double value);

  bt::TickResult tick_search(Behavior & b);
  bt::TickResult tick_inspect(Behavior & b);
  bt::TickResult tick_recharge(Behavior & b);
  bt::TickResult tick_traverse(Behavior & b);
  bt::TickResult tick_timed(Behavior & b);
  bt::TickResult tick_check(const Behavior & b) const;

  const model::ScenarioDocument & doc_;
  PlantState state_;
  ProcessTable processes_;
  std::map<std::string, Behavior> behaviors_;
  std::map<std::string, std::string> monitor_vars_;  // measure -> variable
  std::size_t next_timeline_{0};
  std::optional<std::int64_t> last_step_;
  std::mt19937_64 rng_;
};

}  // namespace rosa::sim

#endif  // ROSA__SIM__PLANT_HPP_
