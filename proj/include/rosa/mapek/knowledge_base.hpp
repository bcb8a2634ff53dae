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

#ifndef ROSA__MAPEK__KNOWLEDGE_BASE_HPP_
#define ROSA__MAPEK__KNOWLEDGE_BASE_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "rosa/era/store.hpp"
#include "rosa/inference/reasoner.hpp"
#include "rosa/mapek/event.hpp"

namespace rosa::mapek
{

class KbError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Selections requested by the planner: at most one design per function and
/// one configuration per component.
struct SelectionDelta
{
  std::vector<era::InstanceId> function_designs;
  std::vector<era::InstanceId> component_configurations;

  bool empty() const {return function_designs.empty() && component_configurations.empty();}
};

struct PlanView
{
  era::InstanceId id;
  std::vector<era::InstanceId> activations;
  std::vector<era::InstanceId> deactivations;
  std::vector<era::InstanceId> parameter_adaptations;
  std::int64_t start_time{0};
  std::optional<std::int64_t> end_time;
  std::string result;  // empty while pending

  bool is_empty() const
  {
    return activations.empty() && deactivations.empty() && parameter_adaptations.empty();
  }
};

enum class DiagnosticOutcome { Accepted, Rejected };

/// The central knowledge base shared by all MAPE components. Every service
/// is a read or a single serialized write against the store; components
/// keep no state of their own between events.
class KnowledgeBase
{
public:
  KnowledgeBase(era::Store & store, EventBus & bus);

  era::Store & store() {return store_;}
  const era::Store & store() const {return store_;}
  const inference::Reasoner & reasoner() const {return reasoner_;}
  EventBus & bus() {return bus_;}

  // -- monitor --------------------------------------------------------------

  /// Stores a measurement or component status and publishes "insert
  /// monitoring data". Invalid diagnostics are logged and dropped.
  DiagnosticOutcome ingest_diagnostic(const Diagnostic & d);

  // -- analysis / planning services -----------------------------------------

  std::vector<era::InstanceId> function_adaptable() const;
  std::vector<era::InstanceId> function_designs_selectable(era::InstanceId f) const;
  std::optional<std::int64_t> function_designs_priority(era::InstanceId fd) const;
  std::vector<era::InstanceId> component_adaptable() const;
  std::vector<era::InstanceId> component_configuration_selectable(era::InstanceId comp) const;
  std::optional<std::int64_t> component_configuration_priority(era::InstanceId cc) const;

  /// Writes the is-selected flags of `delta`. Throws KbError, without
  /// touching the store, when two designs of one function (or two
  /// configurations of one component) are requested or an id has the wrong
  /// type.
  void apply_selection(const SelectionDelta & delta);

  /// Applies `delta` and records the reconfiguration plan that moves the
  /// active set to the goal set. Non-empty plans publish "reconfiguration
  /// plan"; empty plans are recorded as completed right away.
  era::InstanceId select_configuration(const SelectionDelta & delta, std::int64_t tick);

  /// Components required by the selected designs of required functions.
  std::vector<era::InstanceId> goal_components() const;
  std::vector<era::InstanceId> active_components() const;
  /// Active components once every plan without a result has been executed.
  std::vector<era::InstanceId> projected_active_components() const;

  // -- execution services ---------------------------------------------------

  std::optional<PlanView> reconfiguration_plan_get_latest() const;
  PlanView reconfiguration_plan_get(era::InstanceId plan) const;
  std::vector<era::InstanceId> reconfiguration_plans() const;
  void reconfiguration_plan_result_set(
    era::InstanceId plan, const std::string & result, std::int64_t tick);
  void component_active_set(
    era::InstanceId comp, bool active, std::optional<std::int64_t> pid = std::nullopt);

  /// Marks a component as failed (used when its process refuses to start)
  /// and publishes "insert monitoring data".
  void component_failure_set(era::InstanceId comp, std::int64_t tick);

  /// Key/value pairs of the component's selected configuration.
  std::vector<std::pair<std::string, std::string>> component_parameters_get(
    era::InstanceId comp) const;

  // -- task layer services --------------------------------------------------

  std::vector<era::InstanceId> action_selectable() const;
  bool action_feasible(era::InstanceId action) const;

  /// Opens a RequiredAction. Throws KbError when one is already open.
  era::InstanceId action_request_start(
    era::InstanceId action, std::int64_t tick,
    std::optional<era::InstanceId> preferred_measure = std::nullopt);
  /// Closes the open RequiredAction of `action`; no-op if none is open.
  void action_request_stop(era::InstanceId action, std::int64_t tick, const std::string & result);

  std::vector<era::Binding> query(const era::Pattern & pattern) const;

  /// Preferred measure of the open request that needs `element` (a function
  /// or component), if any.
  std::optional<era::InstanceId> preferred_measure_for(era::InstanceId element) const;

  // -- generic call surface -------------------------------------------------

  /// Names of the services accepted by call().
  static const std::vector<std::string> & service_names();

  /// JSON request/response entry point mirroring the typed services above.
  /// Elements are referred to by name. Throws KbError for unknown services
  /// or malformed requests.
  nlohmann::json call(const std::string & service, const nlohmann::json & request = {});

private:
  void publish(EventKind kind, std::int64_t tick, std::optional<era::InstanceId> plan = {});
  era::InstanceId named(const std::string & type, const nlohmann::json & request,
    const char * field) const;

  era::Store & store_;
  EventBus & bus_;
  inference::Reasoner reasoner_;
};

/// Helper for the "query" service: Pattern <-> JSON.
era::Pattern pattern_from_json(const nlohmann::json & j);

}  // namespace rosa::mapek

#endif  // ROSA__MAPEK__KNOWLEDGE_BASE_HPP_
