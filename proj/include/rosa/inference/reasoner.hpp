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

#ifndef ROSA__INFERENCE__REASONER_HPP_
#define ROSA__INFERENCE__REASONER_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rosa/era/store.hpp"
#include "rosa/inference/status.hpp"

namespace rosa::inference
{

/// Inferred statuses of every rule-governed element at one store epoch.
struct StatusSnapshot
{
  std::uint64_t epoch{0};
  std::map<era::InstanceId, std::string> status;
  std::set<era::InstanceId> required;  // actions, functions and components

  const std::string * find(era::InstanceId id) const;
  /// Throws std::out_of_range for elements without a status.
  const std::string & of(era::InstanceId id) const;
  bool is_required(era::InstanceId id) const {return required.count(id) > 0;}

  bool operator==(const StatusSnapshot &) const = default;
};

/// Stratified evaluation: constraints, then configurations and components,
/// then function designs, functions and finally actions. Pure function of
/// the store contents.
StatusSnapshot compute_snapshot(const era::Store & store);

// Structural helpers over the knowledge model.

/// Value of the most recent measurement (latest time, then latest insert).
std::optional<double> latest_measurement(const era::Store & store, era::InstanceId measure);

/// The action's RequiredAction without end-time, if any.
std::optional<era::InstanceId> open_required_action(
  const era::Store & store, era::InstanceId action);

std::vector<era::InstanceId> function_designs_of(const era::Store & store, era::InstanceId f);
std::vector<era::InstanceId> configurations_of(const era::Store & store, era::InstanceId comp);
std::vector<era::InstanceId> constraints_on(const era::Store & store, era::InstanceId element);
std::vector<era::InstanceId> estimations_on(const era::Store & store, era::InstanceId element);
std::vector<era::InstanceId> required_functions_of(
  const era::Store & store, era::InstanceId action);
std::vector<era::InstanceId> design_components(const era::Store & store, era::InstanceId fd);
era::InstanceId design_function(const era::Store & store, era::InstanceId fd);
era::InstanceId configuration_component(const era::Store & store, era::InstanceId cc);

/// The currently selected design of `f` / configuration of `comp`. When
/// several are flagged (never produced by the planner) the first by id wins.
std::optional<era::InstanceId> selected_function_design(
  const era::Store & store, era::InstanceId f);
std::optional<era::InstanceId> selected_configuration(
  const era::Store & store, era::InstanceId comp);

/// Orders by priority (1 first, missing last), then by name.
void sort_by_priority(const era::Store & store, std::vector<era::InstanceId> & ids);

/// Epoch-memoized view of the inferred knowledge. Queries issued at the same
/// store epoch share one snapshot.
class Reasoner
{
public:
  explicit Reasoner(const era::Store & store);

  std::shared_ptr<const StatusSnapshot> snapshot() const;

  std::string status(era::InstanceId id) const;
  bool is_required(era::InstanceId id) const;

  /// Actions whose status is not unfeasible, in id order.
  std::vector<era::InstanceId> selectable_actions() const;

  /// Required elements in unsolved / configuration error, plus required
  /// elements flagged always-improve. Id order.
  std::vector<era::InstanceId> adaptable_functions() const;
  std::vector<era::InstanceId> adaptable_components() const;

  /// Feasible candidates ordered by (priority, name).
  std::vector<era::InstanceId> selectable_function_designs(era::InstanceId f) const;
  std::vector<era::InstanceId> selectable_component_configurations(era::InstanceId comp) const;

  /// Exposes `status` and `is-required` as attributes to pattern matching.
  era::DerivedAttributes derived_attributes() const;
  std::vector<era::Binding> match(const era::Pattern & pattern) const;

  const era::Store & store() const {return store_;}

  /// Number of snapshot evaluations so far (memoization diagnostics).
  std::size_t evaluations() const;

private:
  std::vector<era::InstanceId> adaptable(const std::string & type) const;

  const era::Store & store_;
  mutable std::mutex mutex_;
  mutable std::shared_ptr<const StatusSnapshot> cache_;
  mutable std::size_t evaluations_{0};
};

}  // namespace rosa::inference

#endif  // ROSA__INFERENCE__REASONER_HPP_
