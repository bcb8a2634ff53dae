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

#ifndef ROSA__MODEL__ELEMENT_COUNT_HPP_
#define ROSA__MODEL__ELEMENT_COUNT_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "rosa/era/store.hpp"
#include "rosa/model/scenario.hpp"

namespace rosa::model
{

struct ElementCount
{
  std::int64_t entities{0};
  std::int64_t relations{0};
  std::int64_t total() const {return entities + relations;}
  bool operator==(const ElementCount &) const = default;
};

/// Counts design-time model elements. Runtime relations (measurements,
/// required actions, reconfiguration plans) are not part of the model.
ElementCount count_elements(const era::Store & store);

/// Adaptation options added on top of the minimal per-action model: each
/// structural adaptation is an extra single-component function design, each
/// parameter adaptation an extra configuration of the base component.
struct ActionAdaptations
{
  int structural{0};
  int parameter{0};
};

/// Minimal model for `n_actions` actions following the per-action layout:
/// one function, one design with one component, one configuration with one
/// parameter, one quality attribute and a constraint plus priority on every
/// design and configuration. `per_action` must have n_actions entries.
ScenarioDocument generate_hypothetical(
  int n_actions, const std::vector<ActionAdaptations> & per_action);

/// Same adaptation counts for every action.
ScenarioDocument generate_hypothetical(int n_actions, int n_structural, int n_parameter);

/// Closed-form element count of one generated action.
std::int64_t hypothetical_elements_per_action(int n_structural, int n_parameter);

}  // namespace rosa::model

#endif  // ROSA__MODEL__ELEMENT_COUNT_HPP_
