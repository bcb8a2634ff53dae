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

#ifndef ROSA__INFERENCE__STATUS_HPP_
#define ROSA__INFERENCE__STATUS_HPP_

#include <optional>
#include <string>

namespace rosa::inference
{

namespace status
{
inline const std::string kFeasible = "feasible";
inline const std::string kUnfeasible = "unfeasible";
inline const std::string kFailure = "failure";
inline const std::string kConfigurationError = "configuration error";
inline const std::string kUnsolved = "unsolved";
inline const std::string kSolved = "solved";
inline const std::string kSatisfied = "satisfied";
inline const std::string kViolated = "violated";
}  // namespace status

/// Absolute tolerance of the "==" constraint operator.
inline constexpr double kEqualityTolerance = 1e-9;

bool is_known_operator(const std::string & op);

/// `measured op threshold`. Throws std::invalid_argument on unknown operator.
bool evaluate_operator(const std::string & op, double measured, double threshold);

// The six status rules on pre-digested facts. The reasoner gathers the facts
// from the store stratum by stratum; tests drive the rules directly.

/// No measurement yet counts as satisfied.
const std::string & constraint_status(
  const std::string & op, double threshold, std::optional<double> latest);

const std::string & configuration_status(bool any_constraint_violated);

struct ComponentFacts
{
  bool failure_flag{false};  // monitor-set "failure"
  bool constraint_violated{false};
  bool required{false};
  bool has_configurations{false};
  bool has_selected_configuration{false};
  bool selected_configuration_unfeasible{false};
};

const std::string & component_status(const ComponentFacts & facts);

const std::string & function_design_status(
  bool constraint_violated, bool any_component_failed_or_unfeasible);

struct FunctionFacts
{
  bool required{false};
  int designs{0};
  int unfeasible_designs{0};
  bool has_selected_design{false};
  bool selected_design_unfeasible{false};
};

const std::string & function_status(const FunctionFacts & facts);

const std::string & action_status(bool constraint_violated, bool any_function_unfeasible);

}  // namespace rosa::inference

#endif  // ROSA__INFERENCE__STATUS_HPP_
