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

#include "rosa/inference/status.hpp"

#include <cmath>
#include <stdexcept>

namespace rosa::inference
{

bool is_known_operator(const std::string & op)
{
  return op == ">" || op == ">=" || op == "<" || op == "<=" || op == "==";
}

bool evaluate_operator(const std::string & op, double measured, double threshold)
{
  if (op == ">") {return measured > threshold;}
  if (op == ">=") {return measured >= threshold;}
  if (op == "<") {return measured < threshold;}
  if (op == "<=") {return measured <= threshold;}
  if (op == "==") {return std::fabs(measured - threshold) <= kEqualityTolerance;}
  throw std::invalid_argument("unknown constraint operator '" + op + "'");
}

const std::string & constraint_status(
  const std::string & op, double threshold, std::optional<double> latest)
{
  if (!latest) {
    return status::kSatisfied;
  }
  return evaluate_operator(op, *latest, threshold) ? status::kSatisfied : status::kViolated;
}

const std::string & configuration_status(bool any_constraint_violated)
{
  return any_constraint_violated ? status::kUnfeasible : status::kFeasible;
}

const std::string & component_status(const ComponentFacts & f)
{
  if (f.failure_flag) {
    return status::kFailure;
  }
  if (f.constraint_violated) {
    return status::kUnfeasible;
  }
  if (f.required && f.has_selected_configuration && f.selected_configuration_unfeasible) {
    return status::kConfigurationError;
  }
  if (f.required && f.has_configurations && !f.has_selected_configuration) {
    return status::kUnsolved;
  }
  return status::kFeasible;
}

const std::string & function_design_status(
  bool constraint_violated, bool any_component_failed_or_unfeasible)
{
  return constraint_violated || any_component_failed_or_unfeasible ?
         status::kUnfeasible : status::kFeasible;
}

const std::string & function_status(const FunctionFacts & f)
{
  // Exhaustion is reported whether or not the function is currently required:
  // the task layer needs it to rule out actions before requesting them.
  if (f.designs > 0 && f.unfeasible_designs == f.designs) {
    return status::kUnfeasible;
  }
  if (!f.required) {
    return status::kSolved;
  }
  if (f.has_selected_design && f.selected_design_unfeasible) {
    return status::kConfigurationError;
  }
  if (!f.has_selected_design) {
    return status::kUnsolved;
  }
  return status::kSolved;
}

const std::string & action_status(bool constraint_violated, bool any_function_unfeasible)
{
  return constraint_violated || any_function_unfeasible ? status::kUnfeasible : status::kFeasible;
}

}  // namespace rosa::inference
