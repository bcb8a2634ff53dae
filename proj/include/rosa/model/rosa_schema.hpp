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

#ifndef ROSA__MODEL__ROSA_SCHEMA_HPP_
#define ROSA__MODEL__ROSA_SCHEMA_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rosa/era/schema.hpp"
#include "rosa/era/store.hpp"

namespace rosa::model
{

// Entity types
inline const std::string kAction = "Action";
inline const std::string kFunction = "Function";
inline const std::string kComponent = "Component";
inline const std::string kComponentParameter = "ComponentParameter";
inline const std::string kMeasure = "Measure";
inline const std::string kQualityAttribute = "QualityAttribute";
inline const std::string kEnvironmentalAttribute = "EnvironmentalAttribute";

// Relation types
inline const std::string kFunctionalRequirement = "functional-requirement";
inline const std::string kFunctionDesign = "function-design";
inline const std::string kComponentConfiguration = "component-configuration";
inline const std::string kMeasurement = "measurement";
inline const std::string kConstraint = "constraint";
inline const std::string kEstimation = "estimation";
inline const std::string kRequiredAction = "required-action";
inline const std::string kReconfigurationPlan = "reconfiguration-plan";

// Roles
namespace role
{
inline const std::string kAction = "action";
inline const std::string kRequiredFunction = "required-function";
inline const std::string kFunction = "function";
inline const std::string kRequiredComponent = "required-component";
inline const std::string kComponent = "component";
inline const std::string kParameter = "parameter";
inline const std::string kMeasure = "measure";
inline const std::string kConstrained = "constrained";
inline const std::string kEstimated = "estimated";
inline const std::string kPreferredMeasure = "preferred-measure";
inline const std::string kComponentActivation = "component-activation";
inline const std::string kComponentDeactivation = "component-deactivation";
inline const std::string kParameterAdaptation = "parameter-adaptation";
}  // namespace role

// Attributes
namespace attr
{
inline const std::string kName = "name";
inline const std::string kStatus = "status";
inline const std::string kIsRequired = "is-required";
inline const std::string kAlwaysImprove = "always-improve";
inline const std::string kIsActive = "is-active";
inline const std::string kPid = "pid";
inline const std::string kPackage = "package";
inline const std::string kExecutable = "executable";
inline const std::string kLifecycle = "lifecycle-managed";
inline const std::string kKey = "key";
inline const std::string kValue = "value";
inline const std::string kPriority = "priority";
inline const std::string kIsSelected = "is-selected";
inline const std::string kOperator = "operator";
inline const std::string kStartTime = "start-time";
inline const std::string kEndTime = "end-time";
inline const std::string kResult = "result";
inline const std::string kTime = "time";
inline const std::string kType = "type";
}  // namespace attr

/// The knowledge model: architectural, adaptation heuristic and
/// reconfiguration plan knowledge as one ERA schema.
era::SchemaHandle rosa_schema();

/// Relation types instantiated at design time (counted as model elements).
bool is_design_time_relation(const std::string & type_name);

/// Named element lookup (`name` key) within `type_name` and its subtypes.
std::optional<era::InstanceId> find_named(
  const era::Store & store, const std::string & type_name, const std::string & name);

/// Like find_named() but throws era::StoreError when absent.
era::InstanceId require_named(
  const era::Store & store, const std::string & type_name, const std::string & name);

/// The `name` attribute of an instance, or "#<id>" for unnamed instances.
std::string name_of(const era::Store & store, era::InstanceId id);
std::vector<std::string> names_of(const era::Store & store, const std::vector<era::InstanceId> & ids);

/// Boolean attribute read with absent = false.
bool flag(const era::Store & store, era::InstanceId id, const std::string & attr);

}  // namespace rosa::model

#endif  // ROSA__MODEL__ROSA_SCHEMA_HPP_
