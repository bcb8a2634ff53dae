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

#include "rosa/model/rosa_schema.hpp"

namespace rosa::model
{

namespace
{

using era::AttributeDef;
using era::RoleDef;
using era::TypeDef;
using era::TypeKind;
using era::ValueKind;

AttributeDef key_name() {return {attr::kName, ValueKind::String, true};}
AttributeDef str(const std::string & n) {return {n, ValueKind::String, false};}
AttributeDef dbl(const std::string & n) {return {n, ValueKind::Double, false};}
AttributeDef integer(const std::string & n) {return {n, ValueKind::Integer, false};}
AttributeDef boolean(const std::string & n) {return {n, ValueKind::Boolean, false};}
AttributeDef datetime(const std::string & n) {return {n, ValueKind::Datetime, false};}

era::SchemaDef build()
{
  era::SchemaDef defs;
  auto entity = [&](const std::string & name, std::vector<AttributeDef> attrs,
      std::optional<std::string> parent = std::nullopt) {
      TypeDef t;
      t.name = name;
      t.kind = TypeKind::Entity;
      t.parent = std::move(parent);
      t.attributes = std::move(attrs);
      defs.types.push_back(std::move(t));
    };
  auto relation = [&](const std::string & name, std::vector<RoleDef> roles,
      std::vector<AttributeDef> attrs, bool allow_empty = false) {
      TypeDef t;
      t.name = name;
      t.kind = TypeKind::Relation;
      t.roles = std::move(roles);
      t.attributes = std::move(attrs);
      t.allow_empty = allow_empty;
      defs.types.push_back(std::move(t));
    };

  entity(kAction, {key_name(), str(attr::kStatus), boolean(attr::kIsRequired)});
  entity(
    kFunction,
    {key_name(), boolean(attr::kAlwaysImprove), str(attr::kStatus), boolean(attr::kIsRequired)});
  entity(
    kComponent,
    {key_name(), boolean(attr::kAlwaysImprove), str(attr::kStatus), boolean(attr::kIsRequired),
      boolean(attr::kIsActive), integer(attr::kPid), str(attr::kPackage),
      str(attr::kExecutable), boolean(attr::kLifecycle)});
  entity(kComponentParameter, {str(attr::kKey), str(attr::kValue)});
  entity(kMeasure, {key_name()});
  entity(kQualityAttribute, {}, kMeasure);
  entity(kEnvironmentalAttribute, {}, kMeasure);

  relation(
    kFunctionalRequirement,
    {{role::kAction, {kAction}}, {role::kRequiredFunction, {kFunction}}}, {});
  relation(
    kFunctionDesign,
    {{role::kFunction, {kFunction}}, {role::kRequiredComponent, {kComponent}}},
    {key_name(), integer(attr::kPriority), str(attr::kStatus), boolean(attr::kIsSelected)});
  relation(
    kComponentConfiguration,
    {{role::kComponent, {kComponent}}, {role::kParameter, {kComponentParameter}}},
    {key_name(), integer(attr::kPriority), str(attr::kStatus), boolean(attr::kIsSelected)});
  relation(
    kMeasurement, {{role::kMeasure, {kMeasure}}},
    {dbl(attr::kValue), datetime(attr::kTime)});
  relation(
    kConstraint,
    {{role::kMeasure, {kMeasure}},
      {role::kConstrained, {kAction, kComponent, kFunctionDesign, kComponentConfiguration}}},
    {str(attr::kOperator), dbl(attr::kValue), str(attr::kStatus)});
  relation(
    kEstimation,
    {{role::kMeasure, {kMeasure}},
      {role::kEstimated, {kFunctionDesign, kComponent, kComponentConfiguration}}},
    {dbl(attr::kValue), str(attr::kType)});
  relation(
    kRequiredAction,
    {{role::kAction, {kAction}}, {role::kPreferredMeasure, {kMeasure}}},
    {datetime(attr::kStartTime), datetime(attr::kEndTime), str(attr::kResult)});
  relation(
    kReconfigurationPlan,
    {{role::kComponentActivation, {kComponent}},
      {role::kComponentDeactivation, {kComponent}},
      {role::kParameterAdaptation, {kComponentConfiguration}}},
    {datetime(attr::kStartTime), datetime(attr::kEndTime), str(attr::kResult)},
    true);
  return defs;
}

}  // namespace

era::SchemaHandle rosa_schema()
{
  static const era::SchemaHandle schema = era::Schema::define(build());
  return schema;
}

bool is_design_time_relation(const std::string & type_name)
{
  return type_name == kFunctionalRequirement || type_name == kFunctionDesign ||
         type_name == kComponentConfiguration || type_name == kConstraint ||
         type_name == kEstimation;
}

std::optional<era::InstanceId> find_named(
  const era::Store & store, const std::string & type_name, const std::string & name)
{
  return store.find_by_key(type_name, era::Value(name));
}

era::InstanceId require_named(
  const era::Store & store, const std::string & type_name, const std::string & name)
{
  auto id = find_named(store, type_name, name);
  if (!id) {
    throw era::StoreError("no " + type_name + " named '" + name + "'");
  }
  return *id;
}

std::string name_of(const era::Store & store, era::InstanceId id)
{
  const auto * v = store.get(id).get(attr::kName);
  if (v == nullptr) {
    return "#" + std::to_string(id.value);
  }
  return v->as_string();
}

std::vector<std::string> names_of(const era::Store & store, const std::vector<era::InstanceId> & ids)
{
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (auto id : ids) {
    out.push_back(name_of(store, id));
  }
  return out;
}

bool flag(const era::Store & store, era::InstanceId id, const std::string & attr)
{
  const auto * v = store.get(id).get(attr);
  return v != nullptr && v->is_boolean() && v->as_boolean();
}

}  // namespace rosa::model
