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

#include "rosa/era/store.hpp"

#include <algorithm>

namespace rosa::era
{

namespace
{

const std::vector<InstanceId> kNoFillers;

bool kind_matches(ValueKind expected, const Value & v)
{
  if (v.kind() == expected) {
    return true;
  }
  // integers are accepted where doubles are expected
  return expected == ValueKind::Double && v.kind() == ValueKind::Integer;
}

Value coerce(ValueKind expected, Value v)
{
  if (expected == ValueKind::Double && v.is_integer()) {
    return Value(v.as_double());
  }
  return v;
}

}  // namespace

const Value * Instance::get(const std::string & attr) const
{
  auto it = attributes.find(attr);
  return it == attributes.end() ? nullptr : &it->second;
}

const std::vector<InstanceId> & Instance::fillers(const std::string & role) const
{
  auto it = role_fillers.find(role);
  return it == role_fillers.end() ? kNoFillers : it->second;
}

Store::Store(SchemaHandle schema)
{
  define_schema(std::move(schema));
}

void Store::define_schema(SchemaDef defs)
{
  define_schema(Schema::define(std::move(defs)));
}

void Store::define_schema(SchemaHandle schema)
{
  if (schema_) {
    throw StoreError("schema already defined; redefinition is not supported");
  }
  if (!schema) {
    throw StoreError("null schema");
  }
  schema_ = std::move(schema);
}

const Schema & Store::schema() const
{
  require_schema();
  return *schema_;
}

void Store::require_schema() const
{
  if (!schema_) {
    throw StoreError("store has no schema");
  }
}

void Store::check_fillers(const std::string & type_name, const RoleFillers & fillers) const
{
  const bool relation = schema_->is_relation(type_name);
  if (!relation) {
    if (!fillers.empty()) {
      throw StoreError("entity type '" + type_name + "' cannot have role fillers");
    }
    return;
  }
  std::size_t count = 0;
  for (const auto & [role_name, ids] : fillers) {
    const RoleDef * role = schema_->role(type_name, role_name);
    if (!role) {
      throw StoreError("unknown role '" + role_name + "' for relation '" + type_name + "'");
    }
    for (InstanceId id : ids) {
      const Instance * player = find(id);
      if (!player) {
        throw StoreError(
                "role '" + role_name + "' of '" + type_name + "' references missing instance " +
                std::to_string(id.value));
      }
      bool allowed = std::any_of(
        role->players.begin(), role->players.end(),
        [&](const std::string & p) {return schema_->is_subtype_of(player->type_name, p);});
      if (!allowed) {
        throw StoreError(
                "type '" + player->type_name + "' cannot play role '" + role_name + "' in '" +
                type_name + "'");
      }
      ++count;
    }
  }
  if (count == 0 && !schema_->allows_empty(type_name)) {
    throw StoreError("relation '" + type_name + "' needs at least one role filler");
  }
}

InstanceId Store::insert(
  const std::string & type_name, AttributeMap attributes,
  RoleFillers role_fillers)
{
  require_schema();
  if (!schema_->has_type(type_name)) {
    throw StoreError("unknown type '" + type_name + "'");
  }
  if (schema_->type(type_name).kind == TypeKind::Entity && !role_fillers.empty()) {
    throw StoreError("entity type '" + type_name + "' cannot have role fillers");
  }
  for (auto & [name, value] : attributes) {
    const AttributeDef * def = schema_->attribute(type_name, name);
    if (!def) {
      throw StoreError("type '" + type_name + "' has no attribute '" + name + "'");
    }
    if (!kind_matches(def->kind, value)) {
      throw StoreError(
              "attribute '" + name + "' of '" + type_name + "' expects " +
              std::string(to_string(def->kind)));
    }
    value = coerce(def->kind, value);
  }
  const AttributeDef * key = schema_->key_attribute(type_name);
  const Value * key_value = nullptr;
  if (key) {
    auto it = attributes.find(key->name);
    if (it == attributes.end()) {
      throw StoreError("missing key attribute '" + key->name + "' for '" + type_name + "'");
    }
    key_value = &it->second;
    const auto & index = by_key_[schema_->key_scope(type_name)];
    if (index.count(*key_value)) {
      throw StoreError(
              "key collision: " + schema_->key_scope(type_name) + " with " + key->name + " '" +
              key_value->to_string() + "' already exists");
    }
  }
  for (auto & [role, ids] : role_fillers) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  }
  check_fillers(type_name, role_fillers);

  InstanceId id{next_id_++};
  if (key_value) {
    by_key_[schema_->key_scope(type_name)].emplace(*key_value, id);
  }
  for (const auto & [role, ids] : role_fillers) {
    for (InstanceId filler : ids) {
      referenced_by_[filler].insert(id);
    }
  }
  by_type_[type_name].insert(id);
  instances_.emplace(id, Instance{id, type_name, std::move(attributes), std::move(role_fillers)});
  ++epoch_;
  return id;
}

Instance & Store::get_mut(InstanceId id)
{
  auto it = instances_.find(id);
  if (it == instances_.end()) {
    throw StoreError("unknown instance " + std::to_string(id.value));
  }
  return it->second;
}

void Store::set_attribute(InstanceId id, const std::string & attr, Value value)
{
  require_schema();
  Instance & inst = get_mut(id);
  const AttributeDef * def = schema_->attribute(inst.type_name, attr);
  if (!def) {
    throw StoreError("type '" + inst.type_name + "' has no attribute '" + attr + "'");
  }
  if (def->is_key) {
    throw StoreError("key attribute '" + attr + "' is immutable");
  }
  if (!kind_matches(def->kind, value)) {
    throw StoreError("attribute '" + attr + "' expects " + std::string(to_string(def->kind)));
  }
  inst.attributes[attr] = coerce(def->kind, std::move(value));
  ++epoch_;
}

bool Store::delete_attribute(InstanceId id, const std::string & attr, const Value & value)
{
  require_schema();
  Instance & inst = get_mut(id);
  const AttributeDef * def = schema_->attribute(inst.type_name, attr);
  if (!def) {
    throw StoreError("type '" + inst.type_name + "' has no attribute '" + attr + "'");
  }
  if (def->is_key) {
    throw StoreError("key attribute '" + attr + "' is immutable");
  }
  auto it = inst.attributes.find(attr);
  if (it == inst.attributes.end() || !(it->second == coerce(def->kind, value))) {
    return false;
  }
  inst.attributes.erase(it);
  ++epoch_;
  return true;
}

void Store::erase(InstanceId id)
{
  Instance & inst = get_mut(id);
  auto refs = referenced_by_.find(id);
  if (refs != referenced_by_.end() && !refs->second.empty()) {
    throw StoreError(
            "instance " + std::to_string(id.value) + " is still referenced by " +
            std::to_string(refs->second.size()) + " relation(s)");
  }
  for (const auto & [role, ids] : inst.role_fillers) {
    for (InstanceId filler : ids) {
      referenced_by_[filler].erase(id);
    }
  }
  if (const AttributeDef * key = schema_->key_attribute(inst.type_name)) {
    if (const Value * v = inst.get(key->name)) {
      by_key_[schema_->key_scope(inst.type_name)].erase(*v);
    }
  }
  by_type_[inst.type_name].erase(id);
  referenced_by_.erase(id);
  instances_.erase(id);
  ++epoch_;
}

bool Store::contains(InstanceId id) const
{
  return instances_.count(id) > 0;
}

const Instance & Store::get(InstanceId id) const
{
  auto it = instances_.find(id);
  if (it == instances_.end()) {
    throw StoreError("unknown instance " + std::to_string(id.value));
  }
  return it->second;
}

const Instance * Store::find(InstanceId id) const
{
  auto it = instances_.find(id);
  return it == instances_.end() ? nullptr : &it->second;
}

std::optional<InstanceId> Store::find_by_key(const std::string & type_name, const Value & key) const
{
  require_schema();
  if (!schema_->has_type(type_name) || !schema_->key_attribute(type_name)) {
    return std::nullopt;
  }
  auto scope = by_key_.find(schema_->key_scope(type_name));
  if (scope == by_key_.end()) {
    return std::nullopt;
  }
  auto it = scope->second.find(key);
  if (it == scope->second.end()) {
    return std::nullopt;
  }
  if (!schema_->is_subtype_of(get(it->second).type_name, type_name)) {
    return std::nullopt;
  }
  return it->second;
}

std::vector<InstanceId> Store::instances_of(const std::string & type_name) const
{
  require_schema();
  std::vector<InstanceId> out;
  for (const auto & [name, ids] : by_type_) {
    if (schema_->is_subtype_of(name, type_name)) {
      out.insert(out.end(), ids.begin(), ids.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<InstanceId> Store::relations_of(InstanceId id) const
{
  auto it = referenced_by_.find(id);
  if (it == referenced_by_.end()) {
    return {};
  }
  return {it->second.begin(), it->second.end()};
}

std::vector<InstanceId> Store::relations_where(
  const std::string & relation_type, const std::string & role, InstanceId id) const
{
  std::vector<InstanceId> out;
  for (InstanceId rel : relations_of(id)) {
    const Instance & r = get(rel);
    if (!schema_->is_subtype_of(r.type_name, relation_type)) {
      continue;
    }
    const auto & f = r.fillers(role);
    if (std::binary_search(f.begin(), f.end(), id)) {
      out.push_back(rel);
    }
  }
  return out;
}

std::vector<InstanceId> Store::all() const
{
  std::vector<InstanceId> out;
  out.reserve(instances_.size());
  for (const auto & [id, _] : instances_) {
    out.push_back(id);
  }
  return out;
}

}  // namespace rosa::era
