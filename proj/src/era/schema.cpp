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

#include "rosa/era/schema.hpp"

#include <algorithm>

namespace rosa::era
{

std::shared_ptr<const Schema> Schema::define(SchemaDef defs)
{
  std::shared_ptr<Schema> schema(new Schema());
  std::map<std::string, const TypeDef *> by_name;
  for (const auto & t : defs.types) {
    if (t.name.empty()) {
      throw SchemaError("type with empty name");
    }
    if (!by_name.emplace(t.name, &t).second) {
      throw SchemaError("duplicate type name '" + t.name + "'");
    }
    if (t.kind == TypeKind::Entity && !t.roles.empty()) {
      throw SchemaError("entity type '" + t.name + "' cannot define roles");
    }
  }

  // parents must exist, share the kind and form no cycle
  for (const auto & t : defs.types) {
    std::set<std::string> seen{t.name};
    const TypeDef * cur = &t;
    while (cur->parent) {
      auto it = by_name.find(*cur->parent);
      if (it == by_name.end()) {
        throw SchemaError("type '" + cur->name + "' has unknown parent '" + *cur->parent + "'");
      }
      if (it->second->kind != t.kind) {
        throw SchemaError("type '" + t.name + "' and its parent differ in kind");
      }
      if (!seen.insert(it->second->name).second) {
        throw SchemaError("inheritance cycle through '" + t.name + "'");
      }
      cur = it->second;
    }
  }

  for (const auto & t : defs.types) {
    Resolved r;
    r.def = t;
    // chain from root to t
    std::vector<const TypeDef *> chain;
    for (const TypeDef * cur = &t; cur != nullptr; ) {
      chain.push_back(cur);
      cur = cur->parent ? by_name.at(*cur->parent) : nullptr;
    }
    std::reverse(chain.begin(), chain.end());
    for (const TypeDef * level : chain) {
      for (const auto & a : level->attributes) {
        auto dup = std::find_if(
          r.attributes.begin(), r.attributes.end(),
          [&](const AttributeDef & x) {return x.name == a.name;});
        if (dup != r.attributes.end()) {
          throw SchemaError("attribute '" + a.name + "' defined twice for type '" + t.name + "'");
        }
        if (a.is_key) {
          if (r.key) {
            throw SchemaError("type '" + t.name + "' has more than one key attribute");
          }
          r.key = a;
          r.key_scope = level->name;
        }
        r.attributes.push_back(a);
      }
      for (const auto & role : level->roles) {
        if (role.players.empty()) {
          throw SchemaError(
                  "role '" + role.name + "' of '" + level->name + "' has no allowed players");
        }
        for (const auto & p : role.players) {
          if (!by_name.count(p)) {
            throw SchemaError("role '" + role.name + "' references unknown type '" + p + "'");
          }
        }
        auto dup = std::find_if(
          r.roles.begin(), r.roles.end(),
          [&](const RoleDef & x) {return x.name == role.name;});
        if (dup != r.roles.end()) {
          throw SchemaError("role '" + role.name + "' defined twice for type '" + t.name + "'");
        }
        r.roles.push_back(role);
      }
    }
    schema->types_.emplace(t.name, std::move(r));
  }
  return schema;
}

bool Schema::has_type(const std::string & name) const
{
  return types_.count(name) > 0;
}

const TypeDef & Schema::type(const std::string & name) const
{
  auto it = types_.find(name);
  if (it == types_.end()) {
    throw SchemaError("unknown type '" + name + "'");
  }
  return it->second.def;
}

std::vector<std::string> Schema::type_names() const
{
  std::vector<std::string> out;
  for (const auto & [name, _] : types_) {
    out.push_back(name);
  }
  return out;
}

bool Schema::is_relation(const std::string & type_name) const
{
  return type(type_name).kind == TypeKind::Relation;
}

bool Schema::is_subtype_of(const std::string & type_name, const std::string & ancestor) const
{
  auto it = types_.find(type_name);
  while (it != types_.end()) {
    if (it->first == ancestor) {
      return true;
    }
    if (!it->second.def.parent) {
      return false;
    }
    it = types_.find(*it->second.def.parent);
  }
  return false;
}

const AttributeDef * Schema::attribute(const std::string & type_name, const std::string & attr) const
{
  for (const auto & a : attributes(type_name)) {
    if (a.name == attr) {
      return &a;
    }
  }
  return nullptr;
}

const std::vector<AttributeDef> & Schema::attributes(const std::string & type_name) const
{
  auto it = types_.find(type_name);
  if (it == types_.end()) {
    throw SchemaError("unknown type '" + type_name + "'");
  }
  return it->second.attributes;
}

const RoleDef * Schema::role(const std::string & type_name, const std::string & role_name) const
{
  for (const auto & r : roles(type_name)) {
    if (r.name == role_name) {
      return &r;
    }
  }
  return nullptr;
}

const std::vector<RoleDef> & Schema::roles(const std::string & type_name) const
{
  auto it = types_.find(type_name);
  if (it == types_.end()) {
    throw SchemaError("unknown type '" + type_name + "'");
  }
  return it->second.roles;
}

const AttributeDef * Schema::key_attribute(const std::string & type_name) const
{
  auto it = types_.find(type_name);
  if (it == types_.end() || !it->second.key) {
    return nullptr;
  }
  return &*it->second.key;
}

const std::string & Schema::key_scope(const std::string & type_name) const
{
  auto it = types_.find(type_name);
  if (it == types_.end()) {
    throw SchemaError("unknown type '" + type_name + "'");
  }
  return it->second.key_scope;
}

bool Schema::allows_empty(const std::string & type_name) const
{
  return type(type_name).allow_empty;
}

}  // namespace rosa::era
