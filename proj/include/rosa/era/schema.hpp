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

#ifndef ROSA__ERA__SCHEMA_HPP_
#define ROSA__ERA__SCHEMA_HPP_

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rosa/era/value.hpp"

namespace rosa::era
{

class SchemaError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct AttributeDef
{
  std::string name;
  ValueKind kind{ValueKind::String};
  bool is_key{false};
};

/// A role of a relation type. Players may be entity types or relation types;
/// subtypes of an allowed player are accepted as well.
struct RoleDef
{
  std::string name;
  std::set<std::string> players;
};

enum class TypeKind { Entity, Relation };

struct TypeDef
{
  std::string name;
  TypeKind kind{TypeKind::Entity};
  std::optional<std::string> parent;
  std::vector<AttributeDef> attributes;
  std::vector<RoleDef> roles;  // relations only
  // Relations normally need at least one filler. Runtime records such as an
  // empty reconfiguration plan opt out.
  bool allow_empty{false};
};

/// Input to Schema::define. Types may be listed in any order.
struct SchemaDef
{
  std::vector<TypeDef> types;
};

/// Validated, immutable type system. Inherited attributes and roles are
/// resolved at definition time.
class Schema
{
public:
  /// Validates `defs` and builds the schema. Throws SchemaError on duplicate
  /// type names, unknown parents or role players, empty player sets, repeated
  /// attribute names or more than one key attribute in a type hierarchy.
  static std::shared_ptr<const Schema> define(SchemaDef defs);

  bool has_type(const std::string & name) const;
  const TypeDef & type(const std::string & name) const;
  std::vector<std::string> type_names() const;

  bool is_relation(const std::string & type_name) const;

  /// True if `type_name` equals `ancestor` or inherits from it.
  bool is_subtype_of(const std::string & type_name, const std::string & ancestor) const;

  /// Attribute lookup including inherited definitions.
  const AttributeDef * attribute(const std::string & type_name, const std::string & attr) const;
  const std::vector<AttributeDef> & attributes(const std::string & type_name) const;

  /// Role lookup including inherited roles.
  const RoleDef * role(const std::string & type_name, const std::string & role_name) const;
  const std::vector<RoleDef> & roles(const std::string & type_name) const;

  /// Key attribute of the hierarchy (if any) and the type that declares it.
  /// Key uniqueness is enforced across the declaring type and its subtypes.
  const AttributeDef * key_attribute(const std::string & type_name) const;
  const std::string & key_scope(const std::string & type_name) const;

  bool allows_empty(const std::string & type_name) const;

private:
  Schema() = default;

  struct Resolved
  {
    TypeDef def;
    std::vector<AttributeDef> attributes;
    std::vector<RoleDef> roles;
    std::optional<AttributeDef> key;
    std::string key_scope;
  };

  std::map<std::string, Resolved> types_;
};

using SchemaHandle = std::shared_ptr<const Schema>;

}  // namespace rosa::era

#endif  // ROSA__ERA__SCHEMA_HPP_
