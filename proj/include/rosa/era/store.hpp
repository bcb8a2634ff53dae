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

#ifndef ROSA__ERA__STORE_HPP_
#define ROSA__ERA__STORE_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rosa/era/pattern.hpp"
#include "rosa/era/schema.hpp"
#include "rosa/era/value.hpp"

namespace rosa::era
{

/// Opaque instance identifier. Ids are allocated in increasing order, so
/// sorting by id is sorting by insertion order.
struct InstanceId
{
  std::uint64_t value{0};
  auto operator<=>(const InstanceId &) const = default;
};

class StoreError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

using AttributeMap = std::map<std::string, Value>;
using RoleFillers = std::map<std::string, std::vector<InstanceId>>;

struct Instance
{
  InstanceId id;
  std::string type_name;
  AttributeMap attributes;
  RoleFillers role_fillers;  // relations only; each list sorted, no repeats

  const Value * get(const std::string & attr) const;
  const std::vector<InstanceId> & fillers(const std::string & role) const;
};

using Binding = std::map<std::string, InstanceId>;

/// Supplies computed attributes (for example inferred statuses) to match().
/// Returning nullopt falls back to the stored attribute.
using DerivedAttributes =
  std::function<std::optional<Value>(const Instance &, const std::string & attr)>;

/// Typed entity-relation-attribute store.
///
/// Single writer: callers serialize mutations. Every successful mutation
/// bumps epoch(), which readers use to key caches. Iteration is always in
/// id order.
class Store
{
public:
  Store() = default;
  explicit Store(SchemaHandle schema);

  /// Installs the schema. A store accepts exactly one schema definition.
  void define_schema(SchemaDef defs);
  void define_schema(SchemaHandle schema);
  bool has_schema() const {return schema_ != nullptr;}
  const Schema & schema() const;
  SchemaHandle schema_handle() const {return schema_;}

  /// Inserts an entity or relation. Fillers must already exist and match the
  /// role's allowed players. Throws StoreError on unknown type, key collision,
  /// unknown role, player type violation or a relation without fillers.
  InstanceId insert(
    const std::string & type_name, AttributeMap attributes = {},
    RoleFillers role_fillers = {});

  /// Replace-on-write. Key attributes are immutable once set.
  void set_attribute(InstanceId id, const std::string & attr, Value value);

  /// Removes the attribute if it currently holds `value`. Returns whether
  /// anything was removed.
  bool delete_attribute(InstanceId id, const std::string & attr, const Value & value);

  /// Removes an instance. Rejected while any relation still references it.
  void erase(InstanceId id);

  bool contains(InstanceId id) const;
  const Instance & get(InstanceId id) const;
  const Instance * find(InstanceId id) const;

  /// Key lookup in the hierarchy that declares the key of `type_name`.
  std::optional<InstanceId> find_by_key(const std::string & type_name, const Value & key) const;

  /// All instances of a type including subtypes, in id order.
  std::vector<InstanceId> instances_of(const std::string & type_name) const;

  /// Relations in which `id` fills some role, in id order.
  std::vector<InstanceId> relations_of(InstanceId id) const;

  /// Relations of `relation_type` (subtypes included) where `id` fills `role`.
  std::vector<InstanceId> relations_where(
    const std::string & relation_type, const std::string & role, InstanceId id) const;

  /// All instances in id order.
  std::vector<InstanceId> all() const;
  std::size_t size() const {return instances_.size();}

  std::uint64_t epoch() const {return epoch_;}

  /// Conjunctive pattern match. Results are ordered lexicographically by the
  /// ids bound to the pattern's clauses in clause order. Throws StoreError for
  /// variables used before being bound.
  std::vector<Binding> match(const Pattern & pattern, const DerivedAttributes & derived = {}) const;

private:
  void require_schema() const;
  Instance & get_mut(InstanceId id);
  void check_fillers(const std::string & type_name, const RoleFillers & fillers) const;
  std::string key_index_name(const std::string & type_name) const;

  SchemaHandle schema_;
  std::map<InstanceId, Instance> instances_;
  std::map<std::string, std::set<InstanceId>> by_type_;  // exact type
  std::map<std::string, std::map<Value, InstanceId>> by_key_;  // key scope -> key -> id
  std::map<InstanceId, std::set<InstanceId>> referenced_by_;
  std::uint64_t next_id_{1};
  std::uint64_t epoch_{0};
};

}  // namespace rosa::era

#endif  // ROSA__ERA__STORE_HPP_
