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

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "oracles/match_oracle.hpp"
#include "rosa/era/store.hpp"

namespace
{

using namespace rosa::era;  // NOLINT

SchemaDef workshop_schema()
{
  SchemaDef defs;
  defs.types.push_back({"Thing", TypeKind::Entity, std::nullopt,
      {{"name", ValueKind::String, true}, {"weight", ValueKind::Double, false},
        {"tag", ValueKind::String, false}}, {}});
  defs.types.push_back({"Tool", TypeKind::Entity, "Thing", {{"sharp", ValueKind::Boolean, false}},
      {}});
  defs.types.push_back({"Place", TypeKind::Entity, std::nullopt,
      {{"label", ValueKind::String, true}}, {}});
  // n-ary, many-to-many, with its own attributes
  defs.types.push_back({"uses", TypeKind::Relation, std::nullopt,
      {{"since", ValueKind::Datetime, false}, {"hours", ValueKind::Integer, false}},
      {{"user", {"Thing"}}, {"tool", {"Tool"}}, {"where", {"Place"}}}});
  // higher-order: relates a relation
  defs.types.push_back({"audit", TypeKind::Relation, std::nullopt,
      {{"ok", ValueKind::Boolean, false}}, {{"subject", {"uses"}}}});
  TypeDef log{"log", TypeKind::Relation, std::nullopt, {}, {{"entry", {"Thing"}}}};
  log.allow_empty = true;
  defs.types.push_back(log);
  return defs;
}

class EraTest : public ::testing::Test
{
protected:
  EraTest() {store.define_schema(workshop_schema());}
  Store store;
};

TEST(ValueTest, KindsAndConversions)
{
  EXPECT_EQ(Value(1).kind(), ValueKind::Integer);
  EXPECT_EQ(Value(1.5).kind(), ValueKind::Double);
  EXPECT_EQ(Value("x").kind(), ValueKind::String);
  EXPECT_EQ(Value(true).kind(), ValueKind::Boolean);
  EXPECT_EQ(Value(Datetime{4}).kind(), ValueKind::Datetime);
  EXPECT_DOUBLE_EQ(Value(3).as_double(), 3.0);
  EXPECT_EQ(*Value(Datetime{7}).numeric(), 7.0);
  EXPECT_FALSE(Value("a").numeric().has_value());
  EXPECT_THROW(Value("a").as_double(), TypeError);
  EXPECT_THROW(Value(2.0).as_string(), TypeError);
}

TEST(SchemaTest, RejectsBrokenDefinitions)
{
  SchemaDef dup;
  dup.types = {{"A", TypeKind::Entity, std::nullopt, {}, {}},
    {"A", TypeKind::Entity, std::nullopt, {}, {}}};
  EXPECT_THROW(Schema::define(dup), SchemaError);

  SchemaDef orphan;
  orphan.types = {{"B", TypeKind::Entity, "Missing", {}, {}}};
  EXPECT_THROW(Schema::define(orphan), SchemaError);

  SchemaDef bad_player;
  bad_player.types = {{"r", TypeKind::Relation, std::nullopt, {}, {{"x", {"Nope"}}}}};
  EXPECT_THROW(Schema::define(bad_player), SchemaError);

  SchemaDef two_keys;
  two_keys.types = {
    {"P", TypeKind::Entity, std::nullopt, {{"k", ValueKind::String, true}}, {}},
    {"C", TypeKind::Entity, "P", {{"k2", ValueKind::String, true}}, {}}};
  EXPECT_THROW(Schema::define(two_keys), SchemaError);
}

TEST_F(EraTest, InheritanceResolvesAttributesAndKeys)
{
  const auto & schema = store.schema();
  EXPECT_TRUE(schema.is_subtype_of("Tool", "Thing"));
  EXPECT_FALSE(schema.is_subtype_of("Thing", "Tool"));
  ASSERT_NE(schema.attribute("Tool", "weight"), nullptr);
  EXPECT_EQ(schema.key_scope("Tool"), "Thing");
  EXPECT_TRUE(schema.is_relation("audit"));
}

TEST_F(EraTest, InsertAndKeyUniquenessAcrossSubtypes)
{
  auto hammer = store.insert("Tool", {{"name", "hammer"}, {"weight", 1.5}});
  EXPECT_THROW(store.insert("Thing", {{"name", "hammer"}}), StoreError);
  EXPECT_EQ(store.find_by_key("Thing", Value("hammer")), hammer);
  EXPECT_EQ(store.instances_of("Thing"), std::vector<InstanceId>{hammer});
  EXPECT_TRUE(store.instances_of("Place").empty());
  EXPECT_THROW(store.insert("Nope"), StoreError);
  EXPECT_THROW(store.insert("Thing", {{"name", "x"}, {"bogus", 1}}), StoreError);
  EXPECT_THROW(store.insert("Thing", {{"name", "y"}, {"weight", "heavy"}}), StoreError);
}

TEST_F(EraTest, RelationsAreNaryWithAttributesAndHigherOrder)
{
  auto bob = store.insert("Thing", {{"name", "bob"}});
  auto ann = store.insert("Thing", {{"name", "ann"}});
  auto saw = store.insert("Tool", {{"name", "saw"}});
  auto drill = store.insert("Tool", {{"name", "drill"}});
  auto shed = store.insert("Place", {{"label", "shed"}});
  auto u = store.insert("uses", {{"hours", 3}, {"since", Datetime{2}}},
      {{"user", {ann, bob}}, {"tool", {saw, drill}}, {"where", {shed}}});
  auto a = store.insert("audit", {{"ok", true}}, {{"subject", {u}}});

  EXPECT_EQ(store.get(u).fillers("user").size(), 2u);
  EXPECT_EQ(store.relations_where("uses", "tool", drill), std::vector<InstanceId>{u});
  EXPECT_EQ(store.relations_of(u), std::vector<InstanceId>{a});
  // player types are enforced
  EXPECT_THROW(store.insert("uses", {}, {{"tool", {bob}}}), StoreError);
  EXPECT_THROW(store.insert("uses", {}, {{"nope", {bob}}}), StoreError);
  EXPECT_THROW(store.insert("uses", {}, {}), StoreError);
  EXPECT_NO_THROW(store.insert("log", {}, {}));
  // referenced instances cannot be erased
  EXPECT_THROW(store.erase(saw), StoreError);
  store.erase(a);
  store.erase(u);
  EXPECT_NO_THROW(store.erase(saw));
}

TEST_F(EraTest, ReplaceOnWriteAndEpoch)
{
  auto t = store.insert("Thing", {{"name", "t"}, {"weight", 1.0}});
  auto e0 = store.epoch();
  store.set_attribute(t, "weight", 2.0);
  EXPECT_GT(store.epoch(), e0);
  EXPECT_DOUBLE_EQ(store.get(t).get("weight")->as_double(), 2.0);
  EXPECT_THROW(store.set_attribute(t, "name", "renamed"), StoreError);
  EXPECT_FALSE(store.delete_attribute(t, "weight", 1.0));
  EXPECT_TRUE(store.delete_attribute(t, "weight", 2.0));
  EXPECT_EQ(store.get(t).get("weight"), nullptr);
}

TEST_F(EraTest, MatchJoinsRolesAndNegation)
{
  auto bob = store.insert("Thing", {{"name", "bob"}, {"weight", 80.0}});
  auto ann = store.insert("Thing", {{"name", "ann"}, {"weight", 60.0}});
  auto saw = store.insert("Tool", {{"name", "saw"}, {"sharp", true}});
  store.insert("uses", {{"hours", 3}}, {{"user", {bob}}, {"tool", {saw}}});

  Pattern users;
  users.add({"p", "Thing", {}, {}})
  .add({"u", "uses", {{"hours", CompareOp::Ge, 2}}, {{"user", "p"}}});
  auto found = store.match(users);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].at("p"), bob);

  Pattern idle;
  idle.add({"p", "Thing", {{"weight", CompareOp::Has, {}}}, {}});
  idle.exclude({{{"u", "uses", {}, {{"user", "p"}}}}});
  found = store.match(idle);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].at("p"), ann);

  Pattern unbound;
  unbound.add({"u", "uses", {}, {{"user", "ghost"}}});
  EXPECT_THROW(store.match(unbound), StoreError);

  DerivedAttributes derived = [](const Instance & i, const std::string & attr)
    -> std::optional<Value> {
      if (attr == "mood") {
        return Value(i.get("name")->as_string() == "ann" ? "happy" : "grumpy");
      }
      return std::nullopt;
    };
  Pattern happy;
  happy.add({"p", "Thing", {{"mood", CompareOp::Eq, "happy"}}, {}});
  found = store.match(happy, derived);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0].at("p"), ann);
}

// Random stores of at most 50 instances, random conjunctive patterns with
// negation: the indexed matcher must agree with exhaustive enumeration.
TEST(MatchOracleTest, AgreesWithBruteForce)
{
  std::mt19937_64 rng(20261019);
  auto pick = [&rng](int lo, int hi) {return std::uniform_int_distribution<int>(lo, hi)(rng);};
  const CompareOp ops[] = {CompareOp::Eq, CompareOp::Ne, CompareOp::Lt, CompareOp::Le,
    CompareOp::Gt, CompareOp::Ge, CompareOp::Has, CompareOp::Absent};
  int compared = 0;
  for (int round = 0; round < 150; ++round) {
    Store store;
    store.define_schema(workshop_schema());
    std::vector<InstanceId> things, tools, places;
    for (int i = pick(1, 8); i > 0; --i) {
      AttributeMap attrs{{"name", "t" + std::to_string(i)}};
      if (pick(0, 3) > 0) {
        attrs["weight"] = static_cast<double>(pick(0, 4));
      }
      things.push_back(store.insert("Thing", attrs));
    }
    for (int i = pick(1, 6); i > 0; --i) {
      tools.push_back(store.insert("Tool", {{"name", "tool" + std::to_string(i)},
          {"weight", static_cast<double>(pick(0, 4))}, {"sharp", pick(0, 1) == 1}}));
    }
    for (int i = pick(1, 3); i > 0; --i) {
      places.push_back(store.insert("Place", {{"label", "p" + std::to_string(i)}}));
    }
    std::vector<InstanceId> all_things = things;
    all_things.insert(all_things.end(), tools.begin(), tools.end());
    for (int i = pick(0, 10); i > 0 && store.size() < 50; --i) {
      RoleFillers f;
      f["user"] = {all_things[static_cast<std::size_t>(pick(0, static_cast<int>(all_things.size()) - 1))]};
      if (pick(0, 1)) {
        f["tool"] = {tools[static_cast<std::size_t>(pick(0, static_cast<int>(tools.size()) - 1))]};
      }
      if (pick(0, 1)) {
        f["where"] = {places[static_cast<std::size_t>(pick(0, static_cast<int>(places.size()) - 1))]};
      }
      store.insert("uses", {{"hours", pick(0, 5)}}, f);
    }
    ASSERT_LE(store.size(), 50u);

    Pattern p;
    p.add({"x", pick(0, 1) ? "Thing" : "Tool",
        {{"weight", ops[pick(0, 7)], static_cast<double>(pick(0, 4))}}, {}});
    if (pick(0, 1)) {
      p.add({"u", "uses", {{"hours", ops[pick(0, 5)], pick(0, 5)}}, {{"user", "x"}}});
      if (pick(0, 1)) {
        p.add({"w", "Place", {}, {}});
        p.add({"u", "", {}, {{"where", "w"}}});
      }
    } else {
      p.add({"y", "Tool", {{"sharp", CompareOp::Eq, pick(0, 1) == 1}}, {}});
    }
    if (pick(0, 1)) {
      p.exclude({{{"n", "uses", {{"hours", CompareOp::Gt, pick(0, 4)}}, {{"user", "x"}}}}});
    }
    EXPECT_EQ(store.match(p), rosa::oracles::brute_force_match(store, p)) << "round " << round;
    ++compared;
  }
  EXPECT_EQ(compared, 150);
}

}  // namespace
