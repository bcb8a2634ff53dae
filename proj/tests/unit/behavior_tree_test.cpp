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

#include <map>
#include <string>
#include <vector>

#include "rosa/bt/behavior_tree.hpp"
#include "rosa/inference/reasoner.hpp"
#include "rosa/model/rosa_schema.hpp"
#include "rosa/model/scenario_parser.hpp"
#include "support/test_support.hpp"

namespace
{

namespace m = rosa::model;
using rosa::bt::BehaviorTree;
using rosa::bt::TickResult;

class ScriptedDomain : public rosa::bt::DomainBehaviors
{
public:
  TickResult tick_behavior(const std::string & name, std::int64_t) override
  {
    log.push_back("tick " + name);
    auto it = results.find(name);
    return it == results.end() ? TickResult::Running : it->second;
  }
  void halt_behavior(const std::string & name, std::int64_t) override
  {
    log.push_back("halt " + name);
  }
  std::map<std::string, TickResult> results;
  std::vector<std::string> log;
};

const char * const kModel = R"(rosa-scenario v1
[model]
action fetch
action deliver
function move
component wheels
quality-attribute charge
functional-requirement fetch requires move
functional-requirement deliver requires move
function-design fd_move for move uses wheels priority 1
constraint charge >= 0.5 on fetch
)";

m::MissionNode mission(const std::string & text)
{
  auto doc = m::parse_scenario(std::string(kModel) + "[mission]\n" + text);
  return *doc.mission;
}

class TreeTest : public ::testing::Test
{
protected:
  TreeTest() : h(m::parse_scenario(kModel)) {}
  bool open(const std::string & action)
  {
    return rosa::inference::open_required_action(h.store, h.id(m::kAction, action)).has_value();
  }
  std::string closing_result(const std::string & action)
  {
    auto ras = h.store.relations_where(m::kRequiredAction, m::role::kAction,
        h.id(m::kAction, action));
    const auto * r = h.store.get(ras.back()).get(m::attr::kResult);
    return r ? r->as_string() : "";
  }
  rosa::testing::KbHarness h;
  ScriptedDomain domain;
};

TEST_F(TreeTest, SequenceStopsAtFirstNonSuccess)
{
  BehaviorTree tree(mission("sequence s\n  leaf a\n  leaf b\n  leaf c\n"), h.kb, domain);
  domain.results = {{"a", TickResult::Success}, {"b", TickResult::Failure}};
  EXPECT_EQ(tree.tick(0), TickResult::Failure);
  EXPECT_EQ(domain.log, (std::vector<std::string>{"tick a", "tick b"}));
  ASSERT_EQ(tree.last_trace().size(), 3u);
  EXPECT_EQ(tree.last_trace()[0].path, "sequence:s/leaf:a");
  EXPECT_EQ(tree.last_trace().back().path, "sequence:s");
}

TEST_F(TreeTest, FallbackHaltsChildrenPastTheRunningOne)
{
  BehaviorTree tree(mission("fallback f\n  leaf a\n  leaf b\n"), h.kb, domain);
  domain.results = {{"a", TickResult::Failure}};  // b keeps running
  EXPECT_EQ(tree.tick(0), TickResult::Running);
  domain.results = {};  // now a runs: b must be halted
  domain.log.clear();
  EXPECT_EQ(tree.tick(1), TickResult::Running);
  EXPECT_EQ(domain.log, (std::vector<std::string>{"tick a", "halt b"}));
  domain.results = {{"a", TickResult::Success}};
  EXPECT_EQ(tree.tick(2), TickResult::Success);
}

TEST_F(TreeTest, ActionOpensOnFirstRunningTickAndClosesWithResult)
{
  BehaviorTree tree(mission("sequence s\n  condition deliver\n  action deliver go\n"), h.kb,
    domain);
  EXPECT_EQ(tree.tick(0), TickResult::Running);
  EXPECT_TRUE(open("deliver"));
  ASSERT_EQ(tree.last_transitions().size(), 1u);
  EXPECT_TRUE(tree.last_transitions()[0].opened);
  tree.tick(1);
  EXPECT_TRUE(tree.last_transitions().empty());  // still the same request
  domain.results = {{"go", TickResult::Failure}};
  EXPECT_EQ(tree.tick(2), TickResult::Failure);
  EXPECT_FALSE(open("deliver"));
  EXPECT_EQ(closing_result("deliver"), "failure");
}

TEST_F(TreeTest, InstantBehaviorNeverOpensARequest)
{
  BehaviorTree tree(mission("action deliver go\n"), h.kb, domain);
  domain.results = {{"go", TickResult::Success}};
  EXPECT_EQ(tree.tick(0), TickResult::Success);
  EXPECT_TRUE(tree.last_transitions().empty());
  EXPECT_TRUE(h.store.instances_of(m::kRequiredAction).empty());
}

TEST_F(TreeTest, ConditionFlipHaltsTheRunningAction)
{
  BehaviorTree tree(mission(
      "fallback root\n"
      "  sequence first\n    condition fetch\n    action fetch get\n"
      "  sequence second\n    condition deliver\n    action deliver go\n"), h.kb, domain);
  tree.tick(0);
  EXPECT_TRUE(open("fetch"));
  h.measure("charge", 0.4, 1);
  tree.tick(1);
  EXPECT_FALSE(open("fetch"));
  EXPECT_EQ(closing_result("fetch"), "halted");
  EXPECT_TRUE(open("deliver"));
  ASSERT_EQ(tree.last_transitions().size(), 2u);
  EXPECT_FALSE(tree.last_transitions()[0].opened);
  EXPECT_EQ(tree.last_transitions()[0].result, "halted");
  EXPECT_TRUE(tree.last_transitions()[1].opened);
}

TEST_F(TreeTest, HaltClosesOpenRequests)
{
  BehaviorTree tree(mission("action fetch get\n"), h.kb, domain);
  tree.tick(0);
  tree.halt(1);
  EXPECT_FALSE(open("fetch"));
  EXPECT_EQ(closing_result("fetch"), "halted");
  EXPECT_EQ(domain.log.back(), "halt get");
}

TEST_F(TreeTest, PreferredMeasureIsAttachedToTheRequest)
{
  BehaviorTree tree(mission("action fetch get prefer=charge\n"), h.kb, domain);
  tree.tick(0);
  EXPECT_EQ(h.kb.preferred_measure_for(h.id(m::kFunction, "move")), h.id(m::kMeasure, "charge"));
}

TEST_F(TreeTest, UnknownNamesAreRejected)
{
  m::MissionNode node;
  node.kind = m::MissionNodeKind::Action;
  node.action = "teleport";
  node.behavior = "x";
  EXPECT_THROW(BehaviorTree(node, h.kb, domain), rosa::bt::TreeError);
}

}  // namespace
