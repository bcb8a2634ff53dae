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

#include <string>
#include <vector>

#include "rosa/mapek/executor.hpp"
#include "rosa/mapek/loop.hpp"
#include "rosa/mapek/planner.hpp"
#include "rosa/model/rosa_schema.hpp"
#include "support/test_support.hpp"

namespace
{

namespace m = rosa::model;
namespace mk = rosa::mapek;
using rosa::testing::KbHarness;
using rosa::testing::RecordingSystem;
using rosa::testing::load_document;
using V = std::vector<std::string>;

class LoopTest : public ::testing::Test
{
protected:
  LoopTest() : h(load_document("suave_extended")), loop(h.kb, system) {}

  void start(const std::string & action, std::int64_t tick)
  {
    h.kb.action_request_start(h.id(m::kAction, action), tick);
    loop.run_pending();
  }
  V active() {return m::names_of(h.store, h.kb.active_components());}

  KbHarness h;
  RecordingSystem system;
  mk::MapekLoop loop;
};

TEST_F(LoopTest, RequestBringsUpTheArchitecture)
{
  start("search_pipeline", 0);
  EXPECT_EQ(active(), (V{"generate_spiral", "thruster_1", "thruster_2", "thruster_3",
      "thruster_4", "thruster_5", "thruster_6"}));
  EXPECT_EQ(*h.selected("generate_spiral"), "spiral_high");
  EXPECT_EQ(system.calls.front(), "start generate_spiral spiral_altitude=high");
  auto plan = h.kb.reconfiguration_plan_get_latest();
  ASSERT_TRUE(plan.has_value());
  EXPECT_EQ(plan->result, "completed");
  EXPECT_EQ(plan->end_time, 0);
  EXPECT_TRUE(h.store.get(h.id(m::kComponent, "thruster_1")).get(m::attr::kPid) != nullptr);

  // Switching actions within one drain swaps only what differs.
  system.calls.clear();
  h.kb.action_request_stop(h.id(m::kAction, "search_pipeline"), 5, "success");
  start("inspect_pipeline", 5);
  EXPECT_EQ(system.calls, (V{"stop generate_spiral", "start follow_pipeline_node"}));
  EXPECT_EQ(h.store.get(h.id(m::kComponent, "generate_spiral")).get(m::attr::kPid), nullptr);
}

TEST_F(LoopTest, ThresholdDropAdaptsParametersOnly)
{
  start("search_pipeline", 0);
  system.calls.clear();
  h.measure("water_visibility", 2.0, 1);
  loop.run_pending();
  EXPECT_EQ(system.calls, V{"set generate_spiral spiral_altitude=medium"});
  auto plan = h.kb.reconfiguration_plan_get_latest();
  EXPECT_TRUE(plan->activations.empty());
  EXPECT_TRUE(plan->deactivations.empty());
  EXPECT_EQ(m::names_of(h.store, plan->parameter_adaptations), V{"spiral_medium"});
}

TEST_F(LoopTest, UnchangedMonitoringDataPlansNothing)
{
  start("search_pipeline", 0);
  auto plans = h.kb.reconfiguration_plans().size();
  h.measure("water_visibility", 4.0, 1);
  h.measure("battery_level", 0.9, 1);
  auto cycles = loop.run_pending();
  EXPECT_EQ(cycles.size(), 2u);
  EXPECT_EQ(h.kb.reconfiguration_plans().size(), plans);
}

TEST_F(LoopTest, FailureSwitchesDesignAndRecoveryReturns)
{
  start("search_pipeline", 0);
  h.fail("thruster_4", 3);
  loop.run_pending();
  EXPECT_EQ(*h.selected("maintain_motion"), "fd_recover");
  EXPECT_EQ(active(), (V{"generate_spiral", "recover_thrusters"}));
  h.recover("thruster_4", 8);
  loop.run_pending();
  EXPECT_EQ(*h.selected("maintain_motion"), "fd_maintain");
  EXPECT_EQ(active().size(), 7u);
}

TEST_F(LoopTest, StartRefusalFailsThePlanAndReplans)
{
  system.refuse.insert("thruster_2");
  start("search_pipeline", 0);
  auto plans = h.kb.reconfiguration_plans();
  ASSERT_GE(plans.size(), 2u);
  EXPECT_EQ(h.kb.reconfiguration_plan_get(plans[0]).result, "failed");
  EXPECT_EQ(h.status(m::kComponent, "thruster_2"), "failure");
  EXPECT_EQ(*h.selected("maintain_motion"), "fd_recover");
  EXPECT_EQ(h.kb.reconfiguration_plan_get(plans.back()).result, "completed");
  EXPECT_EQ(active(), (V{"generate_spiral", "recover_thrusters"}));
}

TEST_F(LoopTest, ExecutorIgnoresOtherEventsAndFinishedPlans)
{
  mk::Executor executor(h.kb, system);
  EXPECT_FALSE(executor.handle({mk::EventKind::ActionUpdate, 0, 0, std::nullopt}).has_value());
  start("search_pipeline", 0);
  auto plan = *h.kb.reconfiguration_plan_get_latest();
  system.calls.clear();
  EXPECT_EQ(executor.execute_plan(plan.id, 1), "completed");
  EXPECT_TRUE(system.calls.empty());
}

// Planner and executor keep no state of their own: rebuilding them before
// every event yields the same calls and the same plans.
TEST(StatelessnessTest, RebuildingComponentsChangesNothing)
{
  auto run = [](bool rebuild) {
      KbHarness h(load_document("suave_extended"));
      RecordingSystem system;
      mk::MapekLoop loop(h.kb, system);
      loop.set_rebuild_components(rebuild);
      h.kb.action_request_start(h.id(m::kAction, "search_pipeline"), 0);
      loop.run_pending();
      h.fail("thruster_1", 1);
      h.measure("water_visibility", 1.0, 2);
      loop.run_pending();
      h.recover("thruster_1", 3);
      h.measure("water_visibility", 4.0, 3);
      loop.run_pending();
      h.kb.action_request_stop(h.id(m::kAction, "search_pipeline"), 4, "success");
      h.kb.action_request_start(h.id(m::kAction, "recharge"), 4);
      loop.run_pending();
      std::vector<std::string> out = system.calls;
      for (auto p : h.kb.reconfiguration_plans()) {
        auto v = h.kb.reconfiguration_plan_get(p);
        out.push_back(std::to_string(v.start_time) + " " + v.result + " " +
          std::to_string(v.activations.size()) + "/" + std::to_string(v.deactivations.size()) +
          "/" + std::to_string(v.parameter_adaptations.size()));
      }
      out.push_back(rebuild ? std::to_string(loop.rebuilds() > 0) : "1");
      return out;
    };
  auto plain = run(false);
  auto rebuilt = run(true);
  EXPECT_EQ(plain, rebuilt);
  EXPECT_GT(plain.size(), 10u);
}

}  // namespace
