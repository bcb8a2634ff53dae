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

#include "json.hpp"
#include "rosa/inference/reasoner.hpp"
#include "rosa/mapek/knowledge_base.hpp"
#include "rosa/model/rosa_schema.hpp"
#include "support/test_support.hpp"

namespace
{

namespace m = rosa::model;
namespace mk = rosa::mapek;
using nlohmann::json;
using rosa::testing::KbHarness;
using rosa::testing::load_document;
using V = std::vector<std::string>;

class SuaveKb : public ::testing::Test
{
protected:
  SuaveKb() : h(load_document("suave_extended")) {}
  V names(const std::vector<rosa::era::InstanceId> & ids) {return m::names_of(h.store, ids);}
  KbHarness h;
};

TEST_F(SuaveKb, DiagnosticsAreValidatedBeforeStoring)
{
  using mk::DiagnosticOutcome;
  namespace d = mk::diagnostic;
  auto & kb = h.kb;
  EXPECT_EQ(kb.ingest_diagnostic({"t", d::kEaMeasurement, "water_visibility", "2.5", 3}),
    DiagnosticOutcome::Accepted);
  // wrong kind for the measure
  EXPECT_EQ(kb.ingest_diagnostic({"t", d::kQaMeasurement, "water_visibility", "2.5", 4}),
    DiagnosticOutcome::Rejected);
  EXPECT_EQ(kb.ingest_diagnostic({"t", d::kEaMeasurement, "water_visibility", "murky", 4}),
    DiagnosticOutcome::Rejected);
  EXPECT_EQ(kb.ingest_diagnostic({"t", d::kEaMeasurement, "nothing", "1", 4}),
    DiagnosticOutcome::Rejected);
  // older than the latest reading
  EXPECT_EQ(kb.ingest_diagnostic({"t", d::kEaMeasurement, "water_visibility", "1", 2}),
    DiagnosticOutcome::Rejected);
  EXPECT_EQ(kb.ingest_diagnostic({"t", d::kComponentStatus, "thruster_2", "exploded", 4}),
    DiagnosticOutcome::Rejected);
  auto events = h.drain();
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0].kind, mk::EventKind::InsertMonitoringData);
  EXPECT_EQ(events[0].tick, 3);
  EXPECT_EQ(rosa::inference::latest_measurement(h.store, h.id(m::kMeasure, "water_visibility")),
    2.5);
}

TEST_F(SuaveKb, FailureAndRecoveryToggleComponentStatus)
{
  h.fail("thruster_2", 1);
  EXPECT_EQ(h.status(m::kComponent, "thruster_2"), "failure");
  EXPECT_EQ(h.status(m::kFunctionDesign, "fd_maintain"), "unfeasible");
  EXPECT_EQ(h.status(m::kFunctionDesign, "fd_recover"), "feasible");
  h.recover("thruster_2", 2);
  EXPECT_EQ(h.status(m::kComponent, "thruster_2"), "feasible");
  EXPECT_EQ(h.status(m::kFunctionDesign, "fd_maintain"), "feasible");
}

TEST_F(SuaveKb, ActionRequestsAreSingleAndPublish)
{
  auto search = h.id(m::kAction, "search_pipeline");
  h.kb.action_request_start(search, 1);
  EXPECT_THROW(h.kb.action_request_start(search, 2), mk::KbError);
  EXPECT_TRUE(h.kb.reasoner().is_required(search));
  EXPECT_TRUE(h.kb.reasoner().is_required(h.id(m::kFunction, "maintain_motion")));
  h.kb.action_request_stop(search, 3, "success");
  h.kb.action_request_stop(search, 4, "success");  // nothing open: no-op
  EXPECT_FALSE(h.kb.reasoner().is_required(search));
  auto events = h.drain();
  ASSERT_EQ(events.size(), 2u);
  EXPECT_EQ(events[0].kind, mk::EventKind::ActionUpdate);
  EXPECT_EQ(events[1].kind, mk::EventKind::ActionUpdate);
}

TEST_F(SuaveKb, LowBatteryLeavesOnlyRecharge)
{
  EXPECT_EQ(names(h.kb.action_selectable()), (V{"search_pipeline", "inspect_pipeline", "recharge"}));
  h.measure("battery_level", 0.24, 1);
  EXPECT_EQ(names(h.kb.action_selectable()), V{"recharge"});
  h.measure("battery_level", 0.25, 2);
  EXPECT_EQ(names(h.kb.action_selectable()), (V{"search_pipeline", "inspect_pipeline", "recharge"}));
}

TEST_F(SuaveKb, AdaptableSetsFollowRequirements)
{
  EXPECT_TRUE(h.kb.function_adaptable().empty());
  h.kb.action_request_start(h.id(m::kAction, "search_pipeline"), 0);
  EXPECT_EQ(names(h.kb.function_adaptable()), (V{"generate_search_path", "maintain_motion"}));
  h.kb.apply_selection({{h.id(m::kFunctionDesign, "fd_spiral"),
      h.id(m::kFunctionDesign, "fd_maintain")}, {}});
  // maintain_motion stays adaptable because it always looks for improvements
  EXPECT_EQ(names(h.kb.function_adaptable()), V{"maintain_motion"});
  EXPECT_EQ(names(h.kb.component_adaptable()), V{"generate_spiral"});
  EXPECT_EQ(h.kb.function_designs_priority(h.id(m::kFunctionDesign, "fd_recover")), 2);
  EXPECT_EQ(h.kb.component_configuration_priority(
      h.id(m::kComponentConfiguration, "spiral_low")), 3);
}

TEST_F(SuaveKb, ApplySelectionIsAtomic)
{
  auto epoch = h.store.epoch();
  EXPECT_THROW(h.kb.apply_selection({{h.id(m::kFunctionDesign, "fd_maintain"),
      h.id(m::kFunctionDesign, "fd_recover")}, {}}), mk::KbError);
  EXPECT_THROW(h.kb.apply_selection({{h.id(m::kFunctionDesign, "fd_spiral"),
      h.id(m::kComponent, "thruster_1")}, {}}), mk::KbError);
  EXPECT_EQ(h.store.epoch(), epoch);
  EXPECT_FALSE(h.selected("generate_search_path").has_value());
}

TEST_F(SuaveKb, SelectConfigurationDiffsGoalAgainstActive)
{
  h.kb.action_request_start(h.id(m::kAction, "search_pipeline"), 0);
  auto plan = h.kb.select_configuration({{h.id(m::kFunctionDesign, "fd_spiral"),
      h.id(m::kFunctionDesign, "fd_maintain")},
    {h.id(m::kComponentConfiguration, "spiral_high")}}, 0);
  auto view = h.kb.reconfiguration_plan_get(plan);
  EXPECT_EQ(names(view.activations), (V{"generate_spiral", "thruster_1", "thruster_2",
      "thruster_3", "thruster_4", "thruster_5", "thruster_6"}));
  EXPECT_TRUE(view.deactivations.empty());
  EXPECT_TRUE(view.parameter_adaptations.empty());  // started with the selection
  EXPECT_TRUE(view.result.empty());
  // Until the executor runs, the next plan already accounts for this one.
  auto again = h.kb.select_configuration({}, 0);
  EXPECT_TRUE(h.kb.reconfiguration_plan_get(again).is_empty());
  EXPECT_EQ(h.kb.reconfiguration_plan_get(again).result, "completed");

  for (auto c : view.activations) {
    h.kb.component_active_set(c, true, 7);
  }
  h.kb.reconfiguration_plan_result_set(plan, "completed", 0);
  auto adapt = h.kb.select_configuration(
    {{}, {h.id(m::kComponentConfiguration, "spiral_low")}}, 1);
  EXPECT_EQ(names(h.kb.reconfiguration_plan_get(adapt).parameter_adaptations), V{"spiral_low"});

  auto events = h.drain();
  int plans = 0;
  for (const auto & e : events) {
    plans += e.kind == mk::EventKind::ReconfigurationPlan ? 1 : 0;
  }
  EXPECT_EQ(plans, 2);  // the empty plan is recorded without an event
  EXPECT_THROW(h.kb.reconfiguration_plan_result_set(adapt, "maybe", 1), mk::KbError);
  EXPECT_THROW(h.kb.component_active_set(h.id(m::kComponent, "thruster_1"), true),
    mk::KbError);
}

TEST_F(SuaveKb, ComponentParametersComeFromTheSelection)
{
  auto spiral = h.id(m::kComponent, "generate_spiral");
  EXPECT_TRUE(h.kb.component_parameters_get(spiral).empty());
  h.kb.apply_selection({{}, {h.id(m::kComponentConfiguration, "spiral_medium")}});
  auto params = h.kb.component_parameters_get(spiral);
  ASSERT_EQ(params.size(), 1u);
  EXPECT_EQ(params[0].first, "spiral_altitude");
  EXPECT_EQ(params[0].second, "medium");
}

TEST_F(SuaveKb, GenericCallSurface)
{
  EXPECT_EQ(mk::KnowledgeBase::service_names().size(), 14u);
  auto & kb = h.kb;
  EXPECT_EQ(kb.call("action/selectable")["actions"].size(), 3u);
  kb.call("action/request", {{"action", "search_pipeline"}, {"tick", 0}});
  EXPECT_EQ(kb.call("function/adaptable")["functions"],
    json({"generate_search_path", "maintain_motion"}));
  EXPECT_EQ(kb.call("function_designs/selectable", {{"function", "maintain_motion"}})
    ["function_designs"], json({"fd_maintain", "fd_recover"}));
  EXPECT_EQ(kb.call("function_designs/priority", {{"function_design", "fd_recover"}})
    ["priority"], 2);
  auto sel = kb.call("select_configuration",
      {{"function_designs", {"fd_spiral", "fd_maintain"}},
        {"component_configurations", {"spiral_high"}}, {"tick", 0}});
  EXPECT_FALSE(sel["empty"].get<bool>());
  auto latest = kb.call("reconfiguration_plan/get_latest");
  EXPECT_EQ(latest["id"], sel["plan"]);
  EXPECT_EQ(latest["component_activation"].size(), 7u);
  kb.call("component/active/set", {{"component", "generate_spiral"}, {"is_active", true},
      {"pid", 11}});
  kb.call("reconfiguration_plan/result/set",
    {{"id", sel["plan"]}, {"result", "completed"}, {"tick", 0}});
  EXPECT_EQ(kb.call("reconfiguration_plan/get_latest")["result"], "completed");
  EXPECT_EQ(kb.call("component_parameters/get", {{"component", "generate_spiral"}})
    ["parameters"][0]["value"], "high");
  EXPECT_EQ(kb.call("component_configuration/selectable", {{"component", "generate_spiral"}})
    ["component_configurations"].size(), 3u);

  // Derived statuses are visible to queries.
  h.fail("thruster_3", 1);
  auto rows = kb.call("query", json::parse(R"({"clauses": [
      {"var": "c", "type": "Component", "attrs": [{"attr": "status", "value": "failure"}]}]})"));
  EXPECT_EQ(rows["bindings"], json::parse(R"([{"c": "thruster_3"}])"));
  rows = kb.call("query", json::parse(R"({"clauses": [
      {"var": "fd", "type": "function-design", "attrs": [{"attr": "status", "value": "unfeasible"}]}],
      "negations": [[{"var": "x", "type": "Component", "attrs": [{"attr": "is-active", "op": "has"}]}]]})"));
  EXPECT_TRUE(rows["bindings"].empty());

  EXPECT_THROW(kb.call("nope"), mk::KbError);
  EXPECT_THROW(kb.call("function_designs/selectable", {{"function", "ghost"}}), mk::KbError);
  EXPECT_THROW(kb.call("query", {{"clauses", 3}}), mk::KbError);
  EXPECT_THROW(kb.call("action/request", {{"action", "recharge"}, {"operation", "pause"}}),
    mk::KbError);
}

TEST_F(SuaveKb, PreferredMeasureFollowsTheOpenRequest)
{
  auto wv = h.id(m::kMeasure, "water_visibility");
  h.kb.action_request_start(h.id(m::kAction, "search_pipeline"), 0, wv);
  EXPECT_EQ(h.kb.preferred_measure_for(h.id(m::kFunction, "generate_search_path")), wv);
  EXPECT_FALSE(h.kb.preferred_measure_for(h.id(m::kFunction, "follow_pipeline")).has_value());
}

}  // namespace
