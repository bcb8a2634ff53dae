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

#include <chrono>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles/naive_fixpoint.hpp"
#include "rosa/inference/reasoner.hpp"
#include "rosa/mapek/planner.hpp"
#include "rosa/model/rosa_schema.hpp"
#include "support/test_support.hpp"

namespace
{

namespace inf = rosa::inference;
namespace m = rosa::model;
using rosa::era::InstanceId;
using rosa::era::Store;

TEST(ReasonerOracleTest, StratifiedEqualsNaiveFixpointOnRandomModels)
{
  auto start = std::chrono::steady_clock::now();
  int nontrivial = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Store store(m::rosa_schema());
    rosa::oracles::populate_random_model(store, seed);
    auto naive = rosa::oracles::naive_fixpoint(store);
    auto snap = inf::compute_snapshot(store);
    EXPECT_EQ(snap.status, naive.status) << "seed " << seed;
    EXPECT_EQ(snap.required, naive.required) << "seed " << seed;
    nontrivial += naive.iterations > 2 ? 1 : 0;
  }
  // The random models must actually exercise chained rules.
  EXPECT_GT(nontrivial, 50);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(10));
}

TEST(ReasonerTest, MemoizesPerEpoch)
{
  Store store(m::rosa_schema());
  rosa::oracles::populate_random_model(store, 7);
  inf::Reasoner reasoner(store);
  auto first = reasoner.snapshot();
  auto again = reasoner.snapshot();
  EXPECT_EQ(first.get(), again.get());
  EXPECT_EQ(reasoner.evaluations(), 1u);
  store.insert(m::kAction, {{m::attr::kName, std::string("late")}});
  EXPECT_NE(reasoner.snapshot().get(), first.get());
  EXPECT_EQ(reasoner.evaluations(), 2u);
}

TEST(ReasonerTest, DeterministicAcrossIdenticalStores)
{
  for (std::uint64_t seed = 300; seed < 320; ++seed) {
    Store a(m::rosa_schema());
    Store b(m::rosa_schema());
    rosa::oracles::populate_random_model(a, seed);
    rosa::oracles::populate_random_model(b, seed);
    EXPECT_EQ(inf::compute_snapshot(a).status, inf::compute_snapshot(b).status);
  }
}

// Locality: a new measurement can only change statuses of elements that are
// downstream of a constraint on that measure.
TEST(ReasonerTest, MeasurementChangesAreLocal)
{
  std::mt19937_64 rng(99);
  for (std::uint64_t seed = 400; seed < 460; ++seed) {
    Store store(m::rosa_schema());
    rosa::oracles::populate_random_model(store, seed);
    auto before = inf::compute_snapshot(store);
    auto measures = store.instances_of(m::kMeasure);
    auto measure = measures[rng() % measures.size()];

    // Downstream closure: constrained elements, then upward through
    // configurations -> components -> designs -> functions -> actions.
    std::set<InstanceId> reach;
    for (auto c : inf::constraints_on(store, measure)) {
      reach.insert(c);
    }
    for (auto c : store.relations_where(m::kConstraint, m::role::kMeasure, measure)) {
      reach.insert(c);
      for (auto e : store.get(c).fillers(m::role::kConstrained)) {
        reach.insert(e);
      }
    }
    for (int pass = 0; pass < 6; ++pass) {
      for (auto id : store.all()) {
        const auto & inst = store.get(id);
        if (inst.type_name == m::kComponentConfiguration &&
          reach.count(inst.fillers(m::role::kComponent).at(0)) == 0 && reach.count(id))
        {
          reach.insert(inst.fillers(m::role::kComponent).at(0));
        }
        if (inst.type_name == m::kFunctionDesign) {
          for (auto c : inst.fillers(m::role::kRequiredComponent)) {
            if (reach.count(c)) {
              reach.insert(id);
            }
          }
          if (reach.count(id)) {
            reach.insert(inst.fillers(m::role::kFunction).at(0));
          }
        }
        if (inst.type_name == m::kFunctionalRequirement) {
          for (auto f : inst.fillers(m::role::kRequiredFunction)) {
            if (reach.count(f)) {
              reach.insert(inst.fillers(m::role::kAction).at(0));
            }
          }
        }
      }
    }

    store.insert(m::kMeasurement,
      {{m::attr::kValue, static_cast<double>(rng() % 5) * 0.25},
        {m::attr::kTime, rosa::era::Datetime{10}}},
      {{m::role::kMeasure, {measure}}});
    auto after = inf::compute_snapshot(store);
    for (const auto & [id, st] : before.status) {
      if (!reach.count(id)) {
        EXPECT_EQ(after.status.at(id), st) << "seed " << seed << " element " << id.value;
      }
    }
  }
}

TEST(ReasonerTest, SelectableConfigurationsFollowThresholds)
{
  rosa::testing::KbHarness h(rosa::testing::load_document("suave"));
  auto spiral = h.id(m::kComponent, "generate_spiral");
  auto names = [&](double wv) {
      h.measure("water_visibility", wv, static_cast<std::int64_t>(wv * 100));
      return m::names_of(h.store, h.kb.reasoner().selectable_component_configurations(spiral));
    };
  using V = std::vector<std::string>;
  EXPECT_EQ(names(0.5), V{});
  EXPECT_EQ(names(1.0), (V{"spiral_low"}));
  EXPECT_EQ(names(2.0), (V{"spiral_medium", "spiral_low"}));
  EXPECT_EQ(names(3.25), (V{"spiral_medium", "spiral_low"}));
  EXPECT_EQ(names(3.26), (V{"spiral_high", "spiral_medium", "spiral_low"}));
}

// Argmax: with a preferred measure the planner picks the extreme estimation
// among feasible candidates; a brute-force scan is the oracle.
TEST(PlannerChoiceTest, PreferredMeasureIsArgmax)
{
  std::mt19937_64 rng(5);
  for (int round = 0; round < 100; ++round) {
    auto doc = rosa::testing::load_document("agv");
    doc.timeline.clear();
    bool maximize = rng() % 2 == 0;
    std::vector<double> values;
    for (auto & e : doc.model.estimations) {
      if (e.measure == "accuracy") {
        e.value = static_cast<double>(rng() % 4) / 4.0;
        e.type = maximize ? "maximize" : "minimize";
      }
    }
    rosa::testing::KbHarness h(doc);
    rosa::mapek::Planner planner(h.kb);
    auto navigate = h.id(m::kFunction, "navigate");
    h.kb.action_request_start(h.id(m::kAction, "navigate_corridor"), 0,
      h.id(m::kMeasure, "accuracy"));
    auto candidates = h.kb.function_designs_selectable(navigate);
    auto best = planner.best_candidate(navigate, candidates);
    ASSERT_TRUE(best.has_value());

    // Oracle: scan in priority order, keep the first strict improvement.
    std::optional<InstanceId> expect;
    double expect_value = 0.0;
    for (auto fd : candidates) {
      for (auto est : inf::estimations_on(h.store, fd)) {
        const auto & inst = h.store.get(est);
        if (m::name_of(h.store, inst.fillers(m::role::kMeasure).at(0)) != "accuracy") {
          continue;
        }
        double v = inst.get(m::attr::kValue)->as_double();
        if (!expect || (maximize ? v > expect_value : v < expect_value)) {
          expect = fd;
          expect_value = v;
        }
      }
    }
    EXPECT_EQ(best, expect) << "round " << round;
  }
}

TEST(PlannerChoiceTest, NoPreferenceMeansPriorityOrder)
{
  rosa::testing::KbHarness h(rosa::testing::load_document("agv"));
  rosa::mapek::Planner planner(h.kb);
  auto navigate = h.id(m::kFunction, "navigate");
  h.kb.action_request_start(h.id(m::kAction, "navigate_corridor"), 0);
  auto best = planner.best_candidate(navigate, h.kb.function_designs_selectable(navigate));
  EXPECT_EQ(m::name_of(h.store, *best), "nav_amcl_kinect");
}

}  // namespace
