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

#include "rosa/sim/runner.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>

#include "rosa/bt/behavior_tree.hpp"
#include "rosa/inference/reasoner.hpp"
#include "rosa/mapek/knowledge_base.hpp"
#include "rosa/mapek/loop.hpp"
#include "rosa/model/loader.hpp"
#include "rosa/model/rosa_schema.hpp"
#include "rosa/sim/plant.hpp"

namespace rosa::sim
{

namespace m = rosa::model;
namespace inf = rosa::inference;
using nlohmann::json;

std::string RunResult::trace_text() const
{
  std::string out;
  for (const auto & line : trace) {
    out += line;
    out += '\n';
  }
  return out;
}

std::vector<std::string> RunResult::selections_of(const std::string & element) const
{
  std::vector<std::string> out;
  for (const auto & line : trace) {
    auto j = json::parse(line);
    const auto & sel = j.at("selected");
    out.push_back(sel.contains(element) ? sel[element].get<std::string>() : "");
  }
  return out;
}

namespace
{

json plant_json(const PlantState & s, const ProcessTable & processes)
{
  json vars = json::object();
  for (const auto & [k, v] : s.vars) {
    vars[k] = round6(v);
  }
  json active = json::object();
  for (const auto & [name, p] : processes.all()) {
    if (p.pid) {
      active[name] = *p.pid;
    }
  }
  json out = {
    {"vars", vars},
    {"flags", s.flags},
    {"failed", s.failed_components},
    {"processes", active}};
  if (!s.position.empty()) {
    out["position"] = s.position;
  }
  return out;
}

// Selected design per function and configuration per component.
json selections_json(const era::Store & store)
{
  json out = json::object();
  for (auto f : store.instances_of(m::kFunction)) {
    if (auto fd = inf::selected_function_design(store, f)) {
      out[m::name_of(store, f)] = m::name_of(store, *fd);
    }
  }
  for (auto c : store.instances_of(m::kComponent)) {
    if (auto cc = inf::selected_configuration(store, c)) {
      out[m::name_of(store, c)] = m::name_of(store, *cc);
    }
  }
  return out;
}

}  // namespace

RunResult run_scenario(const m::ScenarioDocument & doc, const RunOptions & options)
{
  if (options.max_ticks < 1) {
    throw std::invalid_argument("max_ticks must be at least 1");
  }
  m::validate_document(doc);

  era::Store store(m::rosa_schema());
  m::populate_store(store, doc.model);
  mapek::EventBus bus;
  mapek::KnowledgeBase kb(store, bus);
  Simulator sim(doc, options.seed);
  mapek::MapekLoop loop(kb, sim);
  loop.set_rebuild_components(options.rebuild_components);
  std::unique_ptr<bt::BehaviorTree> tree;
  if (doc.mission) {
    tree = std::make_unique<bt::BehaviorTree>(*doc.mission, kb, sim);
  }

  RunResult run;
  std::size_t events_seen = 0;
  std::uint64_t last_plan = 0;
  std::string result;
  std::int64_t tick = 0;
  std::map<std::string, bool> feasible_before;

  for (; tick < options.max_ticks; ++tick) {
    json record = {{"tick", tick}};

    json diags = json::array();
    for (const auto & d : sim.step(tick)) {
      auto outcome = kb.ingest_diagnostic(d);
      diags.push_back(
        d.kind + " " + d.key + " " + d.value +
        (outcome == mapek::DiagnosticOutcome::Rejected ? " (rejected)" : ""));
    }
    record["diagnostics"] = diags;
    loop.run_pending();

    json feasible = json::array();
    for (auto action : store.instances_of(m::kAction)) {
      const std::string name = m::name_of(store, action);
      bool now = kb.action_feasible(action);
      auto prev = feasible_before.find(name);
      if (prev != feasible_before.end() && prev->second != now) {
        run.feasibility.push_back({tick, name, now});
      }
      feasible_before[name] = now;
      if (now) {
        feasible.push_back(name);
      }
    }

    bt::TickResult status = bt::TickResult::Success;
    json nodes = json::array();
    std::vector<bt::ActionTransition> transitions;
    if (tree) {
      status = tree->tick(tick);
      for (const auto & n : tree->last_trace()) {
        nodes.push_back({n.path, std::string(bt::to_string(n.result))});
      }
      transitions = tree->last_transitions();
      bool last_tick = tick + 1 == options.max_ticks;
      if (status == bt::TickResult::Running && last_tick) {
        tree->halt(tick);
        const auto & halted = tree->last_transitions();
        transitions.insert(transitions.end(), halted.begin(), halted.end());
      }
    }
    loop.run_pending();

    json actions = json::array();
    for (const auto & t : transitions) {
      run.actions.push_back({tick, t.action, t.opened, t.result});
      json a = {{"action", t.action}, {"transition", t.opened ? "open" : "close"}};
      if (!t.opened) {
        a["result"] = t.result;
      }
      actions.push_back(a);
    }

    json plans = json::array();
    for (auto id : kb.reconfiguration_plans()) {
      if (id.value <= last_plan) {
        continue;
      }
      last_plan = id.value;
      auto view = kb.reconfiguration_plan_get(id);
      if (view.is_empty()) {
        continue;
      }
      PlanRecord rec{tick, id.value, m::names_of(store, view.activations),
        m::names_of(store, view.deactivations), m::names_of(store, view.parameter_adaptations),
        view.result};
      plans.push_back(rec.to_json());
      run.plans.push_back(std::move(rec));
    }

    json events = json::array();
    const auto & published = bus.published();
    for (; events_seen < published.size(); ++events_seen) {
      const auto & e = published[events_seen];
      run.event_log.push_back(mapek::format_event(e));
      events.push_back(std::string(mapek::to_string(e.kind)) + " " + std::to_string(e.epoch));
    }

    record["events"] = events;
    record["plans"] = plans;
    record["actions"] = actions;
    record["feasible"] = feasible;
    record["bt"] = std::string(bt::to_string(status));
    record["nodes"] = nodes;
    record["selected"] = selections_json(store);
    record["plant"] = plant_json(sim.state(), sim.processes());
    run.trace.push_back(record.dump());

    if (!tree || status != bt::TickResult::Running) {
      result = status == bt::TickResult::Failure ? "failure" : "success";
      break;
    }
  }

  Metrics & metrics = run.metrics;
  const std::int64_t last_tick = result.empty() ? options.max_ticks - 1 : tick;
  if (result.empty()) {
    result = "timeout";
    metrics.ticks = options.max_ticks;
  } else {
    metrics.ticks = tick;
  }
  metrics.result = result;
  metrics.search_time = sim.state().pipeline_found_tick;
  metrics.distance_inspected = sim.state().var(kInspectedDistance);
  metrics.route = sim.state().route;
  metrics.engine_cycles = static_cast<std::int64_t>(loop.cycles());
  for (const auto & p : run.plans) {
    ++metrics.plans;
    if (p.result == "failed") {
      ++metrics.failed_plans;
    }
  }
  for (const auto & ev : sim.labeled_events()) {
    if (ev.tick <= last_tick) {
      metrics.reaction_ticks[ev.label] = reaction_ticks(ev.tick, run.plans, run.actions, run.feasibility);
    }
  }
  return run;
}

}  // namespace rosa::sim
