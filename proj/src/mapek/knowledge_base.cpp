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

#include "rosa/mapek/knowledge_base.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

#include <spdlog/spdlog.h>

#include "rosa/model/rosa_schema.hpp"

namespace rosa::mapek
{

namespace m = rosa::model;
namespace inf = rosa::inference;
using era::InstanceId;
using nlohmann::json;

KnowledgeBase::KnowledgeBase(era::Store & store, EventBus & bus)
: store_(store), bus_(bus), reasoner_(store)
{
}

void KnowledgeBase::publish(EventKind kind, std::int64_t tick, std::optional<InstanceId> plan)
{
  bus_.publish(Event{kind, store_.epoch(), tick, plan});
}

// ---------------------------------------------------------------------------
// monitor

namespace
{

std::optional<double> parse_double(const std::string & text)
{
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

}  // namespace

DiagnosticOutcome KnowledgeBase::ingest_diagnostic(const Diagnostic & d)
{
  auto reject = [&d](const std::string & why) {
      spdlog::warn("dropping diagnostic '{}' for '{}' from '{}': {}", d.kind, d.key, d.source, why);
      return DiagnosticOutcome::Rejected;
    };

  if (d.kind == diagnostic::kQaMeasurement || d.kind == diagnostic::kEaMeasurement) {
    auto measure = m::find_named(store_, m::kMeasure, d.key);
    if (!measure) {
      return reject("unknown measure");
    }
    const auto & type = store_.get(*measure).type_name;
    const auto & wrong = d.kind == diagnostic::kQaMeasurement ?
      m::kEnvironmentalAttribute : m::kQualityAttribute;
    if (type == wrong) {
      return reject("measure kind does not match message kind");
    }
    auto value = parse_double(d.value);
    if (!value) {
      return reject("value '" + d.value + "' is not a number");
    }
    for (auto id : store_.relations_where(m::kMeasurement, m::role::kMeasure, *measure)) {
      const auto * t = store_.get(id).get(m::attr::kTime);
      if (t != nullptr && t->as_datetime().tick > d.tick) {
        return reject("measurement older than the latest one");
      }
    }
    store_.insert(
      m::kMeasurement, {{m::attr::kValue, *value}, {m::attr::kTime, era::Datetime{d.tick}}},
      {{m::role::kMeasure, {*measure}}});
  } else if (d.kind == diagnostic::kComponentStatus) {
    auto comp = m::find_named(store_, m::kComponent, d.key);
    if (!comp) {
      return reject("unknown component");
    }
    if (d.value == diagnostic::kFailureValue) {
      store_.set_attribute(*comp, m::attr::kStatus, inf::status::kFailure);
    } else if (d.value == diagnostic::kRecoveredValue) {
      store_.delete_attribute(*comp, m::attr::kStatus, inf::status::kFailure);
    } else {
      return reject("unknown component status '" + d.value + "'");
    }
  } else {
    return reject("unknown message kind");
  }
  publish(EventKind::InsertMonitoringData, d.tick);
  return DiagnosticOutcome::Accepted;
}

// ---------------------------------------------------------------------------
// analysis / planning

std::vector<InstanceId> KnowledgeBase::function_adaptable() const
{
  return reasoner_.adaptable_functions();
}

std::vector<InstanceId> KnowledgeBase::function_designs_selectable(InstanceId f) const
{
  return reasoner_.selectable_function_designs(f);
}

std::optional<std::int64_t> KnowledgeBase::function_designs_priority(InstanceId fd) const
{
  const auto * p = store_.get(fd).get(m::attr::kPriority);
  if (p == nullptr) {
    return std::nullopt;
  }
  return p->as_integer();
}

std::vector<InstanceId> KnowledgeBase::component_adaptable() const
{
  return reasoner_.adaptable_components();
}

std::vector<InstanceId> KnowledgeBase::component_configuration_selectable(InstanceId comp) const
{
  return reasoner_.selectable_component_configurations(comp);
}

std::optional<std::int64_t> KnowledgeBase::component_configuration_priority(InstanceId cc) const
{
  return function_designs_priority(cc);
}

void KnowledgeBase::apply_selection(const SelectionDelta & delta)
{
  // Validate everything before the first write.
  std::map<InstanceId, InstanceId> by_function;
  for (auto fd : delta.function_designs) {
    const auto * inst = store_.find(fd);
    if (inst == nullptr || inst->type_name != m::kFunctionDesign) {
      throw KbError("selection names an unknown function design");
    }
    auto f = inf::design_function(store_, fd);
    auto [it, inserted] = by_function.emplace(f, fd);
    if (!inserted && it->second != fd) {
      throw KbError(
              "conflicting selection: two function designs for function '" +
              m::name_of(store_, f) + "'");
    }
  }
  std::map<InstanceId, InstanceId> by_component;
  for (auto cc : delta.component_configurations) {
    const auto * inst = store_.find(cc);
    if (inst == nullptr || inst->type_name != m::kComponentConfiguration) {
      throw KbError("selection names an unknown component configuration");
    }
    auto comp = inf::configuration_component(store_, cc);
    auto [it, inserted] = by_component.emplace(comp, cc);
    if (!inserted && it->second != cc) {
      throw KbError(
              "conflicting selection: two configurations for component '" +
              m::name_of(store_, comp) + "'");
    }
  }

  auto select_one = [this](const std::vector<InstanceId> & siblings, InstanceId chosen) {
      for (auto s : siblings) {
        bool want = s == chosen;
        if (m::flag(store_, s, m::attr::kIsSelected) != want) {
          store_.set_attribute(s, m::attr::kIsSelected, want);
        }
      }
    };
  for (const auto & [f, fd] : by_function) {
    select_one(inf::function_designs_of(store_, f), fd);
  }
  for (const auto & [comp, cc] : by_component) {
    select_one(inf::configurations_of(store_, comp), cc);
  }
}

std::vector<InstanceId> KnowledgeBase::goal_components() const
{
  auto snap = reasoner_.snapshot();
  std::set<InstanceId> goal;
  for (auto f : store_.instances_of(m::kFunction)) {
    if (!snap->is_required(f)) {
      continue;
    }
    if (auto fd = inf::selected_function_design(store_, f)) {
      for (auto c : inf::design_components(store_, *fd)) {
        goal.insert(c);
      }
    }
  }
  return {goal.begin(), goal.end()};
}

std::vector<InstanceId> KnowledgeBase::active_components() const
{
  std::vector<InstanceId> out;
  for (auto c : store_.instances_of(m::kComponent)) {
    if (m::flag(store_, c, m::attr::kIsActive)) {
      out.push_back(c);
    }
  }
  return out;
}

std::vector<InstanceId> KnowledgeBase::projected_active_components() const
{
  auto current = active_components();
  std::set<InstanceId> active(current.begin(), current.end());
  // Plans still waiting for the executor are applied in creation order.
  for (auto plan : reconfiguration_plans()) {
    if (store_.get(plan).get(m::attr::kResult) != nullptr) {
      continue;
    }
    auto view = reconfiguration_plan_get(plan);
    for (auto c : view.deactivations) {
      active.erase(c);
    }
    active.insert(view.activations.begin(), view.activations.end());
  }
  return {active.begin(), active.end()};
}

InstanceId KnowledgeBase::select_configuration(const SelectionDelta & delta, std::int64_t tick)
{
  apply_selection(delta);

  auto goal = goal_components();
  auto active = projected_active_components();
  std::vector<InstanceId> activations;
  std::vector<InstanceId> deactivations;
  std::set_difference(
    goal.begin(), goal.end(), active.begin(), active.end(), std::back_inserter(activations));
  std::set_difference(
    active.begin(), active.end(), goal.begin(), goal.end(), std::back_inserter(deactivations));

  // Live components whose configuration changed get their parameters pushed;
  // components being started receive the selected parameters at start.
  std::set<InstanceId> adaptations;
  for (auto cc : delta.component_configurations) {
    auto comp = inf::configuration_component(store_, cc);
    if (std::binary_search(goal.begin(), goal.end(), comp) &&
      std::binary_search(active.begin(), active.end(), comp))
    {
      adaptations.insert(cc);
    }
  }

  era::RoleFillers fillers;
  if (!activations.empty()) {
    fillers[m::role::kComponentActivation] = activations;
  }
  if (!deactivations.empty()) {
    fillers[m::role::kComponentDeactivation] = deactivations;
  }
  if (!adaptations.empty()) {
    fillers[m::role::kParameterAdaptation] = {adaptations.begin(), adaptations.end()};
  }
  bool empty = fillers.empty();
  era::AttributeMap attrs{{m::attr::kStartTime, era::Datetime{tick}}};
  if (empty) {
    attrs[m::attr::kEndTime] = era::Datetime{tick};
    attrs[m::attr::kResult] = std::string("completed");
  }
  auto plan = store_.insert(m::kReconfigurationPlan, std::move(attrs), std::move(fillers));
  if (!empty) {
    publish(EventKind::ReconfigurationPlan, tick, plan);
  }
  return plan;
}

// ---------------------------------------------------------------------------
// execution

PlanView KnowledgeBase::reconfiguration_plan_get(InstanceId plan) const
{
  const auto * inst = store_.find(plan);
  if (inst == nullptr || inst->type_name != m::kReconfigurationPlan) {
    throw KbError("unknown reconfiguration plan #" + std::to_string(plan.value));
  }
  PlanView view;
  view.id = plan;
  view.activations = inst->fillers(m::role::kComponentActivation);
  view.deactivations = inst->fillers(m::role::kComponentDeactivation);
  view.parameter_adaptations = inst->fillers(m::role::kParameterAdaptation);
  view.start_time = inst->get(m::attr::kStartTime)->as_datetime().tick;
  if (const auto * end = inst->get(m::attr::kEndTime)) {
    view.end_time = end->as_datetime().tick;
  }
  if (const auto * r = inst->get(m::attr::kResult)) {
    view.result = r->as_string();
  }
  return view;
}

std::vector<InstanceId> KnowledgeBase::reconfiguration_plans() const
{
  return store_.instances_of(m::kReconfigurationPlan);
}

std::optional<PlanView> KnowledgeBase::reconfiguration_plan_get_latest() const
{
  auto plans = reconfiguration_plans();
  if (plans.empty()) {
    return std::nullopt;
  }
  return reconfiguration_plan_get(plans.back());
}

void KnowledgeBase::reconfiguration_plan_result_set(
  InstanceId plan, const std::string & result, std::int64_t tick)
{
  if (result != "completed" && result != "failed") {
    throw KbError("plan result must be 'completed' or 'failed'");
  }
  reconfiguration_plan_get(plan);  // type check
  store_.set_attribute(plan, m::attr::kResult, result);
  store_.set_attribute(plan, m::attr::kEndTime, era::Datetime{tick});
}

void KnowledgeBase::component_active_set(
  InstanceId comp, bool active, std::optional<std::int64_t> pid)
{
  if (active && !pid) {
    throw KbError("an active component needs a pid");
  }
  store_.set_attribute(comp, m::attr::kIsActive, active);
  if (active) {
    store_.set_attribute(comp, m::attr::kPid, *pid);
  } else if (const auto * old = store_.get(comp).get(m::attr::kPid)) {
    era::Value copy = *old;
    store_.delete_attribute(comp, m::attr::kPid, copy);
  }
}

void KnowledgeBase::component_failure_set(InstanceId comp, std::int64_t tick)
{
  store_.set_attribute(comp, m::attr::kStatus, inf::status::kFailure);
  publish(EventKind::InsertMonitoringData, tick);
}

std::vector<std::pair<std::string, std::string>> KnowledgeBase::component_parameters_get(
  InstanceId comp) const
{
  std::vector<std::pair<std::string, std::string>> out;
  auto cc = inf::selected_configuration(store_, comp);
  if (!cc) {
    return out;
  }
  for (auto p : store_.get(*cc).fillers(m::role::kParameter)) {
    const auto & inst = store_.get(p);
    out.emplace_back(inst.get(m::attr::kKey)->as_string(), inst.get(m::attr::kValue)->as_string());
  }
  return out;
}

// ---------------------------------------------------------------------------
// task layer

std::vector<InstanceId> KnowledgeBase::action_selectable() const
{
  return reasoner_.selectable_actions();
}

bool KnowledgeBase::action_feasible(InstanceId action) const
{
  return reasoner_.status(action) != inf::status::kUnfeasible;
}

InstanceId KnowledgeBase::action_request_start(
  InstanceId action, std::int64_t tick, std::optional<InstanceId> preferred_measure)
{
  if (inf::open_required_action(store_, action)) {
    throw KbError("action '" + m::name_of(store_, action) + "' is already requested");
  }
  era::RoleFillers fillers{{m::role::kAction, {action}}};
  if (preferred_measure) {
    fillers[m::role::kPreferredMeasure] = {*preferred_measure};
  }
  auto id = store_.insert(
    m::kRequiredAction, {{m::attr::kStartTime, era::Datetime{tick}}}, std::move(fillers));
  publish(EventKind::ActionUpdate, tick);
  return id;
}

void KnowledgeBase::action_request_stop(
  InstanceId action, std::int64_t tick, const std::string & result)
{
  auto open = inf::open_required_action(store_, action);
  if (!open) {
    return;
  }
  store_.set_attribute(*open, m::attr::kEndTime, era::Datetime{tick});
  store_.set_attribute(*open, m::attr::kResult, result);
  publish(EventKind::ActionUpdate, tick);
}

std::vector<era::Binding> KnowledgeBase::query(const era::Pattern & pattern) const
{
  return reasoner_.match(pattern);
}

std::optional<InstanceId> KnowledgeBase::preferred_measure_for(InstanceId element) const
{
  const auto & type = store_.get(element).type_name;
  if (type == m::kFunction) {
    for (auto ra : store_.instances_of(m::kRequiredAction)) {
      const auto & inst = store_.get(ra);
      const auto & pref = inst.fillers(m::role::kPreferredMeasure);
      if (inst.get(m::attr::kEndTime) != nullptr || pref.empty()) {
        continue;
      }
      auto functions = inf::required_functions_of(store_, inst.fillers(m::role::kAction).at(0));
      if (std::binary_search(functions.begin(), functions.end(), element)) {
        return pref.front();
      }
    }
    return std::nullopt;
  }
  if (type == m::kComponent) {
    auto snap = reasoner_.snapshot();
    for (auto f : store_.instances_of(m::kFunction)) {
      if (!snap->is_required(f)) {
        continue;
      }
      auto fd = inf::selected_function_design(store_, f);
      if (!fd) {
        continue;
      }
      auto comps = inf::design_components(store_, *fd);
      if (std::find(comps.begin(), comps.end(), element) != comps.end()) {
        if (auto pref = preferred_measure_for(f)) {
          return pref;
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// generic call surface

const std::vector<std::string> & KnowledgeBase::service_names()
{
  static const std::vector<std::string> names = {
    "function/adaptable",
    "function_designs/selectable",
    "function_designs/priority",
    "component/adaptable",
    "component_configuration/selectable",
    "component_configuration/priority",
    "select_configuration",
    "reconfiguration_plan/get_latest",
    "reconfiguration_plan/result/set",
    "component/active/set",
    "component_parameters/get",
    "action/selectable",
    "action/request",
    "query",
  };
  return names;
}

InstanceId KnowledgeBase::named(
  const std::string & type, const json & request, const char * field) const
{
  if (!request.is_object() || !request.contains(field) || !request[field].is_string()) {
    throw KbError(std::string("request needs string field '") + field + "'");
  }
  auto id = m::find_named(store_, type, request[field].get<std::string>());
  if (!id) {
    throw KbError("no " + type + " named '" + request[field].get<std::string>() + "'");
  }
  return *id;
}

namespace
{

json priority_json(std::optional<std::int64_t> p)
{
  return p ? json(*p) : json(nullptr);
}

std::int64_t tick_of(const json & request)
{
  if (request.is_object() && request.contains("tick")) {
    return request["tick"].get<std::int64_t>();
  }
  return 0;
}

era::Value value_from_json(const json & j)
{
  if (j.is_string()) {return era::Value(j.get<std::string>());}
  if (j.is_boolean()) {return era::Value(j.get<bool>());}
  if (j.is_number_integer()) {return era::Value(j.get<std::int64_t>());}
  if (j.is_number()) {return era::Value(j.get<double>());}
  if (j.is_null()) {return era::Value();}
  throw KbError("unsupported value in query");
}

era::CompareOp op_from_string(const std::string & op)
{
  static const std::map<std::string, era::CompareOp> ops = {
    {"==", era::CompareOp::Eq}, {"!=", era::CompareOp::Ne}, {"<", era::CompareOp::Lt},
    {"<=", era::CompareOp::Le}, {">", era::CompareOp::Gt}, {">=", era::CompareOp::Ge},
    {"has", era::CompareOp::Has}, {"absent", era::CompareOp::Absent}};
  auto it = ops.find(op);
  if (it == ops.end()) {
    throw KbError("unknown query operator '" + op + "'");
  }
  return it->second;
}

era::Clause clause_from_json(const json & j)
{
  era::Clause c;
  c.var = j.at("var").get<std::string>();
  c.type = j.value("type", std::string());
  for (const auto & a : j.value("attrs", json::array())) {
    c.attrs.push_back(
      {a.at("attr").get<std::string>(), op_from_string(a.value("op", std::string("=="))),
        value_from_json(a.value("value", json()))});
  }
  for (const auto & r : j.value("roles", json::array())) {
    c.roles.push_back({r.at("role").get<std::string>(), r.at("var").get<std::string>()});
  }
  return c;
}

}  // namespace

era::Pattern pattern_from_json(const json & j)
{
  era::Pattern p;
  try {
    for (const auto & c : j.at("clauses")) {
      p.add(clause_from_json(c));
    }
    for (const auto & block : j.value("negations", json::array())) {
      era::NegationBlock nb;
      for (const auto & c : block) {
        nb.clauses.push_back(clause_from_json(c));
      }
      p.exclude(std::move(nb));
    }
  } catch (const json::exception & e) {
    throw KbError(std::string("malformed query: ") + e.what());
  }
  return p;
}

json KnowledgeBase::call(const std::string & service, const json & request)
{
  auto names = [this](const std::vector<InstanceId> & ids) {
      return json(m::names_of(store_, ids));
    };
  try {
    if (service == "function/adaptable") {
      return {{"functions", names(function_adaptable())}};
    }
    if (service == "function_designs/selectable") {
      return {{"function_designs",
        names(function_designs_selectable(named(m::kFunction, request, "function")))}};
    }
    if (service == "function_designs/priority") {
      return {{"priority", priority_json(
            function_designs_priority(named(m::kFunctionDesign, request, "function_design")))}};
    }
    if (service == "component/adaptable") {
      return {{"components", names(component_adaptable())}};
    }
    if (service == "component_configuration/selectable") {
      return {{"component_configurations",
        names(component_configuration_selectable(named(m::kComponent, request, "component")))}};
    }
    if (service == "component_configuration/priority") {
      return {{"priority", priority_json(component_configuration_priority(
              named(m::kComponentConfiguration, request, "component_configuration")))}};
    }
    if (service == "select_configuration") {
      SelectionDelta delta;
      for (const auto & n : request.value("function_designs", json::array())) {
        delta.function_designs.push_back(
          m::require_named(store_, m::kFunctionDesign, n.get<std::string>()));
      }
      for (const auto & n : request.value("component_configurations", json::array())) {
        delta.component_configurations.push_back(
          m::require_named(store_, m::kComponentConfiguration, n.get<std::string>()));
      }
      auto plan = select_configuration(delta, tick_of(request));
      return {{"plan", plan.value}, {"empty", reconfiguration_plan_get(plan).is_empty()}};
    }
    if (service == "reconfiguration_plan/get_latest") {
      auto plan = reconfiguration_plan_get_latest();
      if (!plan) {
        return json::object();
      }
      json out = {
        {"id", plan->id.value},
        {"component_activation", names(plan->activations)},
        {"component_deactivation", names(plan->deactivations)},
        {"parameter_adaptation", names(plan->parameter_adaptations)},
        {"start_time", plan->start_time}};
      if (plan->end_time) {
        out["end_time"] = *plan->end_time;
      }
      if (!plan->result.empty()) {
        out["result"] = plan->result;
      }
      return out;
    }
    if (service == "reconfiguration_plan/result/set") {
      reconfiguration_plan_result_set(
        InstanceId{request.at("id").get<std::uint64_t>()}, request.at("result").get<std::string>(),
        tick_of(request));
      return {{"success", true}};
    }
    if (service == "component/active/set") {
      auto comp = named(m::kComponent, request, "component");
      bool active = request.at("is_active").get<bool>();
      std::optional<std::int64_t> pid;
      if (request.contains("pid")) {
        pid = request["pid"].get<std::int64_t>();
      }
      component_active_set(comp, active, pid);
      return {{"success", true}};
    }
    if (service == "component_parameters/get") {
      json params = json::array();
      for (const auto & [k, v] : component_parameters_get(named(m::kComponent, request, "component")))
      {
        params.push_back({{"key", k}, {"value", v}});
      }
      return {{"parameters", params}};
    }
    if (service == "action/selectable") {
      return {{"actions", names(action_selectable())}};
    }
    if (service == "action/request") {
      auto action = named(m::kAction, request, "action");
      auto op = request.value("operation", std::string("start"));
      if (op == "start") {
        std::optional<InstanceId> pref;
        if (request.contains("preferred_measure")) {
          pref = named(m::kMeasure, request, "preferred_measure");
        }
        action_request_start(action, tick_of(request), pref);
      } else if (op == "stop") {
        action_request_stop(action, tick_of(request), request.value("result", std::string("success")));
      } else {
        throw KbError("action/request operation must be 'start' or 'stop'");
      }
      return {{"success", true}};
    }
    if (service == "query") {
      json out = json::array();
      for (const auto & b : query(pattern_from_json(request))) {
        json row = json::object();
        for (const auto & [var, id] : b) {
          row[var] = m::name_of(store_, id);
        }
        out.push_back(row);
      }
      return {{"bindings", out}};
    }
  } catch (const json::exception & e) {
    throw KbError("malformed request for '" + service + "': " + e.what());
  } catch (const era::StoreError & e) {
    throw KbError(e.what());
  }
  throw KbError("unknown service '" + service + "'");
}

}  // namespace rosa::mapek
