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

#include "rosa/model/loader.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "rosa/model/rosa_schema.hpp"
#include "rosa/model/scenario_parser.hpp"

namespace rosa::model
{

namespace
{

enum class NameKind
{
  Action, Function, Component, Parameter, Measure, FunctionDesign, Configuration
};

const char * describe(NameKind kind)
{
  switch (kind) {
    case NameKind::Action: return "action";
    case NameKind::Function: return "function";
    case NameKind::Component: return "component";
    case NameKind::Parameter: return "parameter";
    case NameKind::Measure: return "measure";
    case NameKind::FunctionDesign: return "function design";
    case NameKind::Configuration: return "configuration";
  }
  return "element";
}

class NameTable
{
public:
  void declare(const std::string & name, NameKind kind, int line)
  {
    auto [it, inserted] = names_.emplace(name, kind);
    if (!inserted) {
      throw ScenarioError(
              "duplicate name '" + name + "' (already declared as " + describe(it->second) +
              ")", line);
    }
  }

  void expect(const std::string & name, NameKind kind, int line) const
  {
    expect_one_of(name, {kind}, line);
  }

  NameKind expect_one_of(
    const std::string & name, std::initializer_list<NameKind> kinds, int line) const
  {
    auto it = names_.find(name);
    if (it == names_.end()) {
      throw ScenarioError("unknown reference '" + name + "'", line);
    }
    for (auto k : kinds) {
      if (it->second == k) {
        return k;
      }
    }
    std::string allowed;
    for (auto k : kinds) {
      allowed += allowed.empty() ? "" : " or ";
      allowed += describe(k);
    }
    throw ScenarioError(
            "'" + name + "' is a " + describe(it->second) + ", expected " + allowed, line);
  }

private:
  std::map<std::string, NameKind> names_;
};

void validate_mission(
  const MissionNode & node, const NameTable & names, const std::set<std::string> & behaviors)
{
  auto need_behavior = [&](const std::string & b) {
      if (behaviors.count(b) == 0) {
        throw ScenarioError("unknown behavior '" + b + "'", node.line);
      }
    };
  switch (node.kind) {
    case MissionNodeKind::Sequence:
    case MissionNodeKind::Fallback:
      if (node.children.empty()) {
        throw ScenarioError(to_string(node.kind) + " without children", node.line);
      }
      break;
    case MissionNodeKind::Condition:
      names.expect(node.action, NameKind::Action, node.line);
      break;
    case MissionNodeKind::Action:
      names.expect(node.action, NameKind::Action, node.line);
      need_behavior(node.behavior);
      if (!node.preferred_measure.empty()) {
        names.expect(node.preferred_measure, NameKind::Measure, node.line);
      }
      break;
    case MissionNodeKind::Leaf:
      need_behavior(node.behavior);
      break;
  }
  for (const auto & child : node.children) {
    validate_mission(child, names, behaviors);
  }
}

}  // namespace

void validate_document(const ScenarioDocument & doc)
{
  const auto & m = doc.model;
  NameTable names;
  for (const auto & a : m.actions) {names.declare(a.name, NameKind::Action, a.line);}
  for (const auto & f : m.functions) {names.declare(f.name, NameKind::Function, f.line);}
  for (const auto & c : m.components) {names.declare(c.name, NameKind::Component, c.line);}
  for (const auto & p : m.parameters) {names.declare(p.label, NameKind::Parameter, p.line);}
  for (const auto & ms : m.measures) {names.declare(ms.name, NameKind::Measure, ms.line);}
  for (const auto & d : m.designs) {names.declare(d.name, NameKind::FunctionDesign, d.line);}
  for (const auto & c : m.configurations) {
    names.declare(c.name, NameKind::Configuration, c.line);
  }

  std::set<std::string> required_functions;
  for (const auto & r : m.requirements) {
    names.expect(r.action, NameKind::Action, r.line);
    for (const auto & f : r.functions) {
      names.expect(f, NameKind::Function, r.line);
      required_functions.insert(f);
    }
  }
  std::set<std::string> designed;
  for (const auto & d : m.designs) {
    names.expect(d.function, NameKind::Function, d.line);
    designed.insert(d.function);
    for (const auto & c : d.components) {
      names.expect(c, NameKind::Component, d.line);
    }
  }
  for (const auto & r : m.requirements) {
    for (const auto & f : r.functions) {
      if (designed.count(f) == 0) {
        throw ScenarioError("function '" + f + "' is required but has no function design",
                r.line);
      }
    }
  }
  for (const auto & c : m.configurations) {
    names.expect(c.component, NameKind::Component, c.line);
    for (const auto & p : c.parameters) {
      names.expect(p, NameKind::Parameter, c.line);
    }
  }
  for (const auto & c : m.constraints) {
    names.expect(c.measure, NameKind::Measure, c.line);
    names.expect_one_of(
      c.element, {NameKind::Action, NameKind::Component, NameKind::FunctionDesign,
        NameKind::Configuration}, c.line);
  }
  for (const auto & e : m.estimations) {
    names.expect(e.measure, NameKind::Measure, e.line);
    names.expect_one_of(
      e.element, {NameKind::FunctionDesign, NameKind::Component, NameKind::Configuration},
      e.line);
  }

  std::int64_t last = 0;
  for (const auto & ev : doc.timeline) {
    if (ev.tick < last) {
      throw ScenarioError("timeline ticks must be non-decreasing", ev.line);
    }
    last = ev.tick;
    names.expect(
      ev.target, ev.kind == TimelineKind::Measurement ? NameKind::Measure : NameKind::Component,
      ev.line);
  }

  const auto & p = doc.plant;
  for (const auto & c : p.consumers) {
    names.expect(c, NameKind::Component, 0);
  }
  for (const auto & mon : p.monitors) {
    names.expect(mon.measure, NameKind::Measure, mon.line);
  }
  std::set<std::string> corridors;
  for (const auto & c : p.corridors) {
    if (!corridors.insert(c.name).second) {
      throw ScenarioError("duplicate corridor '" + c.name + "'", c.line);
    }
  }
  std::set<std::string> behaviors;
  const auto & kinds = behavior_kinds();
  for (const auto & b : p.behaviors) {
    if (!behaviors.insert(b.name).second) {
      throw ScenarioError("duplicate behavior '" + b.name + "'", b.line);
    }
    if (std::find(kinds.begin(), kinds.end(), b.kind) == kinds.end()) {
      throw ScenarioError("unknown behavior kind '" + b.kind + "'", b.line);
    }
    for (const auto & c : b.requires_components) {
      names.expect(c, NameKind::Component, b.line);
    }
    if (b.kind == "traverse") {
      auto it = b.params.find("corridor");
      if (it == b.params.end()) {
        throw ScenarioError("traverse behavior needs corridor=NAME", b.line);
      }
      if (corridors.count(it->second) == 0) {
        throw ScenarioError("unknown corridor '" + it->second + "'", b.line);
      }
    }
  }
  if (doc.mission) {
    validate_mission(*doc.mission, names, behaviors);
  }
}

void populate_store(era::Store & store, const ModelSection & m)
{
  using era::AttributeMap;
  using era::InstanceId;
  using era::RoleFillers;

  std::map<std::string, InstanceId> ids;
  auto id_of = [&ids](const std::string & name) {return ids.at(name);};
  auto priority_attrs = [](const std::string & name, const std::optional<std::int64_t> & prio) {
      AttributeMap attrs{{attr::kName, name}, {attr::kIsSelected, false}};
      if (prio) {
        attrs[attr::kPriority] = *prio;
      }
      return attrs;
    };

  auto guarded = [](int line, auto && fn) {
      try {
        fn();
      } catch (const era::StoreError & e) {
        throw ScenarioError(e.what(), line);
      }
    };

  for (const auto & a : m.actions) {
    guarded(a.line, [&] {
        ids[a.name] = store.insert(kAction, {{attr::kName, a.name}});
      });
  }
  for (const auto & f : m.functions) {
    guarded(f.line, [&] {
        ids[f.name] = store.insert(
          kFunction, {{attr::kName, f.name}, {attr::kAlwaysImprove, f.always_improve}});
      });
  }
  for (const auto & c : m.components) {
    guarded(c.line, [&] {
        AttributeMap attrs{
          {attr::kName, c.name},
          {attr::kAlwaysImprove, c.always_improve},
          {attr::kIsActive, false},
          {attr::kLifecycle, c.lifecycle}};
        if (!c.package.empty()) {attrs[attr::kPackage] = c.package;}
        if (!c.executable.empty()) {attrs[attr::kExecutable] = c.executable;}
        ids[c.name] = store.insert(kComponent, std::move(attrs));
      });
  }
  for (const auto & p : m.parameters) {
    guarded(p.line, [&] {
        ids[p.label] = store.insert(
          kComponentParameter, {{attr::kKey, p.key}, {attr::kValue, p.value}});
      });
  }
  for (const auto & ms : m.measures) {
    const std::string & type = ms.kind == MeasureKind::Quality ? kQualityAttribute :
      ms.kind == MeasureKind::Environmental ? kEnvironmentalAttribute : kMeasure;
    guarded(ms.line, [&] {ids[ms.name] = store.insert(type, {{attr::kName, ms.name}});});
  }
  for (const auto & r : m.requirements) {
    guarded(r.line, [&] {
        std::vector<InstanceId> functions;
        for (const auto & f : r.functions) {functions.push_back(id_of(f));}
        store.insert(
          kFunctionalRequirement, {},
          RoleFillers{{role::kAction, {id_of(r.action)}}, {role::kRequiredFunction, functions}});
      });
  }
  for (const auto & d : m.designs) {
    guarded(d.line, [&] {
        std::vector<InstanceId> components;
        for (const auto & c : d.components) {components.push_back(id_of(c));}
        ids[d.name] = store.insert(
          kFunctionDesign, priority_attrs(d.name, d.priority),
          RoleFillers{{role::kFunction, {id_of(d.function)}},
            {role::kRequiredComponent, components}});
      });
  }
  for (const auto & c : m.configurations) {
    guarded(c.line, [&] {
        std::vector<InstanceId> params;
        for (const auto & p : c.parameters) {params.push_back(id_of(p));}
        ids[c.name] = store.insert(
          kComponentConfiguration, priority_attrs(c.name, c.priority),
          RoleFillers{{role::kComponent, {id_of(c.component)}}, {role::kParameter, params}});
      });
  }
  for (const auto & c : m.constraints) {
    guarded(c.line, [&] {
        store.insert(
          kConstraint, {{attr::kOperator, c.op}, {attr::kValue, c.value}},
          RoleFillers{{role::kMeasure, {id_of(c.measure)}},
            {role::kConstrained, {id_of(c.element)}}});
      });
  }
  for (const auto & e : m.estimations) {
    guarded(e.line, [&] {
        store.insert(
          kEstimation, {{attr::kType, e.type}, {attr::kValue, e.value}},
          RoleFillers{{role::kMeasure, {id_of(e.measure)}},
            {role::kEstimated, {id_of(e.element)}}});
      });
  }
}

LoadedScenario load_scenario(std::string_view text)
{
  ScenarioDocument doc = parse_scenario(text);
  validate_document(doc);
  auto store = std::make_unique<era::Store>(rosa_schema());
  populate_store(*store, doc.model);
  return {std::move(doc), std::move(store)};
}

LoadedScenario load_scenario_file(const std::filesystem::path & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ScenarioError("cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_scenario(buf.str());
}

ModelSection extract_model(const era::Store & store)
{
  ModelSection m;
  auto str = [&store](era::InstanceId id, const std::string & a) {
      const auto * v = store.get(id).get(a);
      return v ? v->as_string() : std::string();
    };
  auto flag = [&store](era::InstanceId id, const std::string & a) {
      const auto * v = store.get(id).get(a);
      return v != nullptr && v->as_boolean();
    };
  auto prio = [&store](era::InstanceId id) -> std::optional<std::int64_t> {
      const auto * v = store.get(id).get(attr::kPriority);
      if (v == nullptr) {return std::nullopt;}
      return v->as_integer();
    };
  auto name_of = [&](era::InstanceId id) {return str(id, attr::kName);};
  auto names_of = [&](const std::vector<era::InstanceId> & ids) {
      std::vector<std::string> out;
      for (auto id : ids) {out.push_back(name_of(id));}
      return out;
    };

  for (auto id : store.instances_of(kAction)) {
    m.actions.push_back({name_of(id), 0});
  }
  for (auto id : store.instances_of(kFunction)) {
    m.functions.push_back({name_of(id), flag(id, attr::kAlwaysImprove), 0});
  }
  for (auto id : store.instances_of(kComponent)) {
    m.components.push_back(
      {name_of(id), flag(id, attr::kAlwaysImprove), str(id, attr::kPackage),
        str(id, attr::kExecutable), flag(id, attr::kLifecycle), 0});
  }
  std::map<era::InstanceId, std::string> labels;
  for (auto id : store.instances_of(kComponentParameter)) {
    std::string label = "param_" + std::to_string(labels.size() + 1);
    labels[id] = label;
    m.parameters.push_back({label, str(id, attr::kKey), str(id, attr::kValue), 0});
  }
  for (auto id : store.instances_of(kMeasure)) {
    const auto & type = store.get(id).type_name;
    MeasureKind kind = type == kQualityAttribute ? MeasureKind::Quality :
      type == kEnvironmentalAttribute ? MeasureKind::Environmental : MeasureKind::Plain;
    m.measures.push_back({name_of(id), kind, 0});
  }
  for (auto id : store.instances_of(kFunctionalRequirement)) {
    const auto & inst = store.get(id);
    m.requirements.push_back(
      {name_of(inst.fillers(role::kAction).at(0)), names_of(inst.fillers(role::kRequiredFunction)),
        0});
  }
  for (auto id : store.instances_of(kFunctionDesign)) {
    const auto & inst = store.get(id);
    m.designs.push_back(
      {name_of(id), name_of(inst.fillers(role::kFunction).at(0)),
        names_of(inst.fillers(role::kRequiredComponent)), prio(id), 0});
  }
  for (auto id : store.instances_of(kComponentConfiguration)) {
    const auto & inst = store.get(id);
    std::vector<std::string> params;
    for (auto p : inst.fillers(role::kParameter)) {params.push_back(labels.at(p));}
    m.configurations.push_back(
      {name_of(id), name_of(inst.fillers(role::kComponent).at(0)), params, prio(id), 0});
  }
  for (auto id : store.instances_of(kConstraint)) {
    const auto & inst = store.get(id);
    m.constraints.push_back(
      {name_of(inst.fillers(role::kMeasure).at(0)), str(id, attr::kOperator),
        inst.get(attr::kValue)->as_double(), name_of(inst.fillers(role::kConstrained).at(0)), 0});
  }
  for (auto id : store.instances_of(kEstimation)) {
    const auto & inst = store.get(id);
    m.estimations.push_back(
      {name_of(inst.fillers(role::kMeasure).at(0)), str(id, attr::kType),
        inst.get(attr::kValue)->as_double(), name_of(inst.fillers(role::kEstimated).at(0)), 0});
  }
  return m;
}

}  // namespace rosa::model
