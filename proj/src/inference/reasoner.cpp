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

#include "rosa/inference/reasoner.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "rosa/model/rosa_schema.hpp"

namespace rosa::inference
{

namespace m = rosa::model;
using era::InstanceId;

const std::string * StatusSnapshot::find(InstanceId id) const
{
  auto it = status.find(id);
  return it == status.end() ? nullptr : &it->second;
}

const std::string & StatusSnapshot::of(InstanceId id) const
{
  const auto * s = find(id);
  if (s == nullptr) {
    throw std::out_of_range("no inferred status for instance #" + std::to_string(id.value));
  }
  return *s;
}

// ---------------------------------------------------------------------------
// structure

std::optional<double> latest_measurement(const era::Store & store, InstanceId measure)
{
  std::optional<std::tuple<std::int64_t, InstanceId, double>> best;
  for (auto id : store.relations_where(m::kMeasurement, m::role::kMeasure, measure)) {
    const auto & inst = store.get(id);
    const auto * value = inst.get(m::attr::kValue);
    if (value == nullptr) {
      continue;
    }
    const auto * time = inst.get(m::attr::kTime);
    std::int64_t t = time ? time->as_datetime().tick : std::numeric_limits<std::int64_t>::min();
    std::tuple<std::int64_t, InstanceId, double> cand{t, id, value->as_double()};
    if (!best || std::tie(std::get<0>(cand), std::get<1>(cand)) >
      std::tie(std::get<0>(*best), std::get<1>(*best)))
    {
      best = cand;
    }
  }
  if (!best) {
    return std::nullopt;
  }
  return std::get<2>(*best);
}

std::optional<InstanceId> open_required_action(const era::Store & store, InstanceId action)
{
  for (auto id : store.relations_where(m::kRequiredAction, m::role::kAction, action)) {
    if (store.get(id).get(m::attr::kEndTime) == nullptr) {
      return id;
    }
  }
  return std::nullopt;
}

std::vector<InstanceId> function_designs_of(const era::Store & store, InstanceId f)
{
  return store.relations_where(m::kFunctionDesign, m::role::kFunction, f);
}

std::vector<InstanceId> configurations_of(const era::Store & store, InstanceId comp)
{
  return store.relations_where(m::kComponentConfiguration, m::role::kComponent, comp);
}

std::vector<InstanceId> constraints_on(const era::Store & store, InstanceId element)
{
  return store.relations_where(m::kConstraint, m::role::kConstrained, element);
}

std::vector<InstanceId> estimations_on(const era::Store & store, InstanceId element)
{
  return store.relations_where(m::kEstimation, m::role::kEstimated, element);
}

std::vector<InstanceId> required_functions_of(const era::Store & store, InstanceId action)
{
  std::set<InstanceId> out;
  for (auto fr : store.relations_where(m::kFunctionalRequirement, m::role::kAction, action)) {
    for (auto f : store.get(fr).fillers(m::role::kRequiredFunction)) {
      out.insert(f);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<InstanceId> design_components(const era::Store & store, InstanceId fd)
{
  return store.get(fd).fillers(m::role::kRequiredComponent);
}

InstanceId design_function(const era::Store & store, InstanceId fd)
{
  return store.get(fd).fillers(m::role::kFunction).at(0);
}

InstanceId configuration_component(const era::Store & store, InstanceId cc)
{
  return store.get(cc).fillers(m::role::kComponent).at(0);
}

std::optional<InstanceId> selected_function_design(const era::Store & store, InstanceId f)
{
  for (auto fd : function_designs_of(store, f)) {
    if (m::flag(store, fd, m::attr::kIsSelected)) {
      return fd;
    }
  }
  return std::nullopt;
}

std::optional<InstanceId> selected_configuration(const era::Store & store, InstanceId comp)
{
  for (auto cc : configurations_of(store, comp)) {
    if (m::flag(store, cc, m::attr::kIsSelected)) {
      return cc;
    }
  }
  return std::nullopt;
}

void sort_by_priority(const era::Store & store, std::vector<InstanceId> & ids)
{
  auto key = [&store](InstanceId id) {
      const auto * p = store.get(id).get(m::attr::kPriority);
      std::int64_t prio = p ? p->as_integer() : std::numeric_limits<std::int64_t>::max();
      return std::make_pair(prio, m::name_of(store, id));
    };
  std::stable_sort(
    ids.begin(), ids.end(), [&key](InstanceId a, InstanceId b) {return key(a) < key(b);});
}

// ---------------------------------------------------------------------------
// evaluation

StatusSnapshot compute_snapshot(const era::Store & store)
{
  StatusSnapshot snap;
  snap.epoch = store.epoch();
  auto & st = snap.status;

  // Stratum 1: constraints. Remember which elements carry a violation.
  std::set<InstanceId> violated_elements;
  for (auto c : store.instances_of(m::kConstraint)) {
    const auto & inst = store.get(c);
    auto measure = inst.fillers(m::role::kMeasure).at(0);
    const auto & s = constraint_status(
      inst.get(m::attr::kOperator)->as_string(), inst.get(m::attr::kValue)->as_double(),
      latest_measurement(store, measure));
    st[c] = s;
    if (s == status::kViolated) {
      for (auto e : inst.fillers(m::role::kConstrained)) {
        violated_elements.insert(e);
      }
    }
  }
  auto violated = [&violated_elements](InstanceId id) {
      return violated_elements.count(id) > 0;
    };

  // Requiredness only depends on stored facts (open requests, selections).
  for (auto a : store.instances_of(m::kAction)) {
    if (open_required_action(store, a)) {
      snap.required.insert(a);
      for (auto f : required_functions_of(store, a)) {
        snap.required.insert(f);
      }
    }
  }
  for (auto f : store.instances_of(m::kFunction)) {
    if (!snap.is_required(f)) {
      continue;
    }
    for (auto fd : function_designs_of(store, f)) {
      if (m::flag(store, fd, m::attr::kIsSelected)) {
        for (auto c : design_components(store, fd)) {
          snap.required.insert(c);
        }
      }
    }
  }

  // Stratum 2: configurations, then components.
  for (auto cc : store.instances_of(m::kComponentConfiguration)) {
    st[cc] = configuration_status(violated(cc));
  }
  for (auto comp : store.instances_of(m::kComponent)) {
    ComponentFacts facts;
    const auto * stored = store.get(comp).get(m::attr::kStatus);
    facts.failure_flag = stored != nullptr && stored->as_string() == status::kFailure;
    facts.constraint_violated = violated(comp);
    facts.required = snap.is_required(comp);
    auto configs = configurations_of(store, comp);
    facts.has_configurations = !configs.empty();
    if (auto sel = selected_configuration(store, comp)) {
      facts.has_selected_configuration = true;
      facts.selected_configuration_unfeasible = st.at(*sel) == status::kUnfeasible;
    }
    st[comp] = component_status(facts);
  }

  // Stratum 3: function designs.
  for (auto fd : store.instances_of(m::kFunctionDesign)) {
    bool broken = false;
    for (auto c : design_components(store, fd)) {
      const auto & cs = st.at(c);
      broken = broken || cs == status::kFailure || cs == status::kUnfeasible;
    }
    st[fd] = function_design_status(violated(fd), broken);
  }

  // Stratum 4: functions.
  for (auto f : store.instances_of(m::kFunction)) {
    FunctionFacts facts;
    facts.required = snap.is_required(f);
    for (auto fd : function_designs_of(store, f)) {
      ++facts.designs;
      if (st.at(fd) == status::kUnfeasible) {
        ++facts.unfeasible_designs;
      }
    }
    if (auto sel = selected_function_design(store, f)) {
      facts.has_selected_design = true;
      facts.selected_design_unfeasible = st.at(*sel) == status::kUnfeasible;
    }
    st[f] = function_status(facts);
  }

  // Stratum 5: actions.
  for (auto a : store.instances_of(m::kAction)) {
    bool exhausted = false;
    for (auto f : required_functions_of(store, a)) {
      exhausted = exhausted || st.at(f) == status::kUnfeasible;
    }
    st[a] = action_status(violated(a), exhausted);
  }
  return snap;
}

// ---------------------------------------------------------------------------
// Reasoner

Reasoner::Reasoner(const era::Store & store)
: store_(store)
{
}

std::shared_ptr<const StatusSnapshot> Reasoner::snapshot() const
{
  std::lock_guard<std::mutex> lock(mutex_);
  if (!cache_ || cache_->epoch != store_.epoch()) {
    cache_ = std::make_shared<const StatusSnapshot>(compute_snapshot(store_));
    ++evaluations_;
  }
  return cache_;
}

std::size_t Reasoner::evaluations() const
{
  std::lock_guard<std::mutex> lock(mutex_);
  return evaluations_;
}

std::string Reasoner::status(InstanceId id) const
{
  return snapshot()->of(id);
}

bool Reasoner::is_required(InstanceId id) const
{
  return snapshot()->is_required(id);
}

std::vector<InstanceId> Reasoner::selectable_actions() const
{
  auto snap = snapshot();
  std::vector<InstanceId> out;
  for (auto a : store_.instances_of(m::kAction)) {
    if (snap->of(a) != status::kUnfeasible) {
      out.push_back(a);
    }
  }
  return out;
}

std::vector<InstanceId> Reasoner::adaptable(const std::string & type) const
{
  auto snap = snapshot();
  std::vector<InstanceId> out;
  for (auto id : store_.instances_of(type)) {
    if (!snap->is_required(id)) {
      continue;
    }
    const auto & s = snap->of(id);
    if (s == status::kUnsolved || s == status::kConfigurationError ||
      m::flag(store_, id, m::attr::kAlwaysImprove))
    {
      out.push_back(id);
    }
  }
  return out;
}

std::vector<InstanceId> Reasoner::adaptable_functions() const
{
  return adaptable(m::kFunction);
}

std::vector<InstanceId> Reasoner::adaptable_components() const
{
  return adaptable(m::kComponent);
}

std::vector<InstanceId> Reasoner::selectable_function_designs(InstanceId f) const
{
  auto snap = snapshot();
  std::vector<InstanceId> out;
  for (auto fd : function_designs_of(store_, f)) {
    if (snap->of(fd) == status::kFeasible) {
      out.push_back(fd);
    }
  }
  sort_by_priority(store_, out);
  return out;
}

std::vector<InstanceId> Reasoner::selectable_component_configurations(InstanceId comp) const
{
  auto snap = snapshot();
  std::vector<InstanceId> out;
  for (auto cc : configurations_of(store_, comp)) {
    if (snap->of(cc) == status::kFeasible) {
      out.push_back(cc);
    }
  }
  sort_by_priority(store_, out);
  return out;
}

era::DerivedAttributes Reasoner::derived_attributes() const
{
  auto snap = snapshot();
  return [snap](const era::Instance & inst, const std::string & attr) -> std::optional<era::Value> {
           if (attr == m::attr::kStatus) {
             if (const auto * s = snap->find(inst.id)) {
               return era::Value(*s);
             }
           } else if (attr == m::attr::kIsRequired) {
             if (inst.type_name == m::kAction || inst.type_name == m::kFunction ||
               inst.type_name == m::kComponent)
             {
               return era::Value(snap->is_required(inst.id));
             }
           }
           return std::nullopt;
         };
}

std::vector<era::Binding> Reasoner::match(const era::Pattern & pattern) const
{
  return store_.match(pattern, derived_attributes());
}

}  // namespace rosa::inference
