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

#include "rosa/sim/plant.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace rosa::sim
{

namespace
{

// Plant settings that are model parameters rather than state variables.
const std::set<std::string> kParameterSettings = {
  "discharge_rate", "recharge_rate", "water_visibility_walk"};
const std::string kStartFailurePrefix = "start_failure.";

std::optional<double> to_double(const std::string & text)
{
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return v;
}

double clamp01(double v)
{
  return std::clamp(v, 0.0, 1.0);
}

// Diagnostics carry numbers rounded to 1e-6 in their shortest text form.
std::string reading_text(double v)
{
  double r = std::round(v * 1e6) / 1e6;
  if (r == 0.0) {
    r = 0.0;  // no "-0"
  }
  char buf[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, r);
    if (std::strtod(buf, nullptr) == r) {
      break;
    }
  }
  return buf;
}

}  // namespace

double PlantState::var(const std::string & name) const
{
  auto it = vars.find(name);
  return it == vars.end() ? 0.0 : it->second;
}

Simulator::Simulator(const model::ScenarioDocument & doc, std::uint64_t seed)
: doc_(doc), rng_(seed)
{
  for (const auto & c : doc.model.components) {
    processes_.add(c.name);
  }
  for (const auto & [key, value] : doc.plant.settings) {
    if (key == "position") {
      state_.position = value;
    } else if (key.rfind(kStartFailurePrefix, 0) == 0) {
      const std::string comp = key.substr(kStartFailurePrefix.size());
      std::size_t pos = 0;
      while (pos <= value.size()) {
        auto comma = value.find(',', pos);
        if (comma == std::string::npos) {comma = value.size();}
        auto t = to_double(value.substr(pos, comma - pos));
        if (!t) {
          throw std::invalid_argument("bad start failure tick list for '" + comp + "'");
        }
        processes_.script_start_failure(comp, static_cast<std::int64_t>(*t));
        pos = comma + 1;
      }
    } else if (kParameterSettings.count(key) == 0) {
      auto v = to_double(value);
      if (!v) {
        throw std::invalid_argument("plant variable '" + key + "' is not a number");
      }
      state_.vars[key] = *v;
    }
  }
  if (state_.vars.count(kBattery)) {
    state_.vars[kBattery] = clamp01(state_.vars[kBattery]);
  }
  for (const auto & mon : doc.plant.monitors) {
    monitor_vars_[mon.measure] = mon.variable;
  }
  for (const auto & b : doc.plant.behaviors) {
    behaviors_[b.name] = Behavior{b, 0.0};
  }
}

double Simulator::setting(const std::string & key, double fallback) const
{
  auto it = doc_.plant.settings.find(key);
  if (it == doc_.plant.settings.end()) {
    return fallback;
  }
  auto v = to_double(it->second);
  return v ? *v : fallback;
}

double Simulator::param(const Behavior & b, const std::string & key, double fallback) const
{
  auto it = b.decl.params.find(key);
  if (it == b.decl.params.end()) {
    return fallback;
  }
  auto v = to_double(it->second);
  if (!v) {
    throw std::invalid_argument(
            "behavior '" + b.decl.name + "': option '" + key + "' is not a number");
  }
  return *v;
}

void Simulator::set_var(const std::string & name, double value)
{
  state_.vars[name] = name == kBattery ? clamp01(value) : value;
}

std::string Simulator::measurement_kind(const std::string & measure) const
{
  for (const auto & ms : doc_.model.measures) {
    if (ms.name == measure && ms.kind == model::MeasureKind::Environmental) {
      return mapek::diagnostic::kEaMeasurement;
    }
  }
  return mapek::diagnostic::kQaMeasurement;
}

std::vector<mapek::Diagnostic> Simulator::step(std::int64_t tick)
{
  if (last_step_ && tick != *last_step_ + 1) {
    throw std::logic_error("simulator ticks must advance by one");
  }
  if (last_step_) {
    bool consuming = false;
    for (const auto & c : doc_.plant.consumers) {
      consuming = consuming || (processes_.running(c) && state_.failed_components.count(c) == 0);
    }
    if (consuming && state_.vars.count(kBattery)) {
      set_var(kBattery, state_.var(kBattery) - setting("discharge_rate", 0.0));
    }
    double walk = setting("water_visibility_walk", 0.0);
    if (walk > 0.0 && state_.vars.count(kWaterVisibility)) {
      std::normal_distribution<double> noise(0.0, walk);
      set_var(kWaterVisibility, std::max(0.0, state_.var(kWaterVisibility) + noise(rng_)));
    }
  }
  last_step_ = tick;
  state_.tick = tick;

  std::vector<mapek::Diagnostic> out;
  const auto & timeline = doc_.timeline;
  while (next_timeline_ < timeline.size() && timeline[next_timeline_].tick <= tick) {
    const auto & ev = timeline[next_timeline_++];
    switch (ev.kind) {
      case model::TimelineKind::Measurement: {
          auto var = monitor_vars_.find(ev.target);
          if (var != monitor_vars_.end()) {
            set_var(var->second, ev.value);
          }
          out.push_back(
            {"timeline", measurement_kind(ev.target), ev.target, reading_text(ev.value), tick});
          break;
        }
      case model::TimelineKind::ComponentFailure:
        state_.failed_components.insert(ev.target);
        out.push_back(
          {"timeline", mapek::diagnostic::kComponentStatus, ev.target,
            mapek::diagnostic::kFailureValue, tick});
        break;
      case model::TimelineKind::ComponentRecovery:
        state_.failed_components.erase(ev.target);
        out.push_back(
          {"timeline", mapek::diagnostic::kComponentStatus, ev.target,
            mapek::diagnostic::kRecoveredValue, tick});
        break;
    }
  }
  for (const auto & mon : doc_.plant.monitors) {
    if (tick % mon.period == 0) {
      out.push_back(
        {"monitor", measurement_kind(mon.measure), mon.measure,
          reading_text(state_.var(mon.variable)), tick});
    }
  }
  return out;
}

std::vector<model::TimelineEvent> Simulator::labeled_events() const
{
  std::vector<model::TimelineEvent> out;
  for (const auto & ev : doc_.timeline) {
    if (!ev.label.empty()) {
      out.push_back(ev);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// ManagedSystem

std::optional<std::int64_t> Simulator::start_process(
  const std::string & component, const mapek::ParameterMap & parameters, std::int64_t tick)
{
  // A failed component cannot be brought up until it recovers.
  bool refuse = state_.failed_components.count(component) > 0;
  return processes_.start(component, parameters, tick, refuse);
}

void Simulator::stop_process(const std::string & component, std::int64_t)
{
  processes_.stop(component);
}

void Simulator::set_parameters(
  const std::string & component, const mapek::ParameterMap & parameters, std::int64_t)
{
  processes_.set_parameters(component, parameters);
}

// ---------------------------------------------------------------------------
// behaviors

bool Simulator::components_ready(const Behavior & b) const
{
  for (const auto & c : b.decl.requires_components) {
    if (!processes_.running(c) || state_.failed_components.count(c) > 0) {
      return false;
    }
  }
  return true;
}

double Simulator::rate_factor(const Behavior & b) const
{
  double factor = 1.0;
  for (const auto & f : doc_.plant.factors) {
    for (const auto & c : b.decl.requires_components) {
      auto value = processes_.parameter(c, f.key);
      if (!value) {
        continue;
      }
      auto it = f.factors.find(*value);
      if (it != f.factors.end()) {
        factor *= it->second;
      }
      break;
    }
  }
  return factor;
}

bt::TickResult Simulator::tick_behavior(const std::string & name, std::int64_t)
{
  auto it = behaviors_.find(name);
  if (it == behaviors_.end()) {
    throw std::out_of_range("unknown behavior '" + name + "'");
  }
  Behavior & b = it->second;
  const auto & kind = b.decl.kind;
  if (kind == "search") {return tick_search(b);}
  if (kind == "inspect") {return tick_inspect(b);}
  if (kind == "recharge") {return tick_recharge(b);}
  if (kind == "traverse") {return tick_traverse(b);}
  if (kind == "timed") {return tick_timed(b);}
  if (kind == "check") {return tick_check(b);}
  return bt::TickResult::Running;  // wait
}

void Simulator::halt_behavior(const std::string & name, std::int64_t)
{
  auto it = behaviors_.find(name);
  if (it == behaviors_.end()) {
    return;
  }
  Behavior & b = it->second;
  if (b.decl.kind == "recharge") {
    state_.flags.erase(kRecharging);
  }
  if (b.decl.kind == "traverse" || b.decl.kind == "timed") {
    b.progress = 0.0;
  }
}

bt::TickResult Simulator::tick_search(Behavior & b)
{
  if (state_.flag(kPipelineFound)) {
    return bt::TickResult::Success;
  }
  if (components_ready(b)) {
    state_.vars[kSearchProgress] = state_.var(kSearchProgress) + param(b, "rate", 1.0) *
      rate_factor(b);
    if (state_.var(kSearchProgress) >= param(b, "target", 100.0)) {
      state_.flags.insert(kPipelineFound);
      state_.pipeline_found_tick = state_.tick;
      return bt::TickResult::Success;
    }
  }
  return bt::TickResult::Running;
}

bt::TickResult Simulator::tick_inspect(Behavior & b)
{
  if (!state_.flag(kPipelineFound)) {
    return bt::TickResult::Failure;
  }
  const double target = param(b, "distance", 100.0);
  if (state_.var(kInspectedDistance) >= target) {
    return bt::TickResult::Success;
  }
  if (components_ready(b)) {
    state_.vars[kInspectedDistance] = state_.var(kInspectedDistance) + param(b, "rate", 1.0) *
      rate_factor(b);
    if (state_.var(kInspectedDistance) >= target) {
      state_.flags.insert(kInspectionDone);
      return bt::TickResult::Success;
    }
  }
  return bt::TickResult::Running;
}

bt::TickResult Simulator::tick_recharge(Behavior & b)
{
  const double until = param(b, "until", 1.0);
  state_.flags.insert(kRecharging);
  if (components_ready(b)) {
    set_var(kBattery, state_.var(kBattery) + setting("recharge_rate", 0.0));
  }
  if (state_.var(kBattery) >= until) {
    state_.flags.erase(kRecharging);
    return bt::TickResult::Success;
  }
  return bt::TickResult::Running;
}

bt::TickResult Simulator::tick_traverse(Behavior & b)
{
  const std::string & name = b.decl.params.at("corridor");
  const std::string done = "traversed:" + name;
  if (state_.flag(done)) {
    return bt::TickResult::Success;
  }
  const model::CorridorDecl * corridor = nullptr;
  for (const auto & c : doc_.plant.corridors) {
    if (c.name == name) {
      corridor = &c;
    }
  }
  if (corridor == nullptr || state_.position != corridor->from) {
    return bt::TickResult::Failure;
  }
  if (components_ready(b)) {
    b.progress += param(b, "speed", 1.0) * rate_factor(b);
    if (b.progress >= corridor->length) {
      b.progress = 0.0;
      state_.position = corridor->to;
      state_.flags.insert(done);
      state_.route.push_back(name);
      return bt::TickResult::Success;
    }
  }
  return bt::TickResult::Running;
}

bt::TickResult Simulator::tick_timed(Behavior & b)
{
  auto sets = b.decl.params.find("sets");
  if (sets != b.decl.params.end() && state_.flag(sets->second)) {
    return bt::TickResult::Success;
  }
  if (components_ready(b)) {
    auto start = b.decl.params.find("start");
    if (start != b.decl.params.end()) {
      state_.flags.insert(start->second);
    }
    b.progress += rate_factor(b);
    if (b.progress >= param(b, "duration", 1.0)) {
      b.progress = 0.0;
      if (sets != b.decl.params.end()) {
        state_.flags.insert(sets->second);
      }
      auto clears = b.decl.params.find("clears");
      if (clears != b.decl.params.end()) {
        state_.flags.erase(clears->second);
      }
      return bt::TickResult::Success;
    }
  }
  return bt::TickResult::Running;
}

bt::TickResult Simulator::tick_check(const Behavior & b) const
{
  bool ok = true;
  auto flag = b.decl.params.find("flag");
  if (flag != b.decl.params.end()) {
    std::string name = flag->second;
    bool negate = !name.empty() && name.front() == '!';
    if (negate) {
      name.erase(0, 1);
    }
    ok = ok && (state_.flag(name) != negate);
  }
  auto at = b.decl.params.find("at");
  if (at != b.decl.params.end()) {
    ok = ok && state_.position == at->second;
  }
  return ok ? bt::TickResult::Success : bt::TickResult::Failure;
}

}  // namespace rosa::sim
