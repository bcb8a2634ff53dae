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

#include "rosa/sim/trace.hpp"

#include <cmath>
#include <sstream>

namespace rosa::sim
{

double round6(double v)
{
  double r = std::round(v * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;
}

nlohmann::json PlanRecord::to_json() const
{
  return {
    {"id", id},
    {"activate", activations},
    {"deactivate", deactivations},
    {"adapt", adaptations},
    {"result", result}};
}

std::string format_metrics(const Metrics & m)
{
  std::ostringstream out;
  out << "result: " << m.result << '\n';
  out << "ticks: " << m.ticks << '\n';
  out << "search_time: ";
  if (m.search_time) {
    out << *m.search_time;
  } else {
    out << "none";
  }
  out << '\n';
  out << "distance_inspected: " << nlohmann::json(round6(m.distance_inspected)).dump() << '\n';
  out << "plans: " << m.plans << '\n';
  out << "failed_plans: " << m.failed_plans << '\n';
  out << "engine_cycles: " << m.engine_cycles << '\n';
  if (!m.route.empty()) {
    out << "route: ";
    for (std::size_t i = 0; i < m.route.size(); ++i) {
      out << (i ? "," : "") << m.route[i];
    }
    out << '\n';
  }
  for (const auto & [label, ticks] : m.reaction_ticks) {
    out << "reaction_ticks." << label << ": ";
    if (ticks) {
      out << *ticks;
    } else {
      out << "none";
    }
    out << '\n';
  }
  return out.str();
}

std::optional<std::int64_t> reaction_ticks(
  std::int64_t event_tick, const std::vector<PlanRecord> & plans,
  const std::vector<ActionRecord> & actions, const std::vector<FeasibilityRecord> & flips)
{
  std::optional<std::int64_t> first;
  auto consider = [&](std::int64_t t) {
      if (t >= event_tick && (!first || t < *first)) {
        first = t;
      }
    };
  for (const auto & p : plans) {
    if (!p.result.empty()) {
      consider(p.tick);
    }
  }
  for (const auto & a : actions) {
    consider(a.tick);
  }
  for (const auto & f : flips) {
    consider(f.tick);
  }
  if (!first) {
    return std::nullopt;
  }
  return *first - event_tick;
}

}  // namespace rosa::sim
