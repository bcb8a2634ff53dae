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

#include "rosa/mapek/event.hpp"

#include <stdexcept>

namespace rosa::mapek
{

std::string_view to_string(EventKind kind)
{
  switch (kind) {
    case EventKind::InsertMonitoringData: return "insert monitoring data";
    case EventKind::ActionUpdate: return "action update";
    case EventKind::ReconfigurationPlan: return "reconfiguration plan";
  }
  return "insert monitoring data";
}

std::string format_event(const Event & event)
{
  return std::to_string(event.tick) + " " + std::string(to_string(event.kind)) + " " +
         std::to_string(event.epoch);
}

void EventBus::publish(Event event)
{
  log_.push_back(event);
  queue_.push_back(std::move(event));
}

Event EventBus::pop()
{
  if (queue_.empty()) {
    throw std::logic_error("pop on empty event bus");
  }
  Event e = queue_.front();
  queue_.pop_front();
  return e;
}

}  // namespace rosa::mapek
