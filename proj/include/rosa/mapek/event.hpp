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

#ifndef ROSA__MAPEK__EVENT_HPP_
#define ROSA__MAPEK__EVENT_HPP_

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rosa/era/store.hpp"

namespace rosa::mapek
{

enum class EventKind { InsertMonitoringData, ActionUpdate, ReconfigurationPlan };

/// Wire names: "insert monitoring data", "action update", "reconfiguration plan".
std::string_view to_string(EventKind kind);

struct Event
{
  EventKind kind{EventKind::InsertMonitoringData};
  std::uint64_t epoch{0};  // store epoch at publication
  std::int64_t tick{0};
  std::optional<era::InstanceId> plan;  // ReconfigurationPlan events only

  bool operator==(const Event &) const = default;
};

/// "<tick> <kind> <epoch>"
std::string format_event(const Event & event);

/// FIFO events topic. Keeps a log of everything ever published.
class EventBus
{
public:
  void publish(Event event);

  bool empty() const {return queue_.empty();}
  std::size_t pending() const {return queue_.size();}

  /// Removes and returns the oldest pending event. Precondition: !empty().
  Event pop();

  const std::vector<Event> & published() const {return log_;}

private:
  std::deque<Event> queue_;
  std::vector<Event> log_;
};

// ---------------------------------------------------------------------------
// monitor message contract

namespace diagnostic
{
inline const std::string kQaMeasurement = "QA measurement";
inline const std::string kEaMeasurement = "EA measurement";
inline const std::string kComponentStatus = "Component status";
inline const std::string kFailureValue = "failure";
inline const std::string kRecoveredValue = "ok";
}  // namespace diagnostic

struct Diagnostic
{
  std::string source;
  std::string kind;  // one of the diagnostic:: kinds
  std::string key;  // measure or component name
  std::string value;  // number text, or "failure" / "ok" for components
  std::int64_t tick{0};

  bool operator==(const Diagnostic &) const = default;
};

}  // namespace rosa::mapek

#endif  // ROSA__MAPEK__EVENT_HPP_
