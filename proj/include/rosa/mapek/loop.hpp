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

#ifndef ROSA__MAPEK__LOOP_HPP_
#define ROSA__MAPEK__LOOP_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rosa/mapek/executor.hpp"
#include "rosa/mapek/knowledge_base.hpp"
#include "rosa/mapek/planner.hpp"

namespace rosa::mapek
{

/// Outcome of one engine cycle (one event handled to completion).
struct CycleRecord
{
  Event event;
  std::optional<era::InstanceId> plan;  // recorded by the planner
  std::optional<std::string> result;  // set by the executor
};

/// Single-threaded scheduler for the managing subsystem: drains the events
/// topic in FIFO order, handing each event to the planner and the executor.
class MapekLoop
{
public:
  MapekLoop(KnowledgeBase & kb, ManagedSystem & system);

  /// Handles pending events, including those published while handling,
  /// until the topic is empty.
  std::vector<CycleRecord> run_pending();

  /// When set, the planner and executor are destroyed and rebuilt before
  /// every event. Outputs must not change (they keep no state).
  void set_rebuild_components(bool rebuild) {rebuild_ = rebuild;}
  std::size_t rebuilds() const {return rebuilds_;}

  std::size_t cycles() const {return cycles_;}

  /// Safety valve against event storms within one drain.
  static constexpr std::size_t kMaxEventsPerDrain = 10000;

private:
  void build();

  KnowledgeBase & kb_;
  ManagedSystem & system_;
  std::unique_ptr<Planner> planner_;
  std::unique_ptr<Executor> executor_;
  bool rebuild_{false};
  std::size_t rebuilds_{0};
  std::size_t cycles_{0};
};

}  // namespace rosa::mapek

#endif  // ROSA__MAPEK__LOOP_HPP_
