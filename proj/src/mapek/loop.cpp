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

#include "rosa/mapek/loop.hpp"

#include <stdexcept>

namespace rosa::mapek
{

MapekLoop::MapekLoop(KnowledgeBase & kb, ManagedSystem & system)
: kb_(kb), system_(system)
{
  build();
}

void MapekLoop::build()
{
  planner_ = std::make_unique<Planner>(kb_);
  executor_ = std::make_unique<Executor>(kb_, system_);
}

std::vector<CycleRecord> MapekLoop::run_pending()
{
  std::vector<CycleRecord> records;
  auto & bus = kb_.bus();
  while (!bus.empty()) {
    if (records.size() >= kMaxEventsPerDrain) {
      throw std::runtime_error("event storm: too many events in one drain");
    }
    if (rebuild_) {
      planner_.reset();
      executor_.reset();
      build();
      ++rebuilds_;
    }
    CycleRecord rec{bus.pop(), std::nullopt, std::nullopt};
    rec.plan = planner_->handle(rec.event);
    rec.result = executor_->handle(rec.event);
    ++cycles_;
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace rosa::mapek
