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

#ifndef ROSA__MAPEK__PLANNER_HPP_
#define ROSA__MAPEK__PLANNER_HPP_

#include <optional>
#include <vector>

#include "rosa/mapek/knowledge_base.hpp"

namespace rosa::mapek
{

/// Configuration planner. Holds nothing but a reference to the knowledge
/// base, so it can be destroyed and recreated between any two events.
class Planner
{
public:
  explicit Planner(KnowledgeBase & kb);

  /// Reacts to "insert monitoring data" (plans only when something changes)
  /// and "action update" (always recomputes the plan, since the required set
  /// moved). Returns the recorded plan, if any.
  std::optional<era::InstanceId> handle(const Event & event);

  /// Picks the best selectable design of every adaptable function, writes
  /// those selections, then does the same for the adaptable components.
  /// Returns only the selections that differ from the current ones.
  SelectionDelta plan_configuration();

  /// Best candidate: estimation on the preferred measure when the owner's
  /// open request names one and some candidate has an estimation for it,
  /// otherwise lowest priority number, ties by name. `candidates` must be
  /// priority ordered.
  std::optional<era::InstanceId> best_candidate(
    era::InstanceId owner, const std::vector<era::InstanceId> & candidates) const;

private:
  KnowledgeBase & kb_;
};

}  // namespace rosa::mapek

#endif  // ROSA__MAPEK__PLANNER_HPP_
