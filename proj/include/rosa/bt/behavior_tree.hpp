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

#ifndef ROSA__BT__BEHAVIOR_TREE_HPP_
#define ROSA__BT__BEHAVIOR_TREE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rosa/mapek/knowledge_base.hpp"
#include "rosa/model/scenario.hpp"

namespace rosa::bt
{

enum class TickResult { Success, Failure, Running };

std::string_view to_string(TickResult result);

/// Domain behaviors the leaves delegate to (implemented by the simulator).
class DomainBehaviors
{
public:
  virtual ~DomainBehaviors() = default;
  virtual TickResult tick_behavior(const std::string & name, std::int64_t tick) = 0;
  virtual void halt_behavior(const std::string & name, std::int64_t tick) = 0;
};

class TreeError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// One ticked node: "<path> <result>".
struct NodeTrace
{
  std::string path;
  TickResult result;
};

/// A RequiredAction opened or closed by a RosaAction node.
struct ActionTransition
{
  std::string action;
  bool opened{false};
  std::string result;  // closing result: success, failure or halted
};

/// Reactive (memory-less) behavior tree with feasibility-gated actions.
/// Sequence and Fallback re-tick from their first child every tick and halt
/// children that are no longer reached.
class BehaviorTree
{
public:
  /// Builds the tree and resolves every action name. Throws TreeError for
  /// names absent from the model.
  BehaviorTree(const model::MissionNode & root, mapek::KnowledgeBase & kb, DomainBehaviors & domain);
  ~BehaviorTree();

  BehaviorTree(const BehaviorTree &) = delete;
  BehaviorTree & operator=(const BehaviorTree &) = delete;

  TickResult tick(std::int64_t tick);

  /// Halts every running node; open RequiredActions close as "halted".
  void halt(std::int64_t tick);

  /// Nodes ticked and actions opened/closed during the last tick() or halt().
  const std::vector<NodeTrace> & last_trace() const {return trace_;}
  const std::vector<ActionTransition> & last_transitions() const {return transitions_;}

  struct Node;

private:
  std::unique_ptr<Node> build(const model::MissionNode & spec, const std::string & parent_path);
  TickResult tick_node(Node & node);
  void halt_node(Node & node);

  mapek::KnowledgeBase & kb_;
  DomainBehaviors & domain_;
  std::unique_ptr<Node> root_;
  std::int64_t now_{0};
  std::vector<NodeTrace> trace_;
  std::vector<ActionTransition> transitions_;
};

}  // namespace rosa::bt

#endif  // ROSA__BT__BEHAVIOR_TREE_HPP_
