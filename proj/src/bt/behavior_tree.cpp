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

#include "rosa/bt/behavior_tree.hpp"

#include "rosa/model/rosa_schema.hpp"

namespace rosa::bt
{

namespace m = rosa::model;
using model::MissionNodeKind;

std::string_view to_string(TickResult result)
{
  switch (result) {
    case TickResult::Success: return "success";
    case TickResult::Failure: return "failure";
    case TickResult::Running: return "running";
  }
  return "failure";
}

struct BehaviorTree::Node
{
  MissionNodeKind kind;
  std::string path;
  std::string behavior;
  std::optional<era::InstanceId> action;
  std::optional<era::InstanceId> preferred_measure;
  std::vector<std::unique_ptr<Node>> children;
  bool running{false};  // ticked last time and returned running
};

BehaviorTree::BehaviorTree(
  const model::MissionNode & root, mapek::KnowledgeBase & kb, DomainBehaviors & domain)
: kb_(kb), domain_(domain)
{
  root_ = build(root, "");
}

BehaviorTree::~BehaviorTree() = default;

std::unique_ptr<BehaviorTree::Node> BehaviorTree::build(
  const model::MissionNode & spec, const std::string & parent_path)
{
  auto node = std::make_unique<Node>();
  node->kind = spec.kind;
  node->behavior = spec.behavior;
  std::string label = model::to_string(spec.kind);
  switch (spec.kind) {
    case MissionNodeKind::Sequence:
    case MissionNodeKind::Fallback:
      if (!spec.name.empty()) {label += ":" + spec.name;}
      break;
    case MissionNodeKind::Condition:
    case MissionNodeKind::Action: {
        auto id = m::find_named(kb_.store(), m::kAction, spec.action);
        if (!id) {
          throw TreeError("mission refers to unknown action '" + spec.action + "'");
        }
        node->action = id;
        label += ":" + spec.action;
        if (!spec.preferred_measure.empty()) {
          auto measure = m::find_named(kb_.store(), m::kMeasure, spec.preferred_measure);
          if (!measure) {
            throw TreeError("mission refers to unknown measure '" + spec.preferred_measure + "'");
          }
          node->preferred_measure = measure;
        }
        break;
      }
    case MissionNodeKind::Leaf:
      label += ":" + spec.behavior;
      break;
  }
  node->path = parent_path.empty() ? label : parent_path + "/" + label;
  if (!spec.children.empty() && spec.kind != MissionNodeKind::Sequence &&
    spec.kind != MissionNodeKind::Fallback)
  {
    throw TreeError(label + " cannot have children");
  }
  for (const auto & child : spec.children) {
    node->children.push_back(build(child, node->path));
  }
  return node;
}

TickResult BehaviorTree::tick(std::int64_t tick)
{
  now_ = tick;
  trace_.clear();
  transitions_.clear();
  return tick_node(*root_);
}

void BehaviorTree::halt(std::int64_t tick)
{
  now_ = tick;
  trace_.clear();
  transitions_.clear();
  halt_node(*root_);
}

TickResult BehaviorTree::tick_node(Node & node)
{
  TickResult result = TickResult::Failure;
  switch (node.kind) {
    case MissionNodeKind::Sequence:
    case MissionNodeKind::Fallback: {
        // Sequence stops at the first non-success, fallback at the first
        // non-failure; the remaining children are halted.
        const TickResult pass =
          node.kind == MissionNodeKind::Sequence ? TickResult::Success : TickResult::Failure;
        result = pass;
        std::size_t i = 0;
        for (; i < node.children.size(); ++i) {
          result = tick_node(*node.children[i]);
          if (result != pass) {
            ++i;
            break;
          }
        }
        for (; i < node.children.size(); ++i) {
          halt_node(*node.children[i]);
        }
        if (result != TickResult::Running) {
          // Finished: nothing below may stay running.
          for (auto & child : node.children) {
            halt_node(*child);
          }
        }
        break;
      }
    case MissionNodeKind::Condition:
      result = kb_.action_feasible(*node.action) ? TickResult::Success : TickResult::Failure;
      break;
    case MissionNodeKind::Action: {
        // The request is opened on the first running tick; a behavior that
        // completes immediately never needed the architecture.
        result = domain_.tick_behavior(node.behavior, now_);
        if (result == TickResult::Running && !node.running) {
          kb_.action_request_start(*node.action, now_, node.preferred_measure);
          transitions_.push_back({m::name_of(kb_.store(), *node.action), true, ""});
        } else if (result != TickResult::Running && node.running) {
          std::string outcome(to_string(result));
          kb_.action_request_stop(*node.action, now_, outcome);
          transitions_.push_back({m::name_of(kb_.store(), *node.action), false, outcome});
        }
        break;
      }
    case MissionNodeKind::Leaf:
      result = domain_.tick_behavior(node.behavior, now_);
      break;
  }
  node.running = result == TickResult::Running;
  trace_.push_back({node.path, result});
  return result;
}

void BehaviorTree::halt_node(Node & node)
{
  for (auto & child : node.children) {
    halt_node(*child);
  }
  if (!node.running) {
    return;
  }
  node.running = false;
  if (node.kind == MissionNodeKind::Action || node.kind == MissionNodeKind::Leaf) {
    domain_.halt_behavior(node.behavior, now_);
  }
  if (node.kind == MissionNodeKind::Action) {
    kb_.action_request_stop(*node.action, now_, "halted");
    transitions_.push_back({m::name_of(kb_.store(), *node.action), false, "halted"});
  }
}

}  // namespace rosa::bt
