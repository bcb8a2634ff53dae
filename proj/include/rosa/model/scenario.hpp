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

#ifndef ROSA__MODEL__SCENARIO_HPP_
#define ROSA__MODEL__SCENARIO_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rosa::model
{

/// Load or parse failure. `line` and `column` are 1-based; 0 when the error
/// is not tied to a source position.
class ScenarioError : public std::runtime_error
{
public:
  ScenarioError(const std::string & message, int line = 0, int column = 0);

  int line() const {return line_;}
  int column() const {return column_;}
  const std::string & detail() const {return detail_;}

private:
  std::string detail_;
  int line_;
  int column_;
};

// ---------------------------------------------------------------------------
// model section

struct ActionDecl
{
  std::string name;
  int line{0};
};

struct FunctionDecl
{
  std::string name;
  bool always_improve{false};
  int line{0};
};

struct ComponentDecl
{
  std::string name;
  bool always_improve{false};
  std::string package;
  std::string executable;
  bool lifecycle{false};
  int line{0};
};

/// A component parameter. The label only exists in the file so that
/// configurations can refer to it.
struct ParameterDecl
{
  std::string label;
  std::string key;
  std::string value;
  int line{0};
};

enum class MeasureKind { Plain, Quality, Environmental };

struct MeasureDecl
{
  std::string name;
  MeasureKind kind{MeasureKind::Plain};
  int line{0};
};

struct FunctionalRequirementDecl
{
  std::string action;
  std::vector<std::string> functions;
  int line{0};
};

struct FunctionDesignDecl
{
  std::string name;
  std::string function;
  std::vector<std::string> components;
  std::optional<std::int64_t> priority;
  int line{0};
};

struct ConfigurationDecl
{
  std::string name;
  std::string component;
  std::vector<std::string> parameters;  // parameter labels
  std::optional<std::int64_t> priority;
  int line{0};
};

struct ConstraintDecl
{
  std::string measure;
  std::string op;
  double value{0.0};
  std::string element;
  int line{0};
};

struct EstimationDecl
{
  std::string measure;
  std::string type;  // "maximize" or "minimize"
  double value{0.0};
  std::string element;
  int line{0};
};

struct ModelSection
{
  std::vector<ActionDecl> actions;
  std::vector<FunctionDecl> functions;
  std::vector<ComponentDecl> components;
  std::vector<ParameterDecl> parameters;
  std::vector<MeasureDecl> measures;
  std::vector<FunctionalRequirementDecl> requirements;
  std::vector<FunctionDesignDecl> designs;
  std::vector<ConfigurationDecl> configurations;
  std::vector<ConstraintDecl> constraints;
  std::vector<EstimationDecl> estimations;
};

// ---------------------------------------------------------------------------
// timeline section

enum class TimelineKind { Measurement, ComponentFailure, ComponentRecovery };

struct TimelineEvent
{
  std::int64_t tick{0};
  TimelineKind kind{TimelineKind::Measurement};
  std::string target;  // measure or component name
  double value{0.0};  // measurements only
  std::string label;  // uncertainty label, empty when unlabeled
  int line{0};
};

// ---------------------------------------------------------------------------
// plant section

struct BehaviorDecl
{
  std::string name;
  std::string kind;
  std::vector<std::string> requires_components;
  std::map<std::string, std::string> params;
  int line{0};
};

struct CorridorDecl
{
  std::string name;
  std::string from;
  std::string to;
  double length{0.0};
  int line{0};
};

struct MonitorDecl
{
  std::string measure;
  std::string variable;
  std::int64_t period{1};
  int line{0};
};

/// Maps the value of a component parameter to a plant rate multiplier.
struct FactorDecl
{
  std::string key;
  std::map<std::string, double> factors;
  int line{0};
};

struct PlantSection
{
  std::map<std::string, std::string> settings;
  std::vector<std::string> consumers;
  std::vector<MonitorDecl> monitors;
  std::vector<FactorDecl> factors;
  std::vector<CorridorDecl> corridors;
  std::vector<BehaviorDecl> behaviors;
};

// ---------------------------------------------------------------------------
// mission section

enum class MissionNodeKind { Sequence, Fallback, Condition, Action, Leaf };

struct MissionNode
{
  MissionNodeKind kind{MissionNodeKind::Sequence};
  std::string name;  // composites: optional label
  std::string action;  // Condition and Action
  std::string behavior;  // Action and Leaf
  std::string preferred_measure;  // Action, optional
  std::vector<MissionNode> children;
  int line{0};
};

/// Known domain behavior kinds (plant section `behavior` statements).
const std::vector<std::string> & behavior_kinds();

struct ScenarioDocument
{
  ModelSection model;
  std::vector<TimelineEvent> timeline;
  PlantSection plant;
  std::optional<MissionNode> mission;
};

std::string to_string(MeasureKind kind);
std::string to_string(TimelineKind kind);
std::string to_string(MissionNodeKind kind);

}  // namespace rosa::model

#endif  // ROSA__MODEL__SCENARIO_HPP_
