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

#ifndef ROSA__MODEL__SCENARIO_PARSER_HPP_
#define ROSA__MODEL__SCENARIO_PARSER_HPP_

#include <string>
#include <string_view>

#include "rosa/model/scenario.hpp"

namespace rosa::model
{

inline constexpr std::string_view kScenarioHeader = "rosa-scenario v1";

/// Parses scenario text. Only syntax and literal values are checked here;
/// name resolution happens in load_scenario(). Throws ScenarioError with the
/// offending line and column.
ScenarioDocument parse_scenario(std::string_view text);

/// Emits the canonical text form of `doc`. parse_scenario(write_scenario(d))
/// reproduces `d` up to source line numbers.
std::string write_scenario(const ScenarioDocument & doc);

}  // namespace rosa::model

#endif  // ROSA__MODEL__SCENARIO_PARSER_HPP_
