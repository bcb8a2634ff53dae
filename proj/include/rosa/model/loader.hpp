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

#ifndef ROSA__MODEL__LOADER_HPP_
#define ROSA__MODEL__LOADER_HPP_

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "rosa/era/store.hpp"
#include "rosa/model/scenario.hpp"

namespace rosa::model
{

struct LoadedScenario
{
  ScenarioDocument document;
  std::unique_ptr<era::Store> store;
};

/// Parses, validates every cross reference and populates a fresh store with
/// the design-time model. Nothing is returned on failure: the whole load
/// throws ScenarioError.
LoadedScenario load_scenario(std::string_view text);
LoadedScenario load_scenario_file(const std::filesystem::path & path);

/// Checks names across all four sections. Throws ScenarioError.
void validate_document(const ScenarioDocument & doc);

/// Inserts the model section of an already validated document.
void populate_store(era::Store & store, const ModelSection & model);

/// Reconstructs a model section from the design-time instances of `store`.
/// Parameter labels are synthesized.
ModelSection extract_model(const era::Store & store);

}  // namespace rosa::model

#endif  // ROSA__MODEL__LOADER_HPP_
