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

#include "support/test_support.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "rosa/inference/reasoner.hpp"
#include "rosa/model/loader.hpp"
#include "rosa/model/rosa_schema.hpp"
#include "rosa/model/scenario_parser.hpp"

namespace rosa::testing
{

namespace m = rosa::model;

std::filesystem::path scenario_path(const std::string & name)
{
  return std::filesystem::path(ROSA_SCENARIO_DIR) / (name + ".rosa");
}

std::filesystem::path golden_path(const std::string & name)
{
  return std::filesystem::path(ROSA_GOLDEN_DIR) / name;
}

std::string read_file(const std::filesystem::path & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

m::ScenarioDocument load_document(const std::string & name)
{
  return m::parse_scenario(read_file(scenario_path(name)));
}

KbHarness::KbHarness(const m::ScenarioDocument & d)
: doc(d), store(m::rosa_schema()), kb(store, bus)
{
  m::validate_document(doc);
  m::populate_store(store, doc.model);
}

era::InstanceId KbHarness::id(const std::string & type, const std::string & name) const
{
  return m::require_named(store, type, name);
}

std::string KbHarness::status(const std::string & type, const std::string & name) const
{
  return kb.reasoner().status(id(type, name));
}

void KbHarness::measure(const std::string & measure, double value, std::int64_t tick)
{
  auto mid = id(m::kMeasure, measure);
  bool environmental = store.get(mid).type_name == m::kEnvironmentalAttribute;
  std::ostringstream text;
  text << std::setprecision(17) << value;
  kb.ingest_diagnostic(
    {"test", environmental ? mapek::diagnostic::kEaMeasurement :
      mapek::diagnostic::kQaMeasurement, measure, text.str(), tick});
}

void KbHarness::fail(const std::string & component, std::int64_t tick)
{
  kb.ingest_diagnostic(
    {"test", mapek::diagnostic::kComponentStatus, component, mapek::diagnostic::kFailureValue,
      tick});
}

void KbHarness::recover(const std::string & component, std::int64_t tick)
{
  kb.ingest_diagnostic(
    {"test", mapek::diagnostic::kComponentStatus, component, mapek::diagnostic::kRecoveredValue,
      tick});
}

std::vector<mapek::Event> KbHarness::drain()
{
  std::vector<mapek::Event> out;
  while (!bus.empty()) {
    out.push_back(bus.pop());
  }
  return out;
}

std::optional<std::string> KbHarness::selected(const std::string & element) const
{
  if (auto f = m::find_named(store, m::kFunction, element)) {
    if (auto fd = inference::selected_function_design(store, *f)) {
      return m::name_of(store, *fd);
    }
    return std::nullopt;
  }
  if (auto cc = inference::selected_configuration(store, id(m::kComponent, element))) {
    return m::name_of(store, *cc);
  }
  return std::nullopt;
}

namespace
{

std::string describe(const std::string & verb, const std::string & component,
  const mapek::ParameterMap & parameters)
{
  std::string out = verb + " " + component;
  std::string sep = " ";
  for (const auto & [k, v] : parameters) {
    out += sep + k + "=" + v;
    sep = ",";
  }
  return out;
}

}  // namespace

std::optional<std::int64_t> RecordingSystem::start_process(
  const std::string & component, const mapek::ParameterMap & parameters, std::int64_t)
{
  calls.push_back(describe("start", component, parameters));
  if (refuse.count(component)) {
    return std::nullopt;
  }
  running.insert(component);
  return next_pid_++;
}

void RecordingSystem::stop_process(const std::string & component, std::int64_t)
{
  calls.push_back("stop " + component);
  running.erase(component);
}

void RecordingSystem::set_parameters(
  const std::string & component, const mapek::ParameterMap & parameters, std::int64_t)
{
  calls.push_back(describe("set", component, parameters));
}

}  // namespace rosa::testing
