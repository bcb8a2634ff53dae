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

#include "rosa/cli/commands.hpp"

#include <fstream>
#include <sstream>

#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "rosa/inference/reasoner.hpp"
#include "rosa/mapek/knowledge_base.hpp"
#include "rosa/model/element_count.hpp"
#include "rosa/model/loader.hpp"
#include "rosa/model/rosa_schema.hpp"
#include "rosa/model/scenario_parser.hpp"
#include "rosa/sim/runner.hpp"

namespace rosa::cli
{

namespace m = rosa::model;

namespace
{

std::string join(const std::vector<std::string> & items)
{
  std::string out;
  for (const auto & s : items) {
    out += out.empty() ? "" : ", ";
    out += s;
  }
  return out;
}

void write_file(const std::filesystem::path & path, const std::string & text)
{
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot write " + path.string());
  }
  file << text;
}

// Maps exceptions to exit codes so every command reports errors the same way.
template<typename Fn>
int guarded(std::ostream & err, Fn && fn)
{
  try {
    return fn();
  } catch (const m::ScenarioError & e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception & e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace

int cmd_validate(const std::filesystem::path & path, std::ostream & out, std::ostream & err)
{
  return guarded(err, [&] {
             auto loaded = m::load_scenario_file(path);
             auto count = m::count_elements(*loaded.store);
             out << count.entities << " entities, " << count.relations << " relations, " <<
               count.total() << " total\n";
             return kExitOk;
           });
}

int cmd_run(const RunConfig & config, std::ostream & out, std::ostream & err)
{
  return guarded(err, [&] {
             if (config.max_ticks < 1) {
               err << "error: --ticks must be at least 1\n";
               return static_cast<int>(kExitValidation);
             }
             auto loaded = m::load_scenario_file(config.scenario);
             sim::RunOptions options;
             options.max_ticks = config.max_ticks;
             options.seed = config.seed;
             auto run = sim::run_scenario(loaded.document, options);
             auto metrics = sim::format_metrics(run.metrics);
             if (config.trace_path) {
               write_file(*config.trace_path, run.trace_text());
             }
             if (config.metrics_path) {
               write_file(*config.metrics_path, metrics);
             }
             if (!config.quiet) {
               out << metrics;
             }
             return static_cast<int>(run.metrics.result == "success" ? kExitOk : kExitMission);
           });
}

int cmd_query(
  const std::filesystem::path & path, const std::string & query, const std::string & argument,
  const std::vector<std::string> & overrides, std::ostream & out, std::ostream & err)
{
  return guarded(err, [&]() -> int {
             auto loaded = m::load_scenario_file(path);
             auto & store = *loaded.store;
             mapek::EventBus bus;
             mapek::KnowledgeBase kb(store, bus);

             for (const auto & o : overrides) {
               auto eq = o.find('=');
               if (eq == std::string::npos || eq == 0) {
                 err << "error: --set expects MEASURE=VALUE, got '" << o << "'\n";
                 return kExitValidation;
               }
               const auto name = o.substr(0, eq);
               auto measure = m::find_named(store, m::kMeasure, name);
               if (!measure) {
                 err << "error: unknown measure '" << name << "'\n";
                 return kExitValidation;
               }
               const auto & type = store.get(*measure).type_name;
               mapek::Diagnostic d{"cli",
                 type == m::kEnvironmentalAttribute ? mapek::diagnostic::kEaMeasurement :
                 mapek::diagnostic::kQaMeasurement,
                 name, o.substr(eq + 1), 0};
               if (kb.ingest_diagnostic(d) != mapek::DiagnosticOutcome::Accepted) {
                 err << "error: invalid measurement override '" << o << "'\n";
                 return kExitValidation;
               }
             }

             const auto & reasoner = kb.reasoner();
             auto need_arg = [&](const std::string & type) {
                 if (argument.empty()) {
                   throw m::ScenarioError("query '" + query + "' needs a " + type + " name");
                 }
                 return m::require_named(store, type, argument);
               };
             std::vector<era::InstanceId> ids;
             if (query == "selectable-actions") {
               ids = reasoner.selectable_actions();
             } else if (query == "selectable-designs") {
               ids = reasoner.selectable_function_designs(need_arg(m::kFunction));
             } else if (query == "selectable-configs") {
               ids = reasoner.selectable_component_configurations(need_arg(m::kComponent));
             } else if (query == "adaptable-functions") {
               ids = reasoner.adaptable_functions();
             } else if (query == "adaptable-components") {
               ids = reasoner.adaptable_components();
             } else if (query == "status") {
               auto snap = reasoner.snapshot();
               for (const auto & [id, status] : snap->status) {
                 const auto & inst = store.get(id);
                 if (inst.get(m::attr::kName) == nullptr) {
                   continue;  // constraints are listed through their elements
                 }
                 auto name = m::name_of(store, id);
                 if (argument.empty() || argument == name) {
                   out << name << ": " << status << '\n';
                 }
               }
               return kExitOk;
             } else {
               err << "error: unknown query '" << query << "'\n";
               return kExitValidation;
             }
             out << join(m::names_of(store, ids)) << '\n';
             return kExitOk;
           });
}

int cmd_generate(
  int n_actions, int n_structural, int n_parameter, const std::filesystem::path & out_path,
  std::ostream & out, std::ostream & err)
{
  return guarded(err, [&]() -> int {
             if (n_actions < 1 || n_structural < 0 || n_parameter < 0) {
               err << "error: need N_ACTIONS >= 1 and non-negative adaptation counts\n";
               return kExitValidation;
             }
             auto doc = m::generate_hypothetical(n_actions, n_structural, n_parameter);
             auto text = m::write_scenario(doc);
             write_file(out_path, text);
             auto loaded = m::load_scenario(text);
             auto counted = m::count_elements(*loaded.store).total();
             auto predicted = n_actions * m::hypothetical_elements_per_action(
               n_structural, n_parameter);
             out << "predicted " << predicted << " = counted " << counted << '\n';
             return predicted == counted ? kExitOk : kExitInternal;
           });
}

int run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
{
  CLI::App app{"Task-and-architecture co-adaptation engine"};
  app.require_subcommand(1);

  std::string validate_path;
  auto * validate = app.add_subcommand("validate", "Validate a scenario and count its elements");
  validate->add_option("file", validate_path, "Scenario file")->required();

  RunConfig run_config;
  std::string trace_path;
  std::string metrics_path;
  std::string run_scenario;
  auto * run = app.add_subcommand("run", "Simulate a scenario");
  run->add_option("--scenario", run_scenario, "Scenario file")->required();
  run->add_option("--ticks", run_config.max_ticks, "Maximum number of ticks")
  ->check(CLI::PositiveNumber);
  run->add_option("--seed", run_config.seed, "Random seed");
  run->add_option("--trace", trace_path, "Write the per-tick trace (JSONL)");
  run->add_option("--metrics", metrics_path, "Write the metrics summary");
  run->add_flag("--quiet", run_config.quiet, "Do not print metrics");

  std::string query_scenario;
  std::string query_name;
  std::string query_arg;
  std::vector<std::string> overrides;
  auto * query = app.add_subcommand("query", "Print a derived set of the knowledge base");
  query->add_option("--scenario", query_scenario, "Scenario file")->required();
  query->add_option("name", query_name, "Query name")->required();
  query->add_option("argument", query_arg, "Function or component name");
  query->add_option("--set", overrides, "Measurement override MEASURE=VALUE");

  int n_actions = 1;
  int n_structural = 0;
  int n_parameter = 0;
  std::string generate_out;
  auto * generate = app.add_subcommand("generate", "Write a minimal hypothetical model");
  generate->add_option("n_actions", n_actions)->required();
  generate->add_option("n_sa", n_structural)->required();
  generate->add_option("n_pa", n_parameter)->required();
  generate->add_option("out", generate_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    std::ostringstream o;
    std::ostringstream e2;
    int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitValidation;
  }

  if (*validate) {
    return cmd_validate(validate_path, out, err);
  }
  if (*run) {
    run_config.scenario = run_scenario;
    if (!trace_path.empty()) {run_config.trace_path = trace_path;}
    if (!metrics_path.empty()) {run_config.metrics_path = metrics_path;}
    if (run_config.quiet) {
      spdlog::set_level(spdlog::level::off);
    }
    return cmd_run(run_config, out, err);
  }
  if (*query) {
    return cmd_query(query_scenario, query_name, query_arg, overrides, out, err);
  }
  return cmd_generate(n_actions, n_structural, n_parameter, generate_out, out, err);
}

}  // namespace rosa::cli
