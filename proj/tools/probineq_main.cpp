// Copyright 2026 The probineq Authors
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

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "probineq/config.hpp"
#include "probineq/error.hpp"
#include "probineq/experiment.hpp"

namespace {

struct CommonFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::optional<std::string> out;
  std::optional<double> confidence;

  probineq::Overrides overrides() const {
    return {seed, threads, confidence, out};
  }
};

void add_common(CLI::App* cmd, CommonFlags& f, bool config_required) {
  auto* opt = cmd->add_option("--config", f.config, "Experiment config (JSON) or manifest.json");
  if (config_required) opt->required();
  cmd->add_option("--seed", f.seed, "Override the master seed");
  cmd->add_option("--threads", f.threads, "Worker threads (results do not depend on it)");
  cmd->add_option("--out", f.out, "Output directory");
  cmd->add_option("--confidence", f.confidence, "Confidence level of binomial intervals");
}

int run_loaded(const probineq::LoadedConfig& loaded) {
  const auto result = probineq::run_experiment(loaded);
  std::cout << result.summary_json;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"probineq: exact and Monte Carlo checks of probability inequalities "
               "for sums of independent vector-valued random variables"};
  app.require_subcommand(1);

  CommonFlags run_flags, sweep_flags, validate_flags, construct_flags;
  auto* run = app.add_subcommand("run", "Run the experiment described by a config");
  add_common(run, run_flags, true);

  auto* sweep = app.add_subcommand("sweep", "Run a sweep config (experiment = sweep)");
  add_common(sweep, sweep_flags, true);

  auto* validate = app.add_subcommand("validate", "Parse and validate a config");
  add_common(validate, validate_flags, true);

  auto* construct = app.add_subcommand(
      "construct", "Tabulate t, phi(t), psi(t), psi(t)/phi(t) for a norming pair");
  add_common(construct, construct_flags, false);
  double a_exponent = 1.0, b_exponent = 1.0;
  std::size_t prefix = 16, points_per_unit = 10;
  construct->add_option("--a-exponent", a_exponent, "a_n = n^x (without --config)");
  construct->add_option("--b-exponent", b_exponent, "b_n = n^x (without --config)");
  construct->add_option("--N", prefix, "Prefix length (without --config)");
  construct->add_option("--points-per-unit", points_per_unit, "Grid density");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : probineq::kExitConfigError;
  }

  try {
    if (*run) {
      return run_loaded(probineq::load_config_file(run_flags.config, run_flags.overrides()));
    }
    if (*sweep) {
      auto loaded = probineq::load_config_file(sweep_flags.config, sweep_flags.overrides());
      if (loaded.config.kind != probineq::ExperimentKind::kSweep) {
        throw probineq::ConfigError("/experiment: the sweep subcommand needs "
                                    "\"experiment\": \"sweep\"");
      }
      return run_loaded(loaded);
    }
    if (*validate) {
      const auto loaded =
          probineq::load_config_file(validate_flags.config, validate_flags.overrides());
      std::cout << "ok: " << probineq::to_string(loaded.config.kind) << "\n";
      return probineq::kExitOk;
    }
    if (*construct) {
      if (!construct_flags.config.empty()) {
        auto loaded =
            probineq::load_config_file(construct_flags.config, construct_flags.overrides());
        if (loaded.config.kind != probineq::ExperimentKind::kConstruct) {
          throw probineq::ConfigError("/experiment: expected \"construct\"");
        }
        return run_loaded(loaded);
      }
      const std::string text =
          R"({"experiment": "construct", "seed": 0, "points_per_unit": )" +
          std::to_string(points_per_unit) + R"(, "norming": {"N": )" +
          std::to_string(prefix) + R"(, "a": {"family": "power", "exponent": )" +
          probineq::format_double(a_exponent) +
          R"(}, "b": {"family": "power", "exponent": )" +
          probineq::format_double(b_exponent) + "}}}";
      return run_loaded(probineq::load_config_text(text, construct_flags.overrides()));
    }
  } catch (const probineq::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return probineq::kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return probineq::kExitConfigError;
  }
  return probineq::kExitOk;
}
