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

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "probineq/norming.hpp"
#include "probineq/sources.hpp"
#include "probineq/space.hpp"
#include "probineq/wlln.hpp"

namespace probineq {

inline constexpr int kSchemaVersion = 1;

enum class ExperimentKind { kThm11i, kThm11ii, kContraction, kLevy, kWlln, kConstruct, kSweep };

std::string_view to_string(ExperimentKind k) noexcept;

// A fully parsed experiment. Optional members are filled only for the
// experiment kinds that use them.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kThm11i;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> replications;
  double confidence = 0.99;
  unsigned threads = 1;
  std::string output_dir = "probineq_out";
  bool exact = true;  // "mode": "exact" | "mc"

  std::optional<SpaceSpec> space;
  std::optional<DistributionSpec> distribution;
  std::optional<NormingPair> norming;

  std::size_t n = 0;
  std::vector<double> t_grid;
  std::vector<Vector> vectors;
  std::vector<double> alpha_weights;
  std::optional<double> levy_b_n;

  // wlln
  WllnOptions wlln;
  bool symmetrization_check = false;

  // construct
  std::size_t points_per_unit = 10;

  // sweep
  std::vector<ExperimentConfig> members;
};

// Top-level scalar overrides from the command line.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::optional<double> confidence;
  std::optional<std::string> output_dir;
};

// Parses a JSON document (an experiment config, or a manifest.json holding
// one under "config"). Applies overrides, validates everything, and returns
// the parsed config plus the resolved JSON text echoed into the manifest.
// Schema errors throw ConfigError naming the offending key path.
struct LoadedConfig {
  ExperimentConfig config;
  std::string resolved_json;
};

LoadedConfig load_config_text(const std::string& text, const Overrides& overrides);
LoadedConfig load_config_file(const std::string& path, const Overrides& overrides);

// Randomized sweep members (JSON text of a sweep config) in the shapes used by
// the soundness sweeps: kind is "thm11_i", "contraction" or "thm11_ii".
std::string random_sweep_json(const std::string& kind, std::size_t count,
                              std::uint64_t seed, std::uint64_t replications);

}  // namespace probineq
