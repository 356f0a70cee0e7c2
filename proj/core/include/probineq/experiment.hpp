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

#include <iosfwd>
#include <string>
#include <vector>

#include "probineq/config.hpp"
#include "probineq/suite.hpp"
#include "probineq/wlln.hpp"

namespace probineq {

// Process exit codes of the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitConfigError = 2;

// Fixed column order of results.csv for inequality experiments.
inline constexpr const char* kInequalityCsvHeader =
    "config_id,experiment,t,lhs_p,lhs_successes,lhs_replications,lhs_ci_low,"
    "lhs_ci_high,rhs_p,rhs_successes,rhs_ci_low,rhs_ci_high,multiplier,tail_term,"
    "tail_term_ci_high,rhs_bound,rhs_bound_ci_high,slack,sigma_margin,verdict,"
    "exact,config";

// Fixed column order of results.csv for wlln experiments.
inline constexpr const char* kWllnCsvHeader =
    "statistic,n,b_n,lambda,p_hat,successes,replications,ci_low,ci_high,"
    "gamma_norm,criterion_analytic,criterion_empirical,criterion_se,branch";

// Fixed column order of results.csv for construct.
inline constexpr const char* kConstructCsvHeader = "t,phi,psi,ratio";

// Shortest round-trip-safe text for a double (17 significant digits).
std::string format_double(double x);

void write_inequality_csv(std::ostream& os,
                          const std::vector<std::vector<InequalityReport>>& per_config);
void write_wlln_csv(std::ostream& os, const std::vector<WllnDiagnostic>& runs);
void write_construct_csv(std::ostream& os, const FunctionPair& f,
                         std::size_t points_per_unit);

struct RunResult {
  int exit_code = kExitOk;
  std::string summary_json;
};

// Runs a loaded experiment and writes results.csv, summary.json and
// manifest.json into config.output_dir (created if needed).
RunResult run_experiment(const LoadedConfig& loaded);

}  // namespace probineq
