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

#include "probineq/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "probineq/error.hpp"

#ifndef PROBINEQ_VERSION
#define PROBINEQ_VERSION "0.0.0"
#endif

namespace probineq {

using json = nlohmann::json;

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

json number_or_null(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

std::vector<InequalityReport> run_inequality(const ExperimentConfig& c) {
  const McOptions mc{c.replications.value_or(0), c.seed, c.threads, c.confidence};
  const EvaluationMode mode =
      c.exact ? EvaluationMode{ExactMode{}} : EvaluationMode{MonteCarloMode{mc}};
  switch (c.kind) {
    case ExperimentKind::kThm11i:
      return check_thm11_i(c.vectors, FunctionPair::build(*c.norming), *c.space,
                           c.t_grid, mode);
    case ExperimentKind::kContraction:
      return check_contraction(c.vectors, c.alpha_weights, *c.space, c.t_grid, mode);
    case ExperimentKind::kThm11ii:
      return check_thm11_ii(*c.distribution, FunctionPair::build(*c.norming), c.n,
                            c.t_grid, mc);
    case ExperimentKind::kLevy:
      if (c.exact) return check_levy_exact_rademacher(c.n, *c.levy_b_n, c.t_grid);
      return check_levy(*c.distribution, c.n, *c.levy_b_n, c.t_grid, mc);
    default:
      throw ConfigError("/experiment: not an inequality experiment");
  }
}

json inequality_summary(const std::vector<std::vector<InequalityReport>>& per_config,
                        const ExperimentConfig& top, int& exit_code) {
  json configs = json::array();
  std::size_t holds = 0, violated = 0, inconclusive = 0;
  for (std::size_t id = 0; id < per_config.size(); ++id) {
    std::size_t h = 0, v = 0, i = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    double min_margin = std::numeric_limits<double>::infinity();
    for (const auto& r : per_config[id]) {
      switch (r.verdict) {
        case Verdict::kHolds: ++h; break;
        case Verdict::kViolated: ++v; break;
        case Verdict::kInconclusive: ++i; break;
      }
      min_slack = std::min(min_slack, r.slack);
      if (!r.lhs.exact) min_margin = std::min(min_margin, r.sigma_margin);
    }
    holds += h;
    violated += v;
    inconclusive += i;
    json entry = {{"config_id", id},
                  {"experiment", per_config[id].empty() ? "" : per_config[id][0].name},
                  {"config", per_config[id].empty() ? "" : per_config[id][0].config},
                  {"holds", h},
                  {"violated", v},
                  {"inconclusive", i},
                  {"min_slack", number_or_null(min_slack)},
                  {"min_sigma_margin", number_or_null(min_margin)}};
    configs.push_back(std::move(entry));
  }
  exit_code = violated > 0 ? kExitViolated : kExitOk;
  return {{"experiment", std::string(to_string(top.kind))},
          {"seed", top.seed},
          {"status", violated > 0 ? "violated" : "ok"},
          {"holds", holds},
          {"violated", violated},
          {"inconclusive", inconclusive},
          {"configs", configs}};
}

json wlln_summary(const WllnDiagnostic& d) {
  json crit = json::array();
  for (const auto& c : d.criterion) {
    crit.push_back({{"n", c.n},
                    {"b_n", c.b_n},
                    {"analytic", c.analytic ? json(*c.analytic) : json(nullptr)},
                    {"empirical", c.empirical()},
                    {"empirical_se", c.empirical_standard_error()}});
  }
  return {{"statistic", d.statistic == WllnStatistic::kCentered ? "centered" : "symmetrized"},
          {"branch", std::string(to_string(d.branch))},
          {"gamma_analytic", d.gamma_analytic},
          {"lambda_grid_limited", true},
          {"criterion", crit}};
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot write " + p.string());
  out << content;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_inequality_csv(std::ostream& os,
                          const std::vector<std::vector<InequalityReport>>& per_config) {
  os << kInequalityCsvHeader << '\n';
  for (std::size_t id = 0; id < per_config.size(); ++id) {
    for (const auto& r : per_config[id]) {
      os << id << ',' << r.name << ',' << format_double(r.t) << ','
         << format_double(r.lhs.p_hat) << ',' << r.lhs.successes << ','
         << r.lhs.replications << ',' << format_double(r.lhs.ci_low) << ','
         << format_double(r.lhs.ci_high) << ',' << format_double(r.rhs.p_hat) << ','
         << r.rhs.successes << ',' << format_double(r.rhs.ci_low) << ','
         << format_double(r.rhs.ci_high) << ',' << format_double(r.multiplier) << ','
         << format_double(r.tail_term) << ',' << format_double(r.tail_term_ci_high)
         << ',' << format_double(r.rhs_bound) << ','
         << format_double(r.rhs_bound_ci_high) << ',' << format_double(r.slack) << ','
         << format_double(r.sigma_margin) << ',' << to_string(r.verdict) << ','
         << (r.lhs.exact ? 1 : 0) << ',' << quoted(r.config) << '\n';
    }
  }
}

void write_wlln_csv(std::ostream& os, const std::vector<WllnDiagnostic>& runs) {
  os << kWllnCsvHeader << '\n';
  for (const auto& d : runs) {
    const char* stat = d.statistic == WllnStatistic::kCentered ? "centered" : "symmetrized";
    for (std::size_t g = 0; g < d.n_grid.size(); ++g) {
      const CriterionValue& cv = d.criterion[g];
      double gamma_norm = 0.0;
      for (double x : d.gamma[g].coords()) gamma_norm = std::max(gamma_norm, std::abs(x));
      for (std::size_t j = 0; j < d.lambda_grid.size(); ++j) {
        const TailEstimate& e = d.estimates[g][j];
        os << stat << ',' << d.n_grid[g] << ',' << format_double(cv.b_n) << ','
           << format_double(d.lambda_grid[j]) << ',' << format_double(e.p_hat) << ','
           << e.successes << ',' << e.replications << ',' << format_double(e.ci_low)
           << ',' << format_double(e.ci_high) << ',' << format_double(gamma_norm) << ','
           << (cv.analytic ? format_double(*cv.analytic) : std::string()) << ','
           << format_double(cv.empirical()) << ','
           << format_double(cv.empirical_standard_error()) << ',' << to_string(d.branch)
           << '\n';
      }
    }
  }
}

void write_construct_csv(std::ostream& os, const FunctionPair& f,
                         std::size_t points_per_unit) {
  os << kConstructCsvHeader << '\n';
  const std::size_t steps = f.size() * points_per_unit;
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(points_per_unit);
    os << format_double(t) << ',' << format_double(f.phi(t)) << ','
       << format_double(f.psi(t)) << ',' << format_double(f.ratio(t)) << '\n';
  }
}

RunResult run_experiment(const LoadedConfig& loaded) {
  const auto start = std::chrono::steady_clock::now();
  const ExperimentConfig& c = loaded.config;
  RunResult result;
  std::ostringstream csv;
  json summary;

  switch (c.kind) {
    case ExperimentKind::kConstruct: {
      const FunctionPair f = FunctionPair::build(*c.norming);
      write_construct_csv(csv, f, c.points_per_unit);
      const RatioCheck check = check_ratio_monotone(f, c.points_per_unit);
      summary = {{"experiment", "construct"},
                 {"N", f.size()},
                 {"ratio_monotone", check.monotone},
                 {"status", "ok"}};
      break;
    }
    case ExperimentKind::kWlln: {
      std::vector<WllnDiagnostic> runs;
      if (c.symmetrization_check) {
        auto cross = cross_check_symmetrization(*c.distribution, *c.norming, c.wlln);
        runs.push_back(std::move(cross.centered));
        runs.push_back(std::move(cross.symmetrized));
        summary["symmetrization_agree"] = cross.agree;
      } else {
        runs.push_back(run_wlln(*c.distribution, *c.norming, c.wlln));
      }
      write_wlln_csv(csv, runs);
      summary["experiment"] = "wlln";
      summary["seed"] = c.seed;
      summary["law"] = c.distribution->describe();
      summary["branch"] = std::string(to_string(runs.front().branch));
      summary["runs"] = json::array();
      for (const auto& r : runs) summary["runs"].push_back(wlln_summary(r));
      summary["status"] = "ok";
      break;
    }
    case ExperimentKind::kSweep: {
      std::vector<std::vector<InequalityReport>> per_config;
      for (const auto& m : c.members) per_config.push_back(run_inequality(m));
      write_inequality_csv(csv, per_config);
      summary = inequality_summary(per_config, c, result.exit_code);
      break;
    }
    default: {
      std::vector<std::vector<InequalityReport>> per_config{run_inequality(c)};
      write_inequality_csv(csv, per_config);
      summary = inequality_summary(per_config, c, result.exit_code);
      break;
    }
  }

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const json manifest = {{"tool", "probineq"},
                         {"version", PROBINEQ_VERSION},
                         {"schema_version", kSchemaVersion},
                         {"seed", c.seed},
                         {"threads", c.threads},
                         {"wall_time_seconds", wall},
                         {"config", json::parse(loaded.resolved_json)}};

  const std::filesystem::path dir(c.output_dir);
  std::filesystem::create_directories(dir);
  write_file(dir / "results.csv", csv.str());
  result.summary_json = summary.dump(2) + "\n";
  write_file(dir / "summary.json", result.summary_json);
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");
  return result;
}

}  // namespace probineq
