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

#include "probineq/wlln.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "probineq/error.hpp"

namespace probineq {

namespace {

void validate(const NormingPair& pair, const WllnOptions& options,
              const std::vector<std::size_t>& grid) {
  if (auto n = pair.ratio_violation()) {
    throw RatioError(*n, "norming condition violated: b_n / a_n decreases at n = " +
                             std::to_string(*n));
  }
  if (grid.empty()) throw ConfigError("wlln: empty n grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] == 0 || (i > 0 && grid[i] <= grid[i - 1])) {
      throw ConfigError("wlln: n grid must be strictly increasing and >= 1");
    }
  }
  if (grid.back() > pair.size()) {
    throw ConfigError("wlln: largest n = " + std::to_string(grid.back()) +
                      " exceeds the norming prefix N = " +
                      std::to_string(pair.size()));
  }
  const auto& lambdas = options.lambda_grid;
  if (lambdas.empty()) throw ConfigError("wlln: empty lambda grid");
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (!(lambdas[i] > 0.0) || (i > 0 && lambdas[i] <= lambdas[i - 1])) {
      throw ConfigError("wlln: lambda grid must be strictly increasing and > 0");
    }
  }
  if (options.mc.replications < 100) throw ConfigError("wlln: R must be >= 100");
  if (options.stable_type_p) {
    const double p = *options.stable_type_p;
    if (!(p >= 1.0 && p < 2.0)) {
      throw ConfigError("wlln: stable type p must lie in [1, 2)");
    }
    double previous = 0.0;
    for (std::size_t n = 1; n <= pair.size(); ++n) {
      const double r = pair.b(n) / std::pow(static_cast<double>(n), 1.0 / p);
      if (r < previous * (1.0 - kRatioTolerance)) {
        throw ConfigError("b_n / n^{1/p} decreases at n = " + std::to_string(n));
      }
      previous = std::max(previous, r);
    }
  }
}

}  // namespace

std::string_view to_string(Branch b) noexcept {
  switch (b) {
    case Branch::kConverges: return "converges";
    case Branch::kBoundedAway: return "bounded_away";
    case Branch::kUndecided: return "undecided";
  }
  return "unknown";
}

const TailEstimate& WllnDiagnostic::at(std::size_t n, double lambda) const {
  const auto i = std::find(n_grid.begin(), n_grid.end(), n);
  const auto j = std::find(lambda_grid.begin(), lambda_grid.end(), lambda);
  if (i == n_grid.end() || j == lambda_grid.end()) {
    throw DomainError("wlln diagnostic has no entry for the requested (n, lambda)");
  }
  return estimates[i - n_grid.begin()][j - lambda_grid.begin()];
}

Branch classify(const std::vector<std::vector<TailEstimate>>& estimates,
                const WllnThresholds& thresholds) {
  if (estimates.empty()) return Branch::kUndecided;
  const auto& last = estimates.back();
  const bool converges =
      std::all_of(last.begin(), last.end(), [&](const TailEstimate& e) {
        return e.ci_high < thresholds.converges;
      });
  if (converges) return Branch::kConverges;

  const std::size_t from = estimates.size() >= 2 ? estimates.size() - 2 : 0;
  bool away = true;
  for (std::size_t i = from; i < estimates.size(); ++i) {
    for (const TailEstimate& e : estimates[i]) {
      away = away && e.ci_low > thresholds.bounded_away;
    }
  }
  return away ? Branch::kBoundedAway : Branch::kUndecided;
}

std::vector<std::size_t> powers_of_two_grid(std::size_t n_max) {
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= n_max; n *= 2) out.push_back(n);
  return out;
}

WllnDiagnostic run_wlln(const DistributionSpec& d, const NormingPair& pair,
                        const WllnOptions& options, WllnStatistic statistic) {
  WllnDiagnostic out;
  out.statistic = statistic;
  out.n_grid = options.n_grid.empty() ? powers_of_two_grid(options.n_max)
                                      : options.n_grid;
  out.lambda_grid = options.lambda_grid;
  validate(pair, options, out.n_grid);

  const std::size_t G = out.n_grid.size();
  const std::size_t L = out.lambda_grid.size();
  const std::size_t dim = d.space().dim();
  const std::size_t n_max = out.n_grid.back();

  std::vector<double> b(G);
  for (std::size_t g = 0; g < G; ++g) b[g] = pair.b(out.n_grid[g]);

  // Centering; the symmetrized statistic needs none.
  std::vector<std::vector<double>> gamma(G, std::vector<double>(dim, 0.0));
  out.gamma.assign(G, Vector::zero(dim));
  if (statistic == WllnStatistic::kCentered) {
    CenteringMode mode = AnalyticCentering{};
    if (options.centering) {
      mode = *options.centering;
    } else if (!has_analytic_centering(d)) {
      mode = MonteCarloCentering{options.centering_draws, options.mc.seed};
    }
    out.gamma_analytic = std::holds_alternative<AnalyticCentering>(mode);
    for (std::size_t g = 0; g < G; ++g) {
      out.gamma[g] = gamma_n(d, b[g], out.n_grid[g], mode).value;
      gamma[g].assign(out.gamma[g].coords().begin(), out.gamma[g].coords().end());
    }
  }

  const std::vector<std::size_t>& grid = out.n_grid;
  const std::vector<double>& lambdas = out.lambda_grid;
  const SpaceSpec& space = d.space();
  const bool symmetrized = statistic == WllnStatistic::kSymmetrized;

  // Counters: G * L statistic exceedances, then G criterion exceedances.
  const auto counts = mc_count(options.mc, G * L + G, [&] {
    return [&, x = std::vector<double>(dim), y = std::vector<double>(dim),
            s = std::vector<double>(dim), centered = std::vector<double>(dim)](
               const StreamKey& key, std::span<std::uint64_t> c) mutable {
      Stream path(key);
      Stream copy(StreamKey{key.master_seed, key.replication_index,
                            substreams::kCopy, 0});
      std::fill(s.begin(), s.end(), 0.0);
      std::size_t open = 0;  // first grid index with grid[open] >= i
      for (std::size_t i = 1; i <= n_max; ++i) {
        d.draw(path, x);
        const double r = space.norm(x);
        for (std::size_t g = open; g < G && r > b[g]; ++g) ++c[G * L + g];
        if (symmetrized) {
          d.draw(copy, y);
          for (std::size_t k = 0; k < dim; ++k) s[k] += x[k] - y[k];
        } else {
          for (std::size_t k = 0; k < dim; ++k) s[k] += x[k];
        }
        if (i == grid[open]) {
          for (std::size_t k = 0; k < dim; ++k) centered[k] = s[k] - gamma[open][k];
          const double stat = space.norm(centered) / b[open];
          for (std::size_t j = 0; j < L; ++j) {
            if (stat > lambdas[j]) ++c[open * L + j];
          }
          ++open;
        }
      }
    };
  });

  const std::uint64_t R = options.mc.replications;
  out.estimates.assign(G, {});
  out.criterion.resize(G);
  for (std::size_t g = 0; g < G; ++g) {
    for (std::size_t j = 0; j < L; ++j) {
      out.estimates[g].push_back(
          TailEstimate::from_counts(counts[g * L + j], R, options.mc.confidence));
    }
    CriterionValue& cv = out.criterion[g];
    cv.n = grid[g];
    cv.b_n = b[g];
    if (auto p = d.analytic_tail(b[g])) cv.analytic = static_cast<double>(grid[g]) * *p;
    cv.exceedance = TailEstimate::from_counts(counts[G * L + g], R * grid[g],
                                              options.mc.confidence);
  }
  out.branch = classify(out.estimates, options.thresholds);
  return out;
}

SymmetrizationCrossCheck cross_check_symmetrization(const DistributionSpec& d,
                                                    const NormingPair& pair,
                                                    const WllnOptions& options) {
  SymmetrizationCrossCheck out;
  out.centered = run_wlln(d, pair, options, WllnStatistic::kCentered);
  out.symmetrized = run_wlln(d, pair, options, WllnStatistic::kSymmetrized);
  out.agree = out.centered.branch == out.symmetrized.branch;
  return out;
}

}  // namespace probineq
