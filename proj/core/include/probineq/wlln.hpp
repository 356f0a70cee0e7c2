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
#include <optional>
#include <string_view>
#include <vector>

#include "probineq/estimator.hpp"
#include "probineq/norming.hpp"
#include "probineq/sources.hpp"
#include "probineq/transforms.hpp"

namespace probineq {

enum class Branch { kConverges, kBoundedAway, kUndecided };

std::string_view to_string(Branch b) noexcept;

// Which normalized statistic the runner tracks.
enum class WllnStatistic {
  kCentered,     // ||S_n - gamma_n|| / b_n
  kSymmetrized,  // ||S_n - S'_n|| / b_n, S' built from an independent copy
};

struct WllnThresholds {
  double converges = 0.02;     // tau
  double bounded_away = 0.05;  // delta
};

struct WllnOptions {
  // Explicit n grid (strictly increasing); empty means powers of two 1..n_max.
  std::vector<std::size_t> n_grid;
  std::size_t n_max = 0;
  std::vector<double> lambda_grid{0.25, 0.5, 1.0, 2.0};
  McOptions mc;
  // Centering mode; empty picks analytic when available, else Monte Carlo
  // with `centering_draws` draws.
  std::optional<CenteringMode> centering;
  std::uint64_t centering_draws = 1'000'000;
  // When set, additionally require b_n / n^{1/p} nondecreasing, p in [1, 2).
  std::optional<double> stable_type_p;
  WllnThresholds thresholds;
};

// n P(||X|| > b_n): analytic when the law provides a tail, and empirical from
// the first n draws of every replication.
struct CriterionValue {
  std::size_t n = 0;
  double b_n = 0.0;
  std::optional<double> analytic;
  TailEstimate exceedance;  // P(||X|| > b_n) over R * n draws

  double empirical() const noexcept {
    return static_cast<double>(n) * exceedance.p_hat;
  }
  double empirical_standard_error() const noexcept {
    return static_cast<double>(n) * exceedance.standard_error();
  }
};

struct WllnDiagnostic {
  WllnStatistic statistic = WllnStatistic::kCentered;
  std::vector<std::size_t> n_grid;
  std::vector<double> lambda_grid;
  // estimates[i][j]: P(statistic at n_grid[i] > lambda_grid[j]).
  std::vector<std::vector<TailEstimate>> estimates;
  std::vector<CriterionValue> criterion;
  std::vector<Vector> gamma;  // gamma_n per grid n (zero for symmetrized)
  bool gamma_analytic = true;
  Branch branch = Branch::kUndecided;

  const TailEstimate& at(std::size_t n, double lambda) const;
};

// converges: every lambda at the largest n has ci_high < tau.
// bounded_away: every lambda at each of the two largest n has ci_low > delta.
// Otherwise undecided (enlarge n).
Branch classify(const std::vector<std::vector<TailEstimate>>& estimates,
                const WllnThresholds& thresholds);

// Powers of two 1, 2, 4, ... up to n_max.
std::vector<std::size_t> powers_of_two_grid(std::size_t n_max);

// Tail estimates of the normalized partial sums across the n grid. Every grid
// n is read off one path of length max(n_grid) per replication. Rejects a
// pair violating the ratio condition (and the stable-type-p condition when
// requested).
WllnDiagnostic run_wlln(const DistributionSpec& d, const NormingPair& pair,
                        const WllnOptions& options,
                        WllnStatistic statistic = WllnStatistic::kCentered);

struct SymmetrizationCrossCheck {
  WllnDiagnostic centered;
  WllnDiagnostic symmetrized;
  bool agree = false;
};

// Runs both statistics on the same seed and compares their classifications.
SymmetrizationCrossCheck cross_check_symmetrization(const DistributionSpec& d,
                                                    const NormingPair& pair,
                                                    const WllnOptions& options);

}  // namespace probineq
