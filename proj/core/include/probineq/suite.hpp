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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "probineq/estimator.hpp"
#include "probineq/norming.hpp"
#include "probineq/sources.hpp"
#include "probineq/space.hpp"

namespace probineq {

enum class Verdict { kHolds, kViolated, kInconclusive };

std::string_view to_string(Verdict v) noexcept;

// One side-by-side evaluation of an inequality P(lhs) <= bound at one t.
struct InequalityReport {
  std::string name;
  std::string config;
  double t = 0.0;
  TailEstimate lhs;
  TailEstimate rhs;
  double multiplier = 2.0;       // 2 or 4
  double tail_term = 0.0;        // sum_i P(||V_i|| > b_n), 0 when absent
  double tail_term_ci_high = 0.0;
  double rhs_bound = 0.0;        // multiplier * rhs.p_hat + tail_term
  double rhs_bound_ci_high = 0.0;
  double slack = 0.0;            // rhs_bound - lhs.p_hat
  double sigma_margin = 0.0;     // slack in combined standard errors
  Verdict verdict = Verdict::kHolds;
};

// Fills the bound, slack, margin and verdict fields from lhs, rhs, multiplier
// and tail terms. Exact estimates give holds/violated only. Otherwise a
// violation needs lhs.ci_low > rhs_bound_ci_high, and holds needs
// lhs.ci_high <= rhs_bound.
void finalize(InequalityReport& report);

struct ExactMode {};
struct MonteCarloMode {
  McOptions options;
};
using EvaluationMode = std::variant<ExactMode, MonteCarloMode>;

inline constexpr std::size_t kDefaultGridPoints = 50;

// `points` equispaced values on [0, upper].
std::vector<double> linear_grid(double upper, std::size_t points = kDefaultGridPoints);

// P(||sum R_i x_i|| > t b_n) <= 2 P(||sum R_i rescale(x_i)|| > t a_n), n = |x|.
// Requires ||x_i|| <= b_n (ConfigError otherwise). An empty t grid defaults to
// 50 points on [0, 1.2 sum ||x_i|| / b_n].
std::vector<InequalityReport> check_thm11_i(std::span<const Vector> x,
                                            const FunctionPair& f,
                                            const SpaceSpec& space,
                                            std::span<const double> t_grid,
                                            const EvaluationMode& mode);

// P(||sum V_i|| > t b_n) <= 4 P(||sum rescale(V_i)|| > t a_n) + n P(||V|| > b_n)
// on R paired replications. `d` must be symmetric. Samples beyond psi(N) use
// the linear continuation of the last segment. The tail term is analytic when
// the law provides one and empirical (from the same paths) otherwise.
std::vector<InequalityReport> check_thm11_ii(const DistributionSpec& d,
                                             const FunctionPair& f, std::size_t n,
                                             std::span<const double> t_grid,
                                             const McOptions& options);

// P(||sum alpha_i R_i x_i|| > t) <= 2 P(||sum R_i x_i|| > t) for |alpha_i| <= 1.
// An empty t grid defaults to 50 points on [0, 1.2 sum ||x_i||].
std::vector<InequalityReport> check_contraction(std::span<const Vector> x,
                                                std::span<const double> alpha,
                                                const SpaceSpec& space,
                                                std::span<const double> t_grid,
                                                const EvaluationMode& mode);

// P(max_i ||X_i - X'_i|| > t b_n) <= 2 P(||S_n - S'_n|| > t b_n).
std::vector<InequalityReport> check_levy(const DistributionSpec& d, std::size_t n,
                                         double b_n, std::span<const double> t_grid,
                                         const McOptions& options);

// The same inequality for scalar Rademacher X, X', enumerating all 4^n joint
// sign patterns. n <= 10.
std::vector<InequalityReport> check_levy_exact_rademacher(
    std::size_t n, double b_n, std::span<const double> t_grid);

}  // namespace probineq
