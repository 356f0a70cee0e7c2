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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "probineq/error.hpp"

namespace probineq {
namespace {

const SpaceSpec kLine = SpaceSpec::real_line();

std::vector<std::vector<TailEstimate>> table(std::vector<std::vector<std::uint64_t>> hits,
                                             std::uint64_t R) {
  std::vector<std::vector<TailEstimate>> out;
  for (const auto& row : hits) {
    out.emplace_back();
    for (auto k : row) out.back().push_back(TailEstimate::from_counts(k, R, 0.99));
  }
  return out;
}

TEST(WllnTest, Classify) {
  const WllnThresholds th;
  EXPECT_EQ(classify(table({{500, 500}, {0, 0}}, 10000), th), Branch::kConverges);
  EXPECT_EQ(classify(table({{300, 900}, {800, 900}, {800, 900}}, 10000), th),
            Branch::kBoundedAway);
  // Smallest lambda near tau on the last row.
  EXPECT_EQ(classify(table({{0, 0}, {200, 0}}, 10000), th), Branch::kUndecided);
  // Only the largest n is far from zero.
  EXPECT_EQ(classify(table({{100, 100}, {900, 900}}, 10000), th), Branch::kUndecided);
}

TEST(WllnTest, PowersOfTwo) {
  EXPECT_EQ(powers_of_two_grid(20), (std::vector<std::size_t>{1, 2, 4, 8, 16}));
  EXPECT_EQ(powers_of_two_grid(16).back(), 16u);
}

TEST(WllnTest, UniformConverges) {
  const DistributionSpec d(dist::UniformBall{1.0}, kLine);
  WllnOptions opts;
  opts.n_max = 1024;
  opts.mc = McOptions{2000, 5, 1, 0.99};
  const auto diag = run_wlln(d, NormingPair::power(0.5, 1.0, 1024), opts);
  EXPECT_EQ(diag.branch, Branch::kConverges);
  EXPECT_TRUE(diag.gamma_analytic);
  EXPECT_EQ(diag.n_grid.back(), 1024u);
  // Tail estimates fall with n at fixed lambda.
  EXPECT_GE(diag.at(4, 0.25).p_hat, diag.at(1024, 0.25).p_hat);
}

TEST(WllnTest, CauchyBoundedAwayAndFlat) {
  // S_n / n is again standard Cauchy: P(|.| > lambda) = 1 - (2/pi) atan(lambda).
  const DistributionSpec d(dist::StableSymmetric{1.0}, kLine);
  WllnOptions opts;
  opts.n_max = 256;
  opts.mc = McOptions{4000, 6, 1, 0.99};
  const auto diag = run_wlln(d, NormingPair::power(0.5, 1.0, 256), opts);
  EXPECT_EQ(diag.branch, Branch::kBoundedAway);
  for (double lambda : opts.lambda_grid) {
    const double exact = 1.0 - 2.0 / std::numbers::pi * std::atan(lambda);
    const double sigma = std::sqrt(exact * (1 - exact) / 4000);
    for (std::size_t n : {16u, 64u, 256u}) {
      EXPECT_NEAR(diag.at(n, lambda).p_hat, exact, 4.0 * sigma) << n << " " << lambda;
    }
  }
}

TEST(WllnTest, AnalyticCriterion) {
  // Pareto alpha = 2.5, b_n = n^{2/3}: n P(|X| > b_n) = n^{-2/3}.
  const DistributionSpec d(dist::ParetoSymmetric{2.5}, kLine);
  WllnOptions opts;
  opts.n_grid = {8, 8192};
  opts.lambda_grid = {1.0};
  opts.mc = McOptions{2000, 7, 1, 0.99};
  const auto diag = run_wlln(d, NormingPair::power(0.5, 2.0 / 3.0, 8192), opts);
  ASSERT_EQ(diag.criterion.size(), 2u);
  EXPECT_NEAR(*diag.criterion[0].analytic, 0.25, 1e-12);
  EXPECT_NEAR(*diag.criterion[1].analytic, 0.0024607, 1e-7);
  // Binomial spread of n p_hat over R n draws, taken at the true p.
  const double n = 8192.0;
  const double p = *diag.criterion[1].analytic / n;
  EXPECT_NEAR(diag.criterion[1].empirical(), n * p, 4.0 * n * std::sqrt(p / (2000.0 * n)));
}

TEST(WllnTest, SymmetrizationAgreesOnUniform) {
  const DistributionSpec d(dist::UniformBall{1.0}, kLine, Lifting::kScalar, Vector{0.5});
  WllnOptions opts;
  opts.n_max = 1024;
  opts.mc = McOptions{1000, 8, 1, 0.99};
  const auto check = cross_check_symmetrization(d, NormingPair::power(0.5, 1.0, 1024), opts);
  EXPECT_TRUE(check.agree);
  EXPECT_EQ(check.centered.branch, Branch::kConverges);
  EXPECT_EQ(check.symmetrized.statistic, WllnStatistic::kSymmetrized);
  // gamma_n = n E[X] = n / 2 once b_n exceeds the support.
  EXPECT_NEAR(check.centered.gamma.back()[0], 512.0, 1e-9);
}

TEST(WllnTest, RejectsRatioViolation) {
  const DistributionSpec d(dist::UniformBall{1.0}, kLine);
  WllnOptions opts;
  opts.n_max = 3;
  opts.mc = McOptions{100, 1, 1, 0.99};
  EXPECT_THROW(run_wlln(d, NormingPair({1.0, 2.0, 3.0}, {2.0, 3.0, 4.0}), opts), RatioError);
}

TEST(WllnTest, RejectsStableTypeViolation) {
  const DistributionSpec d(dist::UniformBall{1.0}, kLine);
  WllnOptions opts;
  opts.n_max = 16;
  opts.mc = McOptions{100, 1, 1, 0.99};
  opts.stable_type_p = 1.5;
  // b_n = sqrt(n) decays against n^{2/3}.
  EXPECT_THROW(run_wlln(d, NormingPair::power(0.25, 0.5, 16), opts), ConfigError);
  opts.stable_type_p = 1.0;
  EXPECT_THROW(run_wlln(d, NormingPair::power(0.25, 0.5, 16), opts), ConfigError);
  EXPECT_NO_THROW(run_wlln(d, NormingPair::power(0.25, 1.0, 16), opts));
}

}  // namespace
}  // namespace probineq
