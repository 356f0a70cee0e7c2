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

#include "probineq/suite.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "probineq/error.hpp"

namespace probineq {
namespace {

const SpaceSpec kLine = SpaceSpec::real_line();

std::vector<Vector> random_vectors(std::mt19937_64& gen, std::size_t n, const SpaceSpec& s,
                                   double max_norm) {
  std::normal_distribution<double> coord;
  std::uniform_real_distribution<double> radius(0.0, max_norm);
  std::vector<Vector> out;
  while (out.size() < n) {
    std::vector<double> c(s.dim());
    for (double& v : c) v = coord(gen);
    const Vector dir(c);
    if (dir.is_zero()) continue;
    out.push_back(scale(radius(gen) / norm(dir, s), dir));
  }
  return out;
}

int count(const std::vector<InequalityReport>& reports, Verdict v) {
  int k = 0;
  for (const auto& r : reports) k += r.verdict == v;
  return k;
}

TEST(SuiteTest, FinalizeRules) {
  InequalityReport r;
  r.lhs = TailEstimate::exact_count(3, 8);
  r.rhs = TailEstimate::exact_count(1, 8);
  r.multiplier = 2.0;
  finalize(r);
  EXPECT_EQ(r.verdict, Verdict::kViolated);
  EXPECT_DOUBLE_EQ(r.rhs_bound, 0.25);
  EXPECT_DOUBLE_EQ(r.slack, -0.125);

  r.lhs = TailEstimate::exact_count(2, 8);
  finalize(r);
  EXPECT_EQ(r.verdict, Verdict::kHolds);

  // Overlapping intervals cannot decide.
  r.lhs = TailEstimate::from_counts(110, 1000, 0.99);
  r.rhs = TailEstimate::from_counts(50, 1000, 0.99);
  finalize(r);
  EXPECT_EQ(r.verdict, Verdict::kInconclusive);

  r.lhs = TailEstimate::from_counts(400, 1000, 0.99);
  finalize(r);
  EXPECT_EQ(r.verdict, Verdict::kViolated);

  r.lhs = TailEstimate::from_counts(10, 1000, 0.99);
  finalize(r);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
}

TEST(SuiteTest, LinearGrid) {
  const auto g = linear_grid(2.0, 5);
  EXPECT_EQ(g, (std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0}));
  EXPECT_EQ(linear_grid(1.0).size(), kDefaultGridPoints);
}

TEST(SuiteTest, IdentityTransformsGiveEqualSides) {
  // a = b makes rescale the identity, so both tails coincide.
  const auto f = FunctionPair::build(NormingPair::power(1.0, 1.0, 10));
  std::mt19937_64 gen(1);
  const SpaceSpec s(2, 2.0);
  const auto x = random_vectors(gen, 6, s, 6.0);
  const auto reports = check_thm11_i(x, f, s, {}, ExactMode{});
  ASSERT_EQ(reports.size(), kDefaultGridPoints);
  for (const auto& r : reports) {
    EXPECT_DOUBLE_EQ(r.lhs.p_hat, r.rhs.p_hat);
    EXPECT_EQ(r.verdict, Verdict::kHolds);
  }
}

TEST(SuiteTest, ExactSquareRootPair) {
  const auto f = FunctionPair::build(NormingPair::power(0.5, 1.0, 8));
  const SpaceSpec s(3, 2.0);
  std::mt19937_64 gen(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_vectors(gen, 8, s, 8.0);
    const auto reports = check_thm11_i(x, f, s, {}, ExactMode{});
    EXPECT_EQ(count(reports, Verdict::kViolated), 0);
    for (const auto& r : reports) {
      EXPECT_TRUE(r.lhs.exact);
      EXPECT_GE(r.slack, 0.0);
    }
    // t = 0 is the first grid point: P(||S|| > 0) on both sides.
    EXPECT_EQ(reports.front().t, 0.0);
  }
}

TEST(SuiteTest, MonteCarloThm11iAgreesWithExact) {
  const auto f = FunctionPair::build(NormingPair::power(0.5, 1.0, 12));
  const SpaceSpec s(2, 1.0);
  std::mt19937_64 gen(3);
  const auto x = random_vectors(gen, 12, s, 12.0);
  const std::vector<double> t{0.2, 0.5, 0.8};
  const auto exact = check_thm11_i(x, f, s, t, ExactMode{});
  const auto mc = check_thm11_i(x, f, s, t, MonteCarloMode{McOptions{20000, 7, 1, 0.999}});
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_LE(mc[i].lhs.ci_low, exact[i].lhs.p_hat);
    EXPECT_GE(mc[i].lhs.ci_high, exact[i].lhs.p_hat);
    EXPECT_NE(mc[i].verdict, Verdict::kViolated);
  }
}

TEST(SuiteTest, Thm11iRejectsLargeVectors) {
  const auto f = FunctionPair::build(NormingPair::power(0.5, 1.0, 4));
  const std::vector<Vector> x{Vector{1.0}, Vector{4.5}, Vector{0.0}, Vector{1.0}};
  EXPECT_THROW(check_thm11_i(x, f, kLine, {}, ExactMode{}), ConfigError);
}

TEST(SuiteTest, ContractionExtremes) {
  const SpaceSpec s(2, SpaceSpec::kMaxNorm);
  std::mt19937_64 gen(4);
  const auto x = random_vectors(gen, 7, s, 3.0);
  const std::vector<double> ones(7, 1.0), zeros(7, 0.0);
  for (const auto& r : check_contraction(x, ones, s, {}, ExactMode{})) {
    EXPECT_DOUBLE_EQ(r.lhs.p_hat, r.rhs.p_hat);
  }
  for (const auto& r : check_contraction(x, zeros, s, {}, ExactMode{})) {
    EXPECT_EQ(r.lhs.p_hat, 0.0);
    EXPECT_EQ(r.verdict, Verdict::kHolds);
  }
}

TEST(SuiteTest, ContractionRandomWeights) {
  const SpaceSpec s(2, SpaceSpec::kMaxNorm);
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> w(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_vectors(gen, 10, s, 2.0);
    std::vector<double> alpha(10);
    for (double& a : alpha) a = w(gen);
    EXPECT_EQ(count(check_contraction(x, alpha, s, {}, ExactMode{}), Verdict::kViolated), 0);
  }
}

TEST(SuiteTest, ContractionRejectsLargeWeights) {
  const std::vector<Vector> x{Vector{1.0}, Vector{1.0}};
  const std::vector<double> alpha{0.5, 1.5};
  EXPECT_THROW(check_contraction(x, alpha, kLine, {}, ExactMode{}), ConfigError);
}

TEST(SuiteTest, Thm11iiSmallRuns) {
  const auto f = FunctionPair::build(NormingPair::power(0.5, 1.0, 32));
  const std::vector<DistributionSpec> laws{
      DistributionSpec(dist::StableSymmetric{1.0}, kLine),
      DistributionSpec(dist::ParetoSymmetric{1.5}, SpaceSpec(2, 2.0), Lifting::kIidCoordinates),
  };
  for (const auto& d : laws) {
    const auto reports = check_thm11_ii(d, f, 32, {}, McOptions{4000, 11, 1, 0.99});
    ASSERT_EQ(reports.size(), kDefaultGridPoints);
    EXPECT_EQ(count(reports, Verdict::kViolated), 0) << d.describe();
    EXPECT_EQ(reports.front().multiplier, 4.0);
  }
}

TEST(SuiteTest, Thm11iiAnalyticTailTerm) {
  // n P(|X| > b_n) with Pareto alpha = 1 and b_n = n: exactly 1.
  const auto f = FunctionPair::build(NormingPair::power(0.5, 1.0, 16));
  const DistributionSpec d(dist::ParetoSymmetric{1.0}, kLine);
  const std::vector<double> t{1.0};
  const auto r = check_thm11_ii(d, f, 16, t, McOptions{1000, 1, 1, 0.99});
  EXPECT_DOUBLE_EQ(r[0].tail_term, 1.0);
  EXPECT_EQ(r[0].verdict, Verdict::kHolds);
}

TEST(SuiteTest, Thm11iiRequiresSymmetry) {
  const auto f = FunctionPair::build(NormingPair::power(0.5, 1.0, 8));
  const DistributionSpec d(dist::ParetoOneSided{2.0}, kLine);
  EXPECT_THROW(check_thm11_ii(d, f, 8, {}, McOptions{1000, 1, 1, 0.99}), ConfigError);
}

TEST(SuiteTest, LevyExactRademacher) {
  const auto reports = check_levy_exact_rademacher(8, 2.0, {});
  EXPECT_EQ(count(reports, Verdict::kViolated), 0);
  for (const auto& r : reports) EXPECT_TRUE(r.lhs.exact);
  EXPECT_THROW(check_levy_exact_rademacher(11, 1.0, {}), EnumerationLimitError);
}

TEST(SuiteTest, LevyCauchy) {
  const DistributionSpec d(dist::StableSymmetric{1.0}, kLine);
  const auto reports = check_levy(d, 64, 64.0, {}, McOptions{5000, 3, 1, 0.99});
  EXPECT_EQ(count(reports, Verdict::kViolated), 0);
}

}  // namespace
}  // namespace probineq
