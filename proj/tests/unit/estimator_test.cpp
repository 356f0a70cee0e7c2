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

#include "probineq/estimator.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "probineq/error.hpp"

namespace probineq {
namespace {

const SpaceSpec kLine = SpaceSpec::real_line();

TEST(EstimatorTest, ExactTailSmallCases) {
  const std::vector<Vector> one{Vector{1.0}};
  EXPECT_EQ(exact_rademacher_tail(one, {}, 0.5, kLine).p_hat, 1.0);
  const std::vector<Vector> two{Vector{1.0}, Vector{1.0}};
  // Sums are -2, 0, 0, 2.
  EXPECT_EQ(exact_rademacher_tail(two, {}, 1.0, kLine).p_hat, 0.5);
  EXPECT_EQ(exact_rademacher_tail(two, {}, 2.0, kLine).p_hat, 0.0);
  const auto e = exact_rademacher_tail(two, {}, 1.0, kLine);
  EXPECT_TRUE(e.exact);
  EXPECT_EQ(e.successes, 2u);
  EXPECT_EQ(e.replications, 4u);
  EXPECT_EQ(e.ci_low, e.ci_high);
}

TEST(EstimatorTest, ExactTailVanishesBeyondTotalNorm) {
  std::mt19937_64 gen(3);
  std::normal_distribution<double> coord;
  const SpaceSpec s(3, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vector> x;
    double total = 0.0;
    for (int i = 0; i < 6; ++i) {
      x.push_back(Vector{coord(gen), coord(gen), coord(gen)});
      total += norm(x.back(), s);
    }
    EXPECT_EQ(exact_rademacher_tail(x, {}, total, s).p_hat, 0.0);
    EXPECT_EQ(exact_rademacher_tail(x, {}, total * 1.01, s).p_hat, 0.0);
  }
}

TEST(EstimatorTest, SignPatternIndexing) {
  const std::vector<Vector> x{Vector{1.0}, Vector{10.0}};
  const std::vector<double> w{1.0, 0.5};
  const auto norms = rademacher_sum_norms(x, w, kLine);
  ASSERT_EQ(norms.size(), 4u);
  EXPECT_DOUBLE_EQ(norms[0b00], 6.0);
  EXPECT_DOUBLE_EQ(norms[0b01], 4.0);  // -1 + 5
  EXPECT_DOUBLE_EQ(norms[0b10], 4.0);  //  1 - 5
  EXPECT_DOUBLE_EQ(norms[0b11], 6.0);
}

TEST(EstimatorTest, EnumerationCutoff) {
  const std::vector<Vector> x(5, Vector{1.0});
  EXPECT_THROW(rademacher_sum_norms(x, {}, kLine, 4), EnumerationLimitError);
  EXPECT_NO_THROW(rademacher_sum_norms(x, {}, kLine, 5));
}

TEST(EstimatorTest, CountExceeding) {
  const std::vector<double> v{0.0, 1.0, 1.0, 2.0, 3.0};
  EXPECT_EQ(count_exceeding(v, 1.0), 2u);
  EXPECT_EQ(count_exceeding(v, -1.0), 5u);
  EXPECT_EQ(count_exceeding(v, 3.0), 0u);
}

TEST(EstimatorTest, ExactMonotoneInT) {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  const SpaceSpec s(2, SpaceSpec::kMaxNorm);
  std::vector<Vector> x;
  for (int i = 0; i < 9; ++i) x.push_back(Vector{coord(gen), coord(gen)});
  double prev = 1.0;
  for (double t = 0.0; t < 12.0; t += 0.05) {
    const double p = exact_rademacher_tail(x, {}, t, s).p_hat;
    EXPECT_LE(p, prev);
    prev = p;
  }
}

TEST(EstimatorTest, ExactScaleEquivariance) {
  const SpaceSpec s(2, 2.0);
  const std::vector<Vector> x{Vector{1.0, 0.5}, Vector{-0.25, 2.0}, Vector{0.75, 0.75}};
  std::vector<Vector> scaled;
  for (const auto& v : x) scaled.push_back(scale(4.0, v));
  for (double t : {0.1, 0.9, 1.7, 2.6, 3.3}) {
    EXPECT_EQ(exact_rademacher_tail(x, {}, t, s).p_hat,
              exact_rademacher_tail(scaled, {}, 4.0 * t, s).p_hat);
  }
}

TEST(EstimatorTest, MonteCarloAgreesWithEnumeration) {
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  const SpaceSpec s(2, 2.0);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Vector> x;
    for (int i = 0; i < 8; ++i) x.push_back(Vector{coord(gen), coord(gen)});
    const double t = 1.0;
    const double exact = exact_rademacher_tail(x, {}, t, s).p_hat;
    const McOptions opts{20000, static_cast<std::uint64_t>(trial), 1, 0.999};
    const auto mc = mc_tail(
        [&](const StreamKey& key) {
          Stream st(key);
          std::vector<double> acc(2, 0.0);
          for (const auto& v : x) {
            const double e = st.sign();
            acc[0] += e * v[0];
            acc[1] += e * v[1];
          }
          return s.norm(acc) > t;
        },
        opts);
    EXPECT_LE(mc.ci_low, exact);
    EXPECT_GE(mc.ci_high, exact);
  }
}

TEST(EstimatorTest, ConstantEvents) {
  const McOptions opts{1000, 1, 1, 0.99};
  const auto never = mc_tail([](const StreamKey&) { return false; }, opts);
  EXPECT_EQ(never.successes, 0u);
  EXPECT_EQ(never.ci_low, 0.0);
  EXPECT_GT(never.ci_high, 0.0);
  const auto always = mc_tail([](const StreamKey&) { return true; }, opts);
  EXPECT_EQ(always.p_hat, 1.0);
  EXPECT_EQ(always.ci_high, 1.0);
}

TEST(EstimatorTest, RejectsTooFewReplications) {
  EXPECT_THROW(mc_tail([](const StreamKey&) { return true; }, McOptions{99, 1, 1, 0.99}),
               ConfigError);
}

TEST(EstimatorTest, PairedJointTable) {
  const McOptions opts{5000, 4, 2, 0.99};
  const auto uniform = [](const StreamKey& k) { return Stream(k).uniform(); };
  const auto pt = paired_tail([&](const StreamKey& k) { return uniform(k) < 0.3; },
                              [&](const StreamKey& k) { return uniform(k) < 0.6; }, opts);
  // Same draws: lhs implies rhs.
  EXPECT_EQ(pt.joint[1][0], 0u);
  EXPECT_EQ(pt.joint[1][1], pt.lhs.successes);
  EXPECT_EQ(pt.joint[0][1] + pt.joint[1][1], pt.rhs.successes);
  EXPECT_EQ(pt.joint[0][0] + pt.joint[0][1] + pt.joint[1][0] + pt.joint[1][1], 5000u);
}

TEST(EstimatorTest, ClopperPearsonCoverage) {
  int covered = 0;
  const double p = 0.3;
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    const auto est = mc_tail([&](const StreamKey& k) { return Stream(k).uniform() < p; },
                             McOptions{200, 1000 + trial, 1, 0.99});
    covered += est.ci_low <= p && p <= est.ci_high;
  }
  EXPECT_GE(covered, 985);
}

TEST(EstimatorTest, CountsIndependentOfThreads) {
  const auto factory = [] {
    return [](const StreamKey& key, std::span<std::uint64_t> c) {
      Stream s(key);
      const double u = s.uniform();
      c[0] += u < 0.25;
      c[1] += u < 0.5;
      c[2] += static_cast<std::uint64_t>(s.next_u32() & 7u);
    };
  };
  const auto one = mc_count({10007, 9, 1, 0.99}, 3, factory);
  for (unsigned threads : {2u, 3u, 8u}) {
    EXPECT_EQ(mc_count({10007, 9, threads, 0.99}, 3, factory), one);
  }
}

TEST(EstimatorTest, StandardError) {
  const auto e = TailEstimate::from_counts(25, 100, 0.95);
  EXPECT_DOUBLE_EQ(e.standard_error(), std::sqrt(0.25 * 0.75 / 100));
  EXPECT_EQ(TailEstimate::exact_count(1, 4).standard_error(), 0.0);
}

}  // namespace
}  // namespace probineq
