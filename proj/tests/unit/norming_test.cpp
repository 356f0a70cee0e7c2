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

#include "probineq/norming.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "probineq/error.hpp"

namespace probineq {
namespace {

// Independent inverse: bisection on the forward map.
double bisect_inverse(const FunctionPair& f, double s) {
  double lo = 0.0, hi = static_cast<double>(f.size());
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f.psi(mid) < s ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Random valid prefix: increasing a, nondecreasing ratio.
NormingPair random_pair(std::mt19937_64& gen, std::size_t N) {
  std::uniform_real_distribution<double> step(0.01, 3.0), bump(0.0, 0.05),
      coin(0.0, 1.0);
  std::vector<double> a(N), b(N);
  double ak = 0.0, ratio = 0.5 + coin(gen);
  for (std::size_t k = 0; k < N; ++k) {
    ak += step(gen);
    if (k > 0 && coin(gen) < 0.5) ratio *= 1.0 + bump(gen);
    a[k] = ak;
    b[k] = ak * ratio;
  }
  return NormingPair(a, b);
}

TEST(NormingTest, IdentityInterpolation) {
  const auto f = FunctionPair::build(NormingPair::power(1.0, 1.0, 8));
  for (double t : {0.0, 0.3, 1.5, 4.0, 7.99, 8.0}) {
    EXPECT_DOUBLE_EQ(f.phi(t), t);
    EXPECT_DOUBLE_EQ(f.psi(t), t);
  }
  EXPECT_EQ(f.phi(1.5), 1.5);
  EXPECT_DOUBLE_EQ(f.psi_inverse(3.7), 3.7);
}

TEST(NormingTest, HandInterpolation) {
  const auto f = FunctionPair::build(NormingPair::power(1.0, 1.0, 4));
  EXPECT_EQ(f.psi(0.0), 0.0);
  EXPECT_EQ(f.phi(0.0), 0.0);
  const auto g = FunctionPair::build(NormingPair({2, 4, 6, 8}, {2, 4, 6, 8}));
  EXPECT_DOUBLE_EQ(g.phi(1.25), 2.5);
}

TEST(NormingTest, RejectsDecreasingRatioWithIndex) {
  std::vector<double> a{1, 2, 3, 4}, b{1, std::sqrt(2.0), std::sqrt(3.0), 2};
  try {
    FunctionPair::build(NormingPair(a, b));
    FAIL() << "expected RatioError";
  } catch (const RatioError& e) {
    EXPECT_EQ(e.index(), 2u);
  }
}

TEST(NormingTest, RejectsNonIncreasingSequences) {
  EXPECT_THROW(NormingPair({1, 1, 2}, {1, 2, 3}), ConfigError);
  EXPECT_THROW(NormingPair({1, 2, 3}, {1, 3, 2}), ConfigError);
  EXPECT_THROW(NormingPair({0, 2, 3}, {1, 2, 3}), ConfigError);
  EXPECT_THROW(NormingPair({1, 2}, {1, 2, 3}), ConfigError);
  EXPECT_THROW(NormingPair({}, {}), ConfigError);
}

TEST(NormingTest, InverseMatchesBisectionOracle) {
  const auto f = FunctionPair::build(NormingPair({2, 4, 6, 8}, {2, 4, 6, 8}));
  EXPECT_DOUBLE_EQ(f.psi_inverse(3.0), 1.5);
  EXPECT_NEAR(f.psi_inverse(3.0), bisect_inverse(f, 3.0), 1e-12);
  const auto g = FunctionPair::build(NormingPair::power(0.5, 1.3, 20));
  for (double s : {0.01, 0.5, 1.0, 3.3, 17.0, g.b(20)}) {
    EXPECT_NEAR(g.psi_inverse(s), bisect_inverse(g, s), 1e-10);
  }
}

TEST(NormingTest, BreakpointsAreExact) {
  std::mt19937_64 gen(11);
  const NormingPair p = random_pair(gen, 64);
  const auto f = FunctionPair::build(p);
  for (std::size_t n = 1; n <= p.size(); ++n) {
    EXPECT_EQ(f.phi(static_cast<double>(n)), p.a(n));
    EXPECT_EQ(f.psi(static_cast<double>(n)), p.b(n));
    EXPECT_EQ(f.psi_inverse(p.b(n)), static_cast<double>(n));
    EXPECT_EQ(f.phi_inverse(p.a(n)), static_cast<double>(n));
  }
}

TEST(NormingTest, DomainErrors) {
  const auto f = FunctionPair::build(NormingPair::power(1.0, 1.0, 4));
  EXPECT_THROW(f.phi(-0.1), DomainError);
  EXPECT_THROW(f.psi(4.5), DomainError);
  EXPECT_THROW(f.psi(NAN), DomainError);
  EXPECT_THROW(f.psi_inverse(4.0001), DomainError);
  EXPECT_THROW(f.psi_inverse(-1.0), DomainError);
}

TEST(NormingTest, LinearContinuation) {
  const auto f = FunctionPair::build(NormingPair({1, 2, 4}, {1, 3, 9}));
  EXPECT_DOUBLE_EQ(f.phi(4.0, Extension::kLinear), 6.0);
  EXPECT_DOUBLE_EQ(f.psi(4.0, Extension::kLinear), 15.0);
  EXPECT_DOUBLE_EQ(f.psi_inverse(15.0, Extension::kLinear), 4.0);
}

TEST(NormingTest, RatioMonotoneConstant) {
  const auto f = FunctionPair::build(NormingPair::power(1.0, 1.0, 16));
  EXPECT_TRUE(check_ratio_monotone(f, 1000).monotone);
  EXPECT_EQ(f.ratio(0.0), 1.0);
}

TEST(NormingTest, RatioMonotoneSqrtBreakpoints) {
  const auto f = FunctionPair::build(NormingPair::power(0.5, 1.0, 32));
  EXPECT_TRUE(check_ratio_monotone(f, 1000).monotone);
  // The ratio follows sqrt(t) at the breakpoints.
  EXPECT_NEAR(f.ratio(16.0), 4.0, 1e-15);
}

TEST(NormingTest, RatioCounterexampleReported) {
  const auto f = FunctionPair::from_breakpoints({1, 2, 3}, {2, 3, 4});
  const RatioCheck c = check_ratio_monotone(f, 10);
  EXPECT_FALSE(c.monotone);
  EXPECT_NEAR(c.violating_t, 1.1, 1e-12);
  EXPECT_LT(c.ratio, c.previous_ratio);
}

TEST(NormingTest, RandomPairsProperties) {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const NormingPair p = random_pair(gen, 32);
    const auto f = FunctionPair::build(p);
    EXPECT_TRUE(check_ratio_monotone(f, 1000).monotone);
    for (int i = 0; i < 500; ++i) {
      const double s = unit(gen) * p.b(p.size());
      const double t = f.psi_inverse(s);
      EXPECT_LE(std::abs(f.psi(t) - s), 1e-12 * std::max(1.0, s));
      // Bound transfer: psi/phi at psi^{-1}(s) stays below b_n / a_n for
      // every n with s <= b_n.
      if (t > 0.0) {
        const double r = f.psi(t) / f.phi(t);
        for (std::size_t n = 1; n <= p.size(); ++n) {
          if (s <= p.b(n)) EXPECT_LE(r, p.b(n) / p.a(n) * (1.0 + 1e-12));
        }
      }
    }
  }
}

}  // namespace
}  // namespace probineq
