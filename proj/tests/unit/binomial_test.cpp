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

#include "probineq/binomial.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace probineq {
namespace {

// P(X <= k) for X ~ Binomial(n, p), summed in log space.
double binomial_cdf(int k, int n, double p) {
  if (p <= 0.0) return 1.0;
  if (p >= 1.0) return k >= n ? 1.0 : 0.0;
  double acc = 0.0;
  for (int i = 0; i <= k; ++i) {
    const double log_term = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) -
                            std::lgamma(n - i + 1.0) + i * std::log(p) +
                            (n - i) * std::log1p(-p);
    acc += std::exp(log_term);
  }
  return acc;
}

// Root of a decreasing function g on [0, 1] by bisection.
template <class G>
double bisect_decreasing(G g, double target) {
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Interval oracle(int k, int n, double confidence) {
  const double tail = 0.5 * (1.0 - confidence);
  Interval out{0.0, 1.0};
  // Lower: P(X >= k | p) = tail, increasing in p.
  if (k > 0) {
    out.low = bisect_decreasing([&](double p) { return binomial_cdf(k - 1, n, p); },
                                1.0 - tail);
  }
  if (k < n) {
    out.high = bisect_decreasing([&](double p) { return binomial_cdf(k, n, p); }, tail);
  }
  return out;
}

TEST(BinomialTest, TextbookExample) {
  const Interval ci = clopper_pearson(5, 10, 0.95);
  EXPECT_NEAR(ci.low, 0.187, 5e-4);
  EXPECT_NEAR(ci.high, 0.813, 5e-4);
}

TEST(BinomialTest, MatchesBisectionOracle) {
  for (int n : {1, 7, 10, 50, 400}) {
    for (int k = 0; k <= n; k += std::max(1, n / 9)) {
      for (double conf : {0.9, 0.95, 0.99}) {
        const Interval got = clopper_pearson(k, n, conf);
        const Interval want = oracle(k, n, conf);
        EXPECT_NEAR(got.low, want.low, 1e-9) << k << "/" << n << " @" << conf;
        EXPECT_NEAR(got.high, want.high, 1e-9) << k << "/" << n << " @" << conf;
      }
    }
  }
}

TEST(BinomialTest, EdgeCounts) {
  const Interval none = clopper_pearson(0, 100, 0.99);
  EXPECT_EQ(none.low, 0.0);
  EXPECT_NEAR(none.high, 1.0 - std::pow(0.005, 1.0 / 100), 1e-12);
  const Interval all = clopper_pearson(100, 100, 0.99);
  EXPECT_NEAR(all.low, std::pow(0.005, 1.0 / 100), 1e-12);
  EXPECT_EQ(all.high, 1.0);
}

TEST(BinomialTest, NormalQuantile) {
  EXPECT_NEAR(normal_two_sided_quantile(0.95), 1.959963984540054, 1e-12);
  EXPECT_NEAR(normal_two_sided_quantile(0.99), 2.5758293035489, 1e-12);
}

}  // namespace
}  // namespace probineq
