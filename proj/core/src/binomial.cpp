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

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/normal.hpp>

#include "probineq/error.hpp"

namespace probineq {

Interval clopper_pearson(std::uint64_t successes, std::uint64_t trials,
                         double confidence) {
  if (trials == 0) throw ConfigError("binomial interval needs trials > 0");
  if (successes > trials) throw ConfigError("successes exceed trials");
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw ConfigError("confidence level must lie in (0, 1)");
  }
  const double alpha = 1.0 - confidence;
  const auto k = static_cast<double>(successes);
  const auto n = static_cast<double>(trials);
  Interval out{0.0, 1.0};
  if (successes > 0) {
    out.low = boost::math::quantile(boost::math::beta_distribution<>(k, n - k + 1.0),
                                    alpha / 2.0);
  }
  if (successes < trials) {
    out.high = boost::math::quantile(
        boost::math::beta_distribution<>(k + 1.0, n - k), 1.0 - alpha / 2.0);
  }
  return out;
}

double normal_two_sided_quantile(double confidence) {
  return boost::math::quantile(boost::math::normal_distribution<>(),
                               0.5 + 0.5 * confidence);
}

}  // namespace probineq
