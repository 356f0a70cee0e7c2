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

#include <cstdint>

namespace probineq {

struct Interval {
  double low;
  double high;
};

// Exact (Clopper-Pearson) two-sided interval for a binomial proportion with
// `successes` out of `trials` at the given confidence level.
Interval clopper_pearson(std::uint64_t successes, std::uint64_t trials,
                         double confidence);

// Two-sided standard normal quantile z with P(|Z| <= z) = confidence.
double normal_two_sided_quantile(double confidence);

}  // namespace probineq
