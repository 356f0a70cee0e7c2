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
#include <span>
#include <variant>
#include <vector>

#include "probineq/norming.hpp"
#include "probineq/sources.hpp"
#include "probineq/space.hpp"

namespace probineq {

// Relative half-width of the band around ||v|| = b_n inside which both
// indicators of the event identity are taken to be 1.
inline constexpr double kBoundaryTolerance = 1e-9;

// Binds the function pair, the space, and the current index n.
class TransformContext {
 public:
  TransformContext(const FunctionPair& pair, SpaceSpec space, std::size_t n,
                   Extension extension = Extension::kNone);

  const FunctionPair& pair() const noexcept { return *pair_; }
  const SpaceSpec& space() const noexcept { return space_; }
  std::size_t n() const noexcept { return n_; }
  Extension extension() const noexcept { return extension_; }
  double a_n() const noexcept { return a_n_; }
  double b_n() const noexcept { return b_n_; }

  // phi(psi^{-1}(r)) for a norm value r.
  double rescaled_norm(double r) const {
    return pair_->phi(pair_->psi_inverse(r, extension_), extension_);
  }

 private:
  const FunctionPair* pair_;
  SpaceSpec space_;
  std::size_t n_;
  Extension extension_;
  double a_n_;
  double b_n_;
};

// v -> phi(psi^{-1}(||v||)) v / ||v||, with 0 -> 0.
Vector rescale(const Vector& v, const TransformContext& ctx);

// In-place variant for hot loops; `norm` is ||v||. Returns ||output|| as
// phi(psi^{-1}(norm)).
double rescale_in_place(std::span<double> v, double norm,
                        const TransformContext& ctx);

// v if ||v|| <= threshold, else 0.
Vector truncate(const Vector& v, double threshold, const SpaceSpec& space);

// Whether 1{||v|| <= b_n} == 1{||rescale(v)|| <= a_n}, applying the boundary
// band around b_n to both indicators.
bool event_identity_holds(const Vector& v, const TransformContext& ctx);

struct SplitSums {
  Vector sum_kept;     // sum of T_i
  Vector flipped_sum;  // sum of T_i 1{||T_i|| <= c} - T_i 1{||T_i|| > c}

  // (sum_kept + flipped_sum) / 2, which equals the truncated sum.
  Vector half_sum() const;
};

SplitSums desymmetrize_split(std::span<const Vector> terms, double threshold,
                             const SpaceSpec& space);

struct AnalyticCentering {};
struct MonteCarloCentering {
  std::uint64_t replications;
  std::uint64_t seed;
};
using CenteringMode = std::variant<AnalyticCentering, MonteCarloCentering>;

struct CenteringEstimate {
  Vector value;           // n E[X 1{||X|| <= b_n}]
  Vector standard_error;  // zero in analytic mode
  bool analytic = true;
};

// gamma_n = n E[X 1{||X|| <= b_n}]. Analytic mode covers symmetric laws
// (gamma_n = 0), point masses, and scalar shifted Pareto / uniform and
// one-sided Pareto laws; anything else throws ConfigError. Monte Carlo mode
// uses the kCentering substream, disjoint from every sample path.
CenteringEstimate gamma_n(const DistributionSpec& d, double b_n, std::size_t n,
                          const CenteringMode& mode);

// True when gamma_n has an analytic form for `d`.
bool has_analytic_centering(const DistributionSpec& d);

}  // namespace probineq
