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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "probineq/rng.hpp"
#include "probineq/space.hpp"

namespace probineq {

namespace dist {

// P(R = -1) = P(R = 1) = 1/2.
struct Rademacher {};

// Random sign times a Pareto magnitude: P(|X| > t) = min(1, t^{-alpha}).
struct ParetoSymmetric {
  double alpha;
};

// Pareto magnitude with density alpha t^{-alpha-1} on [1, inf). Not symmetric.
struct ParetoOneSided {
  double alpha;
};

// Symmetric alpha-stable with characteristic function exp(-|t|^alpha).
struct StableSymmetric {
  double alpha;
};

// Scalar law uniform on [-radius, radius].
struct UniformBall {
  double radius;
};

// Degenerate law at a fixed vector (lifting is ignored).
struct PointMass {
  Vector value;
};

}  // namespace dist

using BaseLaw = std::variant<dist::Rademacher, dist::ParetoSymmetric,
                             dist::ParetoOneSided, dist::StableSymmetric,
                             dist::UniformBall, dist::PointMass>;

// How a scalar law is carried into l_q^d.
enum class Lifting {
  kScalar,          // d must be 1
  kIidCoordinates,  // each coordinate an independent scalar draw times d^{-1/q}
  kRadial,          // |scalar draw| times a random direction on the unit sphere
};

// Law of the i.i.d. summands: a base law, its lifting into `space`, and an
// optional deterministic shift (the `shifted` kind).
class DistributionSpec {
 public:
  DistributionSpec(BaseLaw law, SpaceSpec space,
                   Lifting lifting = Lifting::kScalar,
                   std::optional<Vector> shift = std::nullopt);

  const BaseLaw& law() const noexcept { return law_; }
  const SpaceSpec& space() const noexcept { return space_; }
  Lifting lifting() const noexcept { return lifting_; }
  const std::optional<Vector>& shift() const noexcept { return shift_; }

  // Whether X and -X have the same law.
  bool is_symmetric() const noexcept;

  // P(||X|| > t) in closed form, when one exists for this law and lifting.
  std::optional<double> analytic_tail(double t) const;

  // Draws one vector into `out` (size = dim). Hot path: no allocation.
  void draw(Stream& stream, std::span<double> out) const;

  std::string describe() const;

 private:
  double scalar_draw(Stream& stream) const;

  BaseLaw law_;
  SpaceSpec space_;
  Lifting lifting_;
  std::optional<Vector> shift_;
  double coordinate_scale_ = 1.0;
};

// Symmetric alpha-stable draw by the Chambers-Mallows-Stuck transform.
double stable_symmetric_draw(double alpha, Stream& stream) noexcept;

// `count` i.i.d. draws from substream `key`.
std::vector<Vector> sample(const DistributionSpec& d, const StreamKey& key,
                           std::size_t count);

// `count` i.i.d. symmetric alpha-stable reals; alpha in (0, 2].
std::vector<double> sample_stable(double alpha, const StreamKey& key,
                                  std::size_t count);

// Produces (X_i, X'_i) pairs: X from substream kPath and X' from kCopy of the
// same seed and replication.
class PairedSampler {
 public:
  PairedSampler(const DistributionSpec& d, const StreamKey& key);

  std::pair<Vector, Vector> next();
  void next(std::span<double> x, std::span<double> x_copy);

 private:
  const DistributionSpec* spec_;
  Stream primary_;
  Stream copy_;
};

PairedSampler independent_copy(const DistributionSpec& d, const StreamKey& key);

}  // namespace probineq
