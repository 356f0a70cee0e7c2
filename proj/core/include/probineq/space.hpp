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

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace probineq {

// The finite-dimensional normed space l_q^dim. q may be +infinity (max norm).
class SpaceSpec {
 public:
  static constexpr double kMaxNorm = std::numeric_limits<double>::infinity();

  SpaceSpec(std::size_t dim, double q);

  static SpaceSpec real_line() { return SpaceSpec(1, 2.0); }

  std::size_t dim() const noexcept { return dim_; }
  double q() const noexcept { return q_; }
  bool is_max_norm() const noexcept { return q_ == kMaxNorm; }

  // Unchecked hot-path norm; `v.size()` must equal dim().
  double norm(std::span<const double> v) const noexcept;

  std::string describe() const;

  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;

 private:
  std::size_t dim_;
  double q_;
};

// An element of l_q^d. Coordinates are always finite.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : coords_(dim, 0.0) {}
  explicit Vector(std::vector<double> coords);
  Vector(std::initializer_list<double> coords);

  static Vector zero(std::size_t dim) { return Vector(dim); }

  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> coords_;
};

// Checked operations; all throw ConfigError on a dimension mismatch.
double norm(const Vector& v, const SpaceSpec& space);
Vector add(const Vector& u, const Vector& v);
Vector scale(double c, const Vector& v);
Vector sum(std::span<const Vector> vs, const SpaceSpec& space);

// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace probineq
