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

#include "probineq/space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "probineq/error.hpp"

namespace probineq {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw ConfigError("dimension mismatch: " + std::to_string(a) + " vs " +
                      std::to_string(b));
  }
}

}  // namespace

SpaceSpec::SpaceSpec(std::size_t dim, double q) : dim_(dim), q_(q) {
  if (dim == 0) throw ConfigError("space dimension must be >= 1");
  if (std::isnan(q) || q < 1.0) {
    throw ConfigError("norm exponent q must be >= 1 or infinity");
  }
}

double SpaceSpec::norm(std::span<const double> v) const noexcept {
  if (dim_ == 1) return std::abs(v[0]);

  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  if (is_max_norm() || peak == 0.0) return peak;

  if (q_ == 1.0) {
    CompensatedSum acc;
    for (double x : v) acc.add(std::abs(x));
    return acc.value();
  }
  // Scale by the peak so heavy-tailed coordinates cannot overflow.
  if (q_ == 2.0) {
    CompensatedSum acc;
    for (double x : v) {
      const double r = x / peak;
      acc.add(r * r);
    }
    return peak * std::sqrt(acc.value());
  }
  double acc = 0.0;
  for (double x : v) acc += std::pow(std::abs(x) / peak, q_);
  return peak * std::pow(acc, 1.0 / q_);
}

std::string SpaceSpec::describe() const {
  std::ostringstream os;
  os << "l_";
  if (is_max_norm()) {
    os << "inf";
  } else {
    os << q_;
  }
  os << "^" << dim_;
  return os.str();
}

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords)) {
  for (double x : coords_) {
    if (!std::isfinite(x)) throw ConfigError("vector coordinate is not finite");
  }
}

Vector::Vector(std::initializer_list<double> coords)
    : Vector(std::vector<double>(coords)) {}

bool Vector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](double x) { return x == 0.0; });
}

double norm(const Vector& v, const SpaceSpec& space) {
  require_same_dim(v.dim(), space.dim());
  return space.norm(v.coords());
}

Vector add(const Vector& u, const Vector& v) {
  require_same_dim(u.dim(), v.dim());
  std::vector<double> out(u.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = u[i] + v[i];
  return Vector(std::move(out));
}

Vector scale(double c, const Vector& v) {
  std::vector<double> out(v.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = c * v[i];
  return Vector(std::move(out));
}

Vector sum(std::span<const Vector> vs, const SpaceSpec& space) {
  std::vector<double> out(space.dim(), 0.0);
  for (const Vector& v : vs) {
    require_same_dim(v.dim(), space.dim());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += v[i];
  }
  return Vector(std::move(out));
}

}  // namespace probineq
