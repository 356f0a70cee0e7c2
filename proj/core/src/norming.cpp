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

#include <algorithm>
#include <cmath>
#include <string>

#include "probineq/error.hpp"

namespace probineq {

namespace {

void require_strictly_increasing(std::span<const double> v, const char* name) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i]) || v[i] <= 0.0) {
      throw ConfigError(std::string(name) + "_" + std::to_string(i + 1) +
                        " must be positive and finite");
    }
    if (i > 0 && !(v[i] > v[i - 1])) {
      throw ConfigError(std::string(name) + " must be strictly increasing (n = " +
                        std::to_string(i + 1) + ")");
    }
  }
}

std::vector<double> with_origin(std::span<const double> v) {
  std::vector<double> out;
  out.reserve(v.size() + 1);
  out.push_back(0.0);
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

double interpolate(const std::vector<double>& values, double t, Extension ext,
                   const char* name) {
  const std::size_t last = values.size() - 1;
  if (!(t >= 0.0)) {
    throw DomainError(std::string(name) + ": argument must be >= 0");
  }
  if (t > static_cast<double>(last)) {
    if (ext == Extension::kNone) {
      throw DomainError(std::string(name) + ": argument " + std::to_string(t) +
                        " beyond N = " + std::to_string(last));
    }
    const double slope = values[last] - values[last - 1];
    return values[last] + slope * (t - static_cast<double>(last));
  }
  const double whole = std::floor(t);
  const auto k = static_cast<std::size_t>(whole);
  if (whole == t) return values[k];
  return values[k] + (values[k + 1] - values[k]) * (t - whole);
}

double invert(const std::vector<double>& values, double s, Extension ext,
              const char* name) {
  const std::size_t last = values.size() - 1;
  if (!(s >= 0.0)) {
    throw DomainError(std::string(name) + ": argument must be >= 0");
  }
  if (s > values[last]) {
    if (ext == Extension::kNone) {
      throw DomainError(std::string(name) + ": argument exceeds the range of the "
                        "stored prefix");
    }
    const double slope = values[last] - values[last - 1];
    return static_cast<double>(last) + (s - values[last]) / slope;
  }
  const auto it = std::lower_bound(values.begin(), values.end(), s);
  const auto n = static_cast<std::size_t>(it - values.begin());
  if (*it == s) return static_cast<double>(n);
  return static_cast<double>(n - 1) +
         (s - values[n - 1]) / (values[n] - values[n - 1]);
}

}  // namespace

NormingPair::NormingPair(std::vector<double> a, std::vector<double> b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty()) throw ConfigError("norming prefix must be non-empty");
  if (a_.size() != b_.size()) {
    throw ConfigError("norming sequences a and b differ in length");
  }
  require_strictly_increasing(a_, "a");
  require_strictly_increasing(b_, "b");
}

NormingPair NormingPair::power(double a_exponent, double b_exponent,
                               std::size_t N) {
  if (!(a_exponent > 0.0) || !(b_exponent > 0.0)) {
    throw ConfigError("power norming exponents must be > 0");
  }
  std::vector<double> a(N), b(N);
  for (std::size_t n = 1; n <= N; ++n) {
    const auto x = static_cast<double>(n);
    a[n - 1] = a_exponent == 1.0 ? x : std::pow(x, a_exponent);
    b[n - 1] = b_exponent == 1.0 ? x : std::pow(x, b_exponent);
  }
  return NormingPair(std::move(a), std::move(b));
}

std::optional<std::size_t> NormingPair::ratio_violation() const noexcept {
  // Cross-multiplied: b_n / a_n < b_{n-1} / a_{n-1}  <=>  b_n a_{n-1} <
  // b_{n-1} a_n. A drop within kRatioTolerance (relative) is rounding in the
  // inputs, e.g. b = r * a computed term by term.
  for (std::size_t i = 1; i < a_.size(); ++i) {
    if (b_[i] * a_[i - 1] < b_[i - 1] * a_[i] * (1.0 - kRatioTolerance)) return i + 1;
  }
  return std::nullopt;
}

FunctionPair::FunctionPair(std::vector<double> phi, std::vector<double> psi)
    : phi_(std::move(phi)), psi_(std::move(psi)) {}

FunctionPair FunctionPair::build(const NormingPair& pair) {
  if (auto n = pair.ratio_violation()) {
    throw RatioError(*n, "b_n / a_n decreases at n = " + std::to_string(*n));
  }
  return FunctionPair(with_origin(pair.a_values()), with_origin(pair.b_values()));
}

FunctionPair FunctionPair::from_breakpoints(std::vector<double> a,
                                            std::vector<double> b) {
  NormingPair checked(std::move(a), std::move(b));
  return FunctionPair(with_origin(checked.a_values()),
                      with_origin(checked.b_values()));
}

double FunctionPair::phi(double t, Extension ext) const {
  return interpolate(phi_, t, ext, "phi");
}

double FunctionPair::psi(double t, Extension ext) const {
  return interpolate(psi_, t, ext, "psi");
}

double FunctionPair::phi_inverse(double s, Extension ext) const {
  return invert(phi_, s, ext, "phi^-1");
}

double FunctionPair::psi_inverse(double s, Extension ext) const {
  return invert(psi_, s, ext, "psi^-1");
}

double FunctionPair::ratio(double t) const {
  if (t == 0.0) return psi_[1] / phi_[1];
  return psi(t) / phi(t);
}

RatioCheck check_ratio_monotone(const FunctionPair& f,
                                std::size_t points_per_unit, double rel_tol) {
  RatioCheck out;
  const std::size_t steps = f.size() * std::max<std::size_t>(points_per_unit, 1);
  double previous = f.ratio(0.0);
  for (std::size_t k = 1; k <= steps; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(points_per_unit);
    const double r = f.ratio(std::min(t, static_cast<double>(f.size())));
    if (r < previous * (1.0 - rel_tol)) {
      out.monotone = false;
      out.violating_t = t;
      out.previous_ratio = previous;
      out.ratio = r;
      return out;
    }
    previous = std::max(previous, r);
  }
  return out;
}

}  // namespace probineq
