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
#include <optional>
#include <span>
#include <vector>

namespace probineq {

// Relative slack allowed when checking that b_n / a_n is nondecreasing.
inline constexpr double kRatioTolerance = 1e-12;

// Finite prefixes a_1..a_N and b_1..b_N of two norming sequences.
//
// Construction enforces positivity and strict increase. The ratio condition
// (b_n / a_n nondecreasing) is checked separately by FunctionPair::build so a
// violating pair can still be inspected.
class NormingPair {
 public:
  NormingPair(std::vector<double> a, std::vector<double> b);

  // a_n = n^{a_exponent}, b_n = n^{b_exponent} for n = 1..N.
  static NormingPair power(double a_exponent, double b_exponent, std::size_t N);

  std::size_t size() const noexcept { return a_.size(); }
  // 1-based accessors.
  double a(std::size_t n) const { return a_.at(n - 1); }
  double b(std::size_t n) const { return b_.at(n - 1); }
  std::span<const double> a_values() const noexcept { return a_; }
  std::span<const double> b_values() const noexcept { return b_; }

  // First n >= 2 where b_n / a_n < b_{n-1} / a_{n-1}, if any.
  std::optional<std::size_t> ratio_violation() const noexcept;

 private:
  std::vector<double> a_;
  std::vector<double> b_;
};

// How evaluation behaves beyond the last stored breakpoint t = N.
enum class Extension {
  kNone,    // domain error
  kLinear,  // continue the last linear segment
};

// Piecewise-linear interpolants phi and psi through (0, 0), (n, a_n) and
// (n, b_n), with closed-form inverses. Breakpoints sit exactly on the
// integers and evaluation at an integer returns the stored value untouched.
class FunctionPair {
 public:
  // Rejects a pair whose ratio b_n / a_n decreases (RatioError carries n).
  static FunctionPair build(const NormingPair& pair);

  // Skips the ratio check. Only strict increase is enforced. Used to build
  // counterexamples for the monotonicity diagnostic.
  static FunctionPair from_breakpoints(std::vector<double> a,
                                       std::vector<double> b);

  std::size_t size() const noexcept { return phi_.size() - 1; }
  double a(std::size_t n) const { return phi_.at(n); }
  double b(std::size_t n) const { return psi_.at(n); }

  double phi(double t, Extension ext = Extension::kNone) const;
  double psi(double t, Extension ext = Extension::kNone) const;
  double phi_inverse(double s, Extension ext = Extension::kNone) const;
  double psi_inverse(double s, Extension ext = Extension::kNone) const;

  // psi(t) / phi(t), with the value at t = 0 taken as b_1 / a_1.
  double ratio(double t) const;

 private:
  FunctionPair(std::vector<double> phi, std::vector<double> psi);

  // Values at 0..N; index 0 holds the prepended zero.
  std::vector<double> phi_;
  std::vector<double> psi_;
};

struct RatioCheck {
  bool monotone = true;
  // Populated when monotone == false.
  double violating_t = 0.0;
  double previous_ratio = 0.0;
  double ratio = 0.0;
};

// Evaluates psi / phi on {0} and the grid k / points_per_unit, k = 1..N*ppu,
// and reports the first point where the ratio drops by more than rel_tol.
RatioCheck check_ratio_monotone(const FunctionPair& f,
                                std::size_t points_per_unit,
                                double rel_tol = kRatioTolerance);

}  // namespace probineq
