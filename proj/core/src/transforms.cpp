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

#include "probineq/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "probineq/error.hpp"
#include "probineq/rng.hpp"

namespace probineq {

namespace {

// Integrals of the one-sided Pareto density alpha u^{-alpha-1} on [1, inf)
// restricted to [lo, hi]: probability mass and first moment.
struct ParetoPiece {
  double mass = 0.0;
  double moment = 0.0;
};

ParetoPiece pareto_piece(double alpha, double lo, double hi) {
  lo = std::max(lo, 1.0);
  if (!(hi > lo)) return {};
  const auto cdf = [&](double u) { return 1.0 - std::pow(u, -alpha); };
  const auto first = [&](double u) {
    if (alpha == 1.0) return std::log(u);
    return alpha / (alpha - 1.0) * (1.0 - std::pow(u, 1.0 - alpha));
  };
  return {cdf(hi) - cdf(lo), first(hi) - first(lo)};
}

bool scalar_like(const DistributionSpec& d) {
  return d.space().dim() == 1;
}

// E[X 1{|X| <= b}] for a scalar law with shift c, when available.
std::optional<double> scalar_truncated_mean(const DistributionSpec& d, double c,
                                            double b) {
  const double lo = -b - c;  // window for the unshifted draw Y: |c + Y| <= b
  const double hi = b - c;
  if (const auto* p = std::get_if<dist::ParetoSymmetric>(&d.law())) {
    const ParetoPiece pos = pareto_piece(p->alpha, lo, hi);
    const ParetoPiece neg = pareto_piece(p->alpha, -hi, -lo);
    const double mass = 0.5 * (pos.mass + neg.mass);
    const double moment = 0.5 * (pos.moment - neg.moment);
    return c * mass + moment;
  }
  if (const auto* p = std::get_if<dist::ParetoOneSided>(&d.law())) {
    if (d.lifting() == Lifting::kRadial) return std::nullopt;
    const ParetoPiece pos = pareto_piece(p->alpha, lo, hi);
    return c * pos.mass + pos.moment;
  }
  if (const auto* u = std::get_if<dist::UniformBall>(&d.law())) {
    const double left = std::max(c - u->radius, -b);
    const double right = std::min(c + u->radius, b);
    if (!(right > left)) return 0.0;
    return (right * right - left * left) / (4.0 * u->radius);
  }
  if (std::holds_alternative<dist::Rademacher>(d.law())) {
    double acc = 0.0;
    for (double x : {c + 1.0, c - 1.0}) {
      if (std::abs(x) <= b) acc += 0.5 * x;
    }
    return acc;
  }
  return std::nullopt;
}

std::optional<Vector> analytic_centering(const DistributionSpec& d, double b_n,
                                         std::size_t n) {
  const auto dim = d.space().dim();
  const double count = static_cast<double>(n);
  if (const auto* pm = std::get_if<dist::PointMass>(&d.law())) {
    const Vector c = d.shift() ? add(pm->value, *d.shift()) : pm->value;
    if (d.space().norm(c.coords()) <= b_n) return scale(count, c);
    return Vector::zero(dim);
  }
  if (d.is_symmetric()) return Vector::zero(dim);
  if (!scalar_like(d)) return std::nullopt;
  const double c = d.shift() ? (*d.shift())[0] : 0.0;
  if (auto m = scalar_truncated_mean(d, c, b_n)) return Vector{count * *m};
  return std::nullopt;
}

}  // namespace

TransformContext::TransformContext(const FunctionPair& pair, SpaceSpec space,
                                   std::size_t n, Extension extension)
    : pair_(&pair), space_(space), n_(n), extension_(extension) {
  if (n == 0 || n > pair.size()) {
    throw ConfigError("transform index n = " + std::to_string(n) +
                      " outside the stored prefix 1.." +
                      std::to_string(pair.size()));
  }
  a_n_ = pair.a(n);
  b_n_ = pair.b(n);
}

double rescale_in_place(std::span<double> v, double norm,
                        const TransformContext& ctx) {
  if (norm == 0.0) {
    std::fill(v.begin(), v.end(), 0.0);
    return 0.0;
  }
  const double target = ctx.rescaled_norm(norm);
  const double factor = target / norm;
  for (double& x : v) x *= factor;
  return target;
}

Vector rescale(const Vector& v, const TransformContext& ctx) {
  std::vector<double> out(v.coords().begin(), v.coords().end());
  const double r = norm(v, ctx.space());
  rescale_in_place(out, r, ctx);
  return Vector(std::move(out));
}

Vector truncate(const Vector& v, double threshold, const SpaceSpec& space) {
  if (norm(v, space) <= threshold) return v;
  return Vector::zero(v.dim());
}

bool event_identity_holds(const Vector& v, const TransformContext& ctx) {
  const double r = norm(v, ctx.space());
  if (std::abs(r - ctx.b_n()) <= kBoundaryTolerance * ctx.b_n()) return true;
  const bool original = r <= ctx.b_n();
  const bool rescaled = norm(rescale(v, ctx), ctx.space()) <= ctx.a_n();
  return original == rescaled;
}

Vector SplitSums::half_sum() const {
  std::vector<double> out(sum_kept.dim());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = 0.5 * (sum_kept[i] + flipped_sum[i]);
  }
  return Vector(std::move(out));
}

SplitSums desymmetrize_split(std::span<const Vector> terms, double threshold,
                             const SpaceSpec& space) {
  std::vector<double> kept(space.dim(), 0.0), flipped(space.dim(), 0.0);
  for (const Vector& t : terms) {
    const double sign = norm(t, space) <= threshold ? 1.0 : -1.0;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      kept[i] += t[i];
      flipped[i] += sign * t[i];
    }
  }
  return {Vector(std::move(kept)), Vector(std::move(flipped))};
}

bool has_analytic_centering(const DistributionSpec& d) {
  return analytic_centering(d, 1.0, 1).has_value();
}

CenteringEstimate gamma_n(const DistributionSpec& d, double b_n, std::size_t n,
                          const CenteringMode& mode) {
  const auto dim = d.space().dim();
  if (std::holds_alternative<AnalyticCentering>(mode)) {
    auto v = analytic_centering(d, b_n, n);
    if (!v) {
      throw ConfigError("no analytic truncated mean for " + d.describe() +
                        "; use monte_carlo centering");
    }
    return {std::move(*v), Vector::zero(dim), true};
  }
  const auto& mc = std::get<MonteCarloCentering>(mode);
  if (mc.replications < 2) {
    throw ConfigError("monte_carlo centering needs at least 2 draws");
  }
  Stream s(StreamKey{mc.seed, 0, substreams::kCentering, 0});
  std::vector<double> x(dim);
  std::vector<CompensatedSum> sum(dim), sum_sq(dim);
  for (std::uint64_t r = 0; r < mc.replications; ++r) {
    d.draw(s, x);
    const bool kept = d.space().norm(x) <= b_n;
    for (std::size_t i = 0; i < dim; ++i) {
      const double y = kept ? x[i] : 0.0;
      sum[i].add(y);
      sum_sq[i].add(y * y);
    }
  }
  const auto R = static_cast<double>(mc.replications);
  const double count = static_cast<double>(n);
  std::vector<double> value(dim), se(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double mean = sum[i].value() / R;
    const double var =
        std::max(0.0, (sum_sq[i].value() - R * mean * mean) / (R - 1.0));
    value[i] = count * mean;
    se[i] = count * std::sqrt(var / R);
  }
  return {Vector(std::move(value)), Vector(std::move(se)), false};
}

}  // namespace probineq
