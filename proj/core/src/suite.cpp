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

#include "probineq/suite.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "probineq/binomial.hpp"
#include "probineq/error.hpp"
#include "probineq/transforms.hpp"

namespace probineq {

namespace {

constexpr double kDefaultStatisticGridUpper = 2.5;

std::vector<double> resolve_grid(std::span<const double> grid, double upper) {
  if (grid.empty()) return linear_grid(upper);
  for (double t : grid) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
      throw ConfigError("t grid values must be finite and >= 0");
    }
  }
  return {grid.begin(), grid.end()};
}

double total_norm(std::span<const Vector> x, const SpaceSpec& space) {
  double s = 0.0;
  for (const Vector& v : x) s += norm(v, space);
  return s;
}

// Exact comparison of the sign-enumerated sums of two weighted families.
std::vector<InequalityReport> exact_pair(const std::string& name,
                                         const std::string& config,
                                         std::span<const double> t_grid,
                                         std::span<const Vector> lhs_x,
                                         std::span<const double> lhs_w,
                                         double lhs_scale,
                                         std::span<const Vector> rhs_x,
                                         double rhs_scale, const SpaceSpec& space) {
  auto lhs_norms = rademacher_sum_norms(lhs_x, lhs_w, space);
  auto rhs_norms = rademacher_sum_norms(rhs_x, {}, space);
  std::sort(lhs_norms.begin(), lhs_norms.end());
  std::sort(rhs_norms.begin(), rhs_norms.end());
  const std::uint64_t total = lhs_norms.size();

  std::vector<InequalityReport> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    InequalityReport r;
    r.name = name;
    r.config = config;
    r.t = t;
    r.lhs = TailEstimate::exact_count(count_exceeding(lhs_norms, t * lhs_scale), total);
    r.rhs = TailEstimate::exact_count(count_exceeding(rhs_norms, t * rhs_scale), total);
    r.multiplier = 2.0;
    finalize(r);
    out.push_back(std::move(r));
  }
  return out;
}

// Monte Carlo over Rademacher signs: per replication, signs from kSigns.
std::vector<InequalityReport> sampled_pair(const std::string& name,
                                           const std::string& config,
                                           std::span<const double> t_grid,
                                           std::span<const Vector> lhs_x,
                                           std::span<const double> lhs_w,
                                           double lhs_scale,
                                           std::span<const Vector> rhs_x,
                                           double rhs_scale, const SpaceSpec& space,
                                           const McOptions& options) {
  if (options.replications < 100) {
    throw ConfigError("Monte Carlo mode needs R >= 100");
  }
  const std::size_t n = lhs_x.size();
  const std::size_t dim = space.dim();
  const std::size_t T = t_grid.size();
  const auto counts = mc_count(options, 2 * T, [&] {
    return [&, lsum = std::vector<double>(dim), rsum = std::vector<double>(dim)](
               const StreamKey& key, std::span<std::uint64_t> c) mutable {
      Stream signs(StreamKey{key.master_seed, key.replication_index,
                             substreams::kSigns, 0});
      std::fill(lsum.begin(), lsum.end(), 0.0);
      std::fill(rsum.begin(), rsum.end(), 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        const double eps = signs.sign();
        const double w = lhs_w.empty() ? 1.0 : lhs_w[i];
        for (std::size_t k = 0; k < dim; ++k) {
          lsum[k] += eps * w * lhs_x[i][k];
          rsum[k] += eps * rhs_x[i][k];
        }
      }
      const double ln = space.norm(lsum);
      const double rn = space.norm(rsum);
      for (std::size_t j = 0; j < T; ++j) {
        if (ln > t_grid[j] * lhs_scale) ++c[2 * j];
        if (rn > t_grid[j] * rhs_scale) ++c[2 * j + 1];
      }
    };
  });
  std::vector<InequalityReport> out;
  for (std::size_t j = 0; j < T; ++j) {
    InequalityReport r;
    r.name = name;
    r.config = config;
    r.t = t_grid[j];
    r.lhs = TailEstimate::from_counts(counts[2 * j], options.replications,
                                      options.confidence);
    r.rhs = TailEstimate::from_counts(counts[2 * j + 1], options.replications,
                                      options.confidence);
    r.multiplier = 2.0;
    finalize(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kViolated: return "violated";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

void finalize(InequalityReport& r) {
  r.rhs_bound = r.multiplier * r.rhs.p_hat + r.tail_term;
  r.rhs_bound_ci_high = r.multiplier * r.rhs.ci_high + r.tail_term_ci_high;
  r.slack = r.rhs_bound - r.lhs.p_hat;

  const double se_bound = r.multiplier * r.rhs.standard_error();
  const double se_lhs = r.lhs.standard_error();
  const double se = std::sqrt(se_bound * se_bound + se_lhs * se_lhs);
  r.sigma_margin = se > 0.0 ? r.slack / se : 0.0;

  if (r.lhs.exact && r.rhs.exact && r.tail_term_ci_high == r.tail_term) {
    r.verdict = r.lhs.p_hat <= r.rhs_bound ? Verdict::kHolds : Verdict::kViolated;
    return;
  }
  if (r.lhs.ci_low > r.rhs_bound_ci_high) {
    r.verdict = Verdict::kViolated;
  } else if (r.lhs.ci_high <= r.rhs_bound) {
    r.verdict = Verdict::kHolds;
  } else {
    r.verdict = Verdict::kInconclusive;
  }
}

std::vector<double> linear_grid(double upper, std::size_t points) {
  if (points < 2) return {0.0};
  std::vector<double> out(points);
  for (std::size_t i = 0; i < points; ++i) {
    out[i] = upper * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return out;
}

std::vector<InequalityReport> check_thm11_i(std::span<const Vector> x,
                                            const FunctionPair& f,
                                            const SpaceSpec& space,
                                            std::span<const double> t_grid,
                                            const EvaluationMode& mode) {
  const std::size_t n = x.size();
  if (n == 0) throw ConfigError("thm11_i: need at least one vector");
  const TransformContext ctx(f, space, n);
  std::vector<Vector> rescaled;
  rescaled.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (norm(x[i], space) > ctx.b_n()) {
      throw ConfigError("thm11_i hypothesis violated: ||x_" + std::to_string(i + 1) +
                        "|| exceeds b_n = " + std::to_string(ctx.b_n()));
    }
    rescaled.push_back(rescale(x[i], ctx));
  }
  const auto grid = resolve_grid(t_grid, 1.2 * total_norm(x, space) / ctx.b_n());

  std::ostringstream cfg;
  cfg << "n=" << n << " space=" << space.describe() << " a_n=" << ctx.a_n()
      << " b_n=" << ctx.b_n();
  if (std::holds_alternative<ExactMode>(mode)) {
    return exact_pair("thm11_i", cfg.str(), grid, x, {}, ctx.b_n(), rescaled,
                      ctx.a_n(), space);
  }
  return sampled_pair("thm11_i", cfg.str(), grid, x, {}, ctx.b_n(), rescaled,
                      ctx.a_n(), space, std::get<MonteCarloMode>(mode).options);
}

std::vector<InequalityReport> check_contraction(std::span<const Vector> x,
                                                std::span<const double> alpha,
                                                const SpaceSpec& space,
                                                std::span<const double> t_grid,
                                                const EvaluationMode& mode) {
  if (x.empty()) throw ConfigError("contraction: need at least one vector");
  if (alpha.size() != x.size()) {
    throw ConfigError("contraction: alpha and x differ in length");
  }
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (!(std::abs(alpha[i]) <= 1.0)) {
      throw ConfigError("contraction hypothesis violated: |alpha_" +
                        std::to_string(i + 1) + "| > 1");
    }
  }
  for (const Vector& v : x) {
    if (v.dim() != space.dim()) throw ConfigError("vector dimension mismatch");
  }
  const auto grid = resolve_grid(t_grid, 1.2 * total_norm(x, space));
  std::ostringstream cfg;
  cfg << "n=" << x.size() << " space=" << space.describe();
  if (std::holds_alternative<ExactMode>(mode)) {
    return exact_pair("contraction", cfg.str(), grid, x, alpha, 1.0, x, 1.0, space);
  }
  return sampled_pair("contraction", cfg.str(), grid, x, alpha, 1.0, x, 1.0, space,
                      std::get<MonteCarloMode>(mode).options);
}

std::vector<InequalityReport> check_thm11_ii(const DistributionSpec& d,
                                             const FunctionPair& f, std::size_t n,
                                             std::span<const double> t_grid,
                                             const McOptions& options) {
  if (!d.is_symmetric()) {
    throw ConfigError("thm11_ii hypothesis violated: " + d.describe() +
                      " is not symmetric");
  }
  if (options.replications < 100) {
    throw ConfigError("thm11_ii needs R >= 100");
  }
  const TransformContext ctx(f, d.space(), n, Extension::kLinear);
  const auto grid = resolve_grid(t_grid, kDefaultStatisticGridUpper);
  const std::size_t T = grid.size();
  const std::size_t dim = d.space().dim();
  const SpaceSpec& space = d.space();
  const double a_n = ctx.a_n();
  const double b_n = ctx.b_n();

  // Counters: [lhs_j, rhs_j] for each t, then the exceedance count.
  const auto counts = mc_count(options, 2 * T + 1, [&] {
    return [&, v = std::vector<double>(dim), vsum = std::vector<double>(dim),
            tsum = std::vector<double>(dim)](const StreamKey& key,
                                             std::span<std::uint64_t> c) mutable {
      Stream path(key);
      std::fill(vsum.begin(), vsum.end(), 0.0);
      std::fill(tsum.begin(), tsum.end(), 0.0);
      std::uint64_t exceed = 0;
      for (std::size_t i = 0; i < n; ++i) {
        d.draw(path, v);
        const double r = space.norm(v);
        if (r > b_n) ++exceed;
        for (std::size_t k = 0; k < dim; ++k) vsum[k] += v[k];
        if (r > 0.0) {
          const double factor = ctx.rescaled_norm(r) / r;
          for (std::size_t k = 0; k < dim; ++k) tsum[k] += factor * v[k];
        }
      }
      const double lhs = space.norm(vsum);
      const double rhs = space.norm(tsum);
      for (std::size_t j = 0; j < T; ++j) {
        if (lhs > grid[j] * b_n) ++c[2 * j];
        if (rhs > grid[j] * a_n) ++c[2 * j + 1];
      }
      c[2 * T] += exceed;
    };
  });

  const double count = static_cast<double>(n);
  double tail = 0.0;
  double tail_high = 0.0;
  if (auto p = d.analytic_tail(b_n)) {
    tail = tail_high = count * *p;
  } else {
    const std::uint64_t draws = options.replications * n;
    const auto est = TailEstimate::from_counts(counts[2 * T], draws, options.confidence);
    tail = count * est.p_hat;
    tail_high = count * est.ci_high;
  }

  std::ostringstream cfg;
  cfg << "n=" << n << " law=" << d.describe() << " a_n=" << a_n << " b_n=" << b_n
      << " R=" << options.replications;
  std::vector<InequalityReport> out;
  out.reserve(T);
  for (std::size_t j = 0; j < T; ++j) {
    InequalityReport r;
    r.name = "thm11_ii";
    r.config = cfg.str();
    r.t = grid[j];
    r.lhs = TailEstimate::from_counts(counts[2 * j], options.replications,
                                      options.confidence);
    r.rhs = TailEstimate::from_counts(counts[2 * j + 1], options.replications,
                                      options.confidence);
    r.multiplier = 4.0;
    r.tail_term = tail;
    r.tail_term_ci_high = tail_high;
    finalize(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<InequalityReport> check_levy(const DistributionSpec& d, std::size_t n,
                                         double b_n, std::span<const double> t_grid,
                                         const McOptions& options) {
  if (n == 0) throw ConfigError("levy: n must be >= 1");
  if (!(b_n > 0.0)) throw ConfigError("levy: b_n must be > 0");
  if (options.replications < 100) throw ConfigError("levy needs R >= 100");
  const auto grid = resolve_grid(t_grid, kDefaultStatisticGridUpper);
  const std::size_t T = grid.size();
  const std::size_t dim = d.space().dim();
  const SpaceSpec& space = d.space();

  const auto counts = mc_count(options, 2 * T, [&] {
    return [&, x = std::vector<double>(dim), y = std::vector<double>(dim),
            dsum = std::vector<double>(dim)](const StreamKey& key,
                                             std::span<std::uint64_t> c) mutable {
      PairedSampler pairs(d, key);
      std::fill(dsum.begin(), dsum.end(), 0.0);
      double max_term = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        pairs.next(x, y);
        for (std::size_t k = 0; k < dim; ++k) {
          x[k] -= y[k];
          dsum[k] += x[k];
        }
        max_term = std::max(max_term, space.norm(x));
      }
      const double total = space.norm(dsum);
      for (std::size_t j = 0; j < T; ++j) {
        if (max_term > grid[j] * b_n) ++c[2 * j];
        if (total > grid[j] * b_n) ++c[2 * j + 1];
      }
    };
  });

  std::ostringstream cfg;
  cfg << "n=" << n << " law=" << d.describe() << " b_n=" << b_n
      << " R=" << options.replications;
  std::vector<InequalityReport> out;
  for (std::size_t j = 0; j < T; ++j) {
    InequalityReport r;
    r.name = "levy";
    r.config = cfg.str();
    r.t = grid[j];
    r.lhs = TailEstimate::from_counts(counts[2 * j], options.replications,
                                      options.confidence);
    r.rhs = TailEstimate::from_counts(counts[2 * j + 1], options.replications,
                                      options.confidence);
    r.multiplier = 2.0;
    finalize(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<InequalityReport> check_levy_exact_rademacher(
    std::size_t n, double b_n, std::span<const double> t_grid) {
  if (n == 0 || n > 10) throw EnumerationLimitError("exact levy supports 1 <= n <= 10");
  const auto grid = resolve_grid(t_grid, kDefaultStatisticGridUpper);
  const std::uint64_t patterns = std::uint64_t{1} << (2 * n);
  std::vector<double> max_terms(patterns), totals(patterns);
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    double total = 0.0;
    double max_term = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = ((mask >> i) & 1u) ? -1.0 : 1.0;
      const double y = ((mask >> (n + i)) & 1u) ? -1.0 : 1.0;
      total += x - y;
      max_term = std::max(max_term, std::abs(x - y));
    }
    max_terms[mask] = max_term;
    totals[mask] = std::abs(total);
  }
  std::sort(max_terms.begin(), max_terms.end());
  std::sort(totals.begin(), totals.end());

  std::ostringstream cfg;
  cfg << "n=" << n << " law=rademacher b_n=" << b_n << " exact";
  std::vector<InequalityReport> out;
  for (double t : grid) {
    InequalityReport r;
    r.name = "levy";
    r.config = cfg.str();
    r.t = t;
    r.lhs = TailEstimate::exact_count(count_exceeding(max_terms, t * b_n), patterns);
    r.rhs = TailEstimate::exact_count(count_exceeding(totals, t * b_n), patterns);
    r.multiplier = 2.0;
    finalize(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace probineq
