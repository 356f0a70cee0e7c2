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

#include "probineq/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "probineq/binomial.hpp"
#include "probineq/error.hpp"

namespace probineq {

TailEstimate TailEstimate::exact_count(std::uint64_t successes,
                                       std::uint64_t total) {
  if (total == 0 || successes > total) {
    throw ConfigError("invalid exact count");
  }
  const double p = static_cast<double>(successes) / static_cast<double>(total);
  return {p, successes, total, p, p, true};
}

TailEstimate TailEstimate::from_counts(std::uint64_t successes,
                                       std::uint64_t replications,
                                       double confidence) {
  const Interval ci = clopper_pearson(successes, replications, confidence);
  const double p =
      static_cast<double>(successes) / static_cast<double>(replications);
  return {p, successes, replications, std::min(ci.low, p), std::max(ci.high, p),
          false};
}

double TailEstimate::standard_error() const noexcept {
  if (exact || replications == 0) return 0.0;
  return std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(replications));
}

std::vector<std::uint64_t> mc_count(const McOptions& options,
                                    std::size_t num_counters,
                                    const WorkerFactory& factory) {
  if (options.replications > 0xFFFFFFFFull) {
    throw ConfigError("replication count exceeds 2^32 - 1");
  }
  const std::uint64_t R = options.replications;
  const unsigned workers = static_cast<unsigned>(
      std::clamp<std::uint64_t>(options.threads, 1, std::max<std::uint64_t>(R, 1)));

  std::vector<std::vector<std::uint64_t>> partial(
      workers, std::vector<std::uint64_t>(num_counters, 0));
  const auto run_block = [&](unsigned w) {
    const std::uint64_t begin = R * w / workers;
    const std::uint64_t end = R * (w + 1) / workers;
    ReplicationFn fn = factory();
    for (std::uint64_t r = begin; r < end; ++r) {
      fn(StreamKey{options.seed, static_cast<std::uint32_t>(r), substreams::kPath, 0},
         partial[w]);
    }
  };

  if (workers == 1) {
    run_block(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_block, w);
  }

  std::vector<std::uint64_t> total(num_counters, 0);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < num_counters; ++i) total[i] += p[i];
  }
  return total;
}

TailEstimate mc_tail(const PathEvent& event, const McOptions& options) {
  if (options.replications < 100) {
    throw ConfigError("Monte Carlo tail estimation needs R >= 100");
  }
  const auto counts = mc_count(options, 1, [&] {
    return [&](const StreamKey& key, std::span<std::uint64_t> c) {
      if (event(key)) ++c[0];
    };
  });
  return TailEstimate::from_counts(counts[0], options.replications,
                                   options.confidence);
}

PairedTail paired_tail(const PathEvent& lhs, const PathEvent& rhs,
                       const McOptions& options) {
  if (options.replications < 100) {
    throw ConfigError("Monte Carlo tail estimation needs R >= 100");
  }
  const auto counts = mc_count(options, 4, [&] {
    return [&](const StreamKey& key, std::span<std::uint64_t> c) {
      const int l = lhs(key) ? 1 : 0;
      const int r = rhs(key) ? 1 : 0;
      ++c[2 * l + r];
    };
  });
  PairedTail out;
  out.joint = {{{counts[0], counts[1]}, {counts[2], counts[3]}}};
  const std::uint64_t R = options.replications;
  out.lhs = TailEstimate::from_counts(counts[2] + counts[3], R, options.confidence);
  out.rhs = TailEstimate::from_counts(counts[1] + counts[3], R, options.confidence);
  return out;
}

std::vector<double> rademacher_sum_norms(std::span<const Vector> x,
                                         std::span<const double> weights,
                                         const SpaceSpec& space,
                                         std::size_t cutoff) {
  const std::size_t n = x.size();
  if (n > cutoff || n >= 63) {
    throw EnumerationLimitError("sign enumeration refused for n = " +
                                std::to_string(n) + " > cutoff " +
                                std::to_string(cutoff) + "; use Monte Carlo");
  }
  if (!weights.empty() && weights.size() != n) {
    throw ConfigError("weights and vectors differ in length");
  }
  const std::size_t dim = space.dim();
  // Row-major weighted terms w_i x_i.
  std::vector<double> terms(n * dim);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].dim() != dim) throw ConfigError("vector dimension mismatch");
    const double w = weights.empty() ? 1.0 : weights[i];
    for (std::size_t k = 0; k < dim; ++k) terms[i * dim + k] = w * x[i][k];
  }
  const std::uint64_t patterns = std::uint64_t{1} << n;
  std::vector<double> norms(patterns);
  std::vector<double> acc(dim);
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    std::fill(acc.begin(), acc.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double sign = ((mask >> i) & 1u) ? -1.0 : 1.0;
      for (std::size_t k = 0; k < dim; ++k) acc[k] += sign * terms[i * dim + k];
    }
    norms[mask] = space.norm(acc);
  }
  return norms;
}

std::uint64_t count_exceeding(std::span<const double> sorted, double t) noexcept {
  return static_cast<std::uint64_t>(
      sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), t));
}

TailEstimate exact_rademacher_tail(std::span<const Vector> x,
                                   std::span<const double> weights, double t,
                                   const SpaceSpec& space, std::size_t cutoff) {
  const auto norms = rademacher_sum_norms(x, weights, space, cutoff);
  std::uint64_t hits = 0;
  for (double r : norms) hits += r > t ? 1 : 0;
  return TailEstimate::exact_count(hits, norms.size());
}

}  // namespace probineq
