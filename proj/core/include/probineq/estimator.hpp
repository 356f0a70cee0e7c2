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

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "probineq/rng.hpp"
#include "probineq/space.hpp"

namespace probineq {

inline constexpr double kDefaultConfidence = 0.99;
inline constexpr std::size_t kDefaultEnumerationCutoff = 20;

// An estimated (or exactly enumerated) probability with its binomial interval.
struct TailEstimate {
  double p_hat = 0.0;
  std::uint64_t successes = 0;
  std::uint64_t replications = 0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  bool exact = false;

  // Exact probability successes / total; the interval collapses to a point.
  static TailEstimate exact_count(std::uint64_t successes, std::uint64_t total);
  // Monte Carlo estimate with a Clopper-Pearson interval.
  static TailEstimate from_counts(std::uint64_t successes,
                                  std::uint64_t replications, double confidence);

  // Binomial standard error sqrt(p(1-p)/R); 0 for exact estimates.
  double standard_error() const noexcept;
};

struct McOptions {
  std::uint64_t replications = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  double confidence = kDefaultConfidence;
};

// Called once per replication with that replication's path key (substream
// kPath, draw counter 0). Adds into `counters`, which are per-worker.
using ReplicationFn =
    std::function<void(const StreamKey& path, std::span<std::uint64_t> counters)>;
// Builds one ReplicationFn per worker, so each worker can own scratch space.
using WorkerFactory = std::function<ReplicationFn()>;

// Runs replications 0..R-1 split into contiguous blocks across worker threads
// and returns the summed counters. The result does not depend on the number
// of threads.
std::vector<std::uint64_t> mc_count(const McOptions& options,
                                    std::size_t num_counters,
                                    const WorkerFactory& factory);

using PathEvent = std::function<bool(const StreamKey& path)>;

TailEstimate mc_tail(const PathEvent& event, const McOptions& options);

struct PairedTail {
  TailEstimate lhs;
  TailEstimate rhs;
  // joint[i][j] counts replications with lhs == bool(i) and rhs == bool(j).
  std::array<std::array<std::uint64_t, 2>, 2> joint{};
};

// Both events are handed the same path key each replication and therefore
// see identical draws.
PairedTail paired_tail(const PathEvent& lhs, const PathEvent& rhs,
                       const McOptions& options);

// Norms ||sum_i eps_i w_i x_i|| for every sign pattern eps in {-1, 1}^n,
// indexed by the bit pattern (bit i set means eps_i = -1). Empty weights mean
// all ones. Throws EnumerationLimitError when n > cutoff.
std::vector<double> rademacher_sum_norms(
    std::span<const Vector> x, std::span<const double> weights,
    const SpaceSpec& space, std::size_t cutoff = kDefaultEnumerationCutoff);

// Number of entries strictly greater than t in an ascending-sorted range.
std::uint64_t count_exceeding(std::span<const double> sorted, double t) noexcept;

// P(||sum_i R_i w_i x_i|| > t) by full enumeration of the 2^n sign patterns.
TailEstimate exact_rademacher_tail(
    std::span<const Vector> x, std::span<const double> weights, double t,
    const SpaceSpec& space, std::size_t cutoff = kDefaultEnumerationCutoff);

}  // namespace probineq
