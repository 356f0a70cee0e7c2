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
#include <cstdint>

namespace probineq {

// Philox4x32-10 block function (Salmon, Moraes, Dror, Shaw; SC'11).
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key) noexcept;

// Coordinates of one random substream.
//
// The master seed is the Philox key; the 128-bit counter is
// (draw_counter lo, draw_counter hi, replication_index, substream). Distinct
// (seed, replication, substream) triples therefore never share a block, and
// any draw can be reproduced from its key alone.
struct StreamKey {
  std::uint64_t master_seed = 0;
  std::uint32_t replication_index = 0;
  std::uint32_t substream = 0;
  std::uint64_t draw_counter = 0;
};

// Well-known substream ids used by the experiment drivers.
namespace substreams {
inline constexpr std::uint32_t kPath = 0;
inline constexpr std::uint32_t kCopy = 1;
inline constexpr std::uint32_t kSigns = 2;
inline constexpr std::uint32_t kCentering = 3;
inline constexpr std::uint32_t kConfig = 4;
}  // namespace substreams

// Sequential view over a counter-based substream. Cheap to construct.
class Stream {
 public:
  explicit Stream(const StreamKey& key) noexcept;

  std::uint32_t next_u32() noexcept {
    if (index_ == 4) refill();
    return block_[index_++];
  }

  std::uint64_t next_u64() noexcept {
    const std::uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

  // Uniform on the open interval (0, 1); never returns 0 or 1.
  double uniform() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform on (lo, hi).
  double uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * uniform();
  }

  // +1 or -1 with probability 1/2 each.
  double sign() noexcept { return (next_u32() & 1u) ? 1.0 : -1.0; }

  // Exponential(1).
  double exponential() noexcept;

  // Standard normal via Marsaglia's polar method.
  double normal() noexcept;

  // Counter of the next block to be generated.
  std::uint64_t blocks_consumed() const noexcept { return counter_; }

 private:
  void refill() noexcept;

  PhiloxKey key_;
  std::uint32_t replication_;
  std::uint32_t substream_;
  std::uint64_t counter_;
  PhiloxCounter block_{};
  unsigned index_ = 4;
};

// SplitMix64 finalizer; used to derive child seeds.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace probineq
