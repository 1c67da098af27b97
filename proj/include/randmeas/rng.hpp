// Copyright 2026 The randmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>

namespace randmeas {

// Philox4x32-10 block function (Salmon et al., "Parallel random numbers: as
// easy as 1, 2, 3"). Maps a 128-bit counter and 64-bit key to 128 bits.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

// Counter-based random stream. The key is the seed; the stream id occupies
// the upper half of the Philox counter and the draw position the lower half,
// so (seed, stream_id) fully determines the sequence and distinct stream ids
// never overlap.
//
// Satisfies UniformRandomBitGenerator. Not thread-safe: give every worker its
// own stream (see split()).
class RngStream {
 public:
  using result_type = std::uint32_t;

  RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  // Independent child stream derived deterministically from (this stream, index).
  RngStream split(std::uint64_t index) const;

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Standard normal via Box-Muller.
  double normal();

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int buffer_pos_ = 4;
  std::optional<double> spare_normal_;
};

// SplitMix64 finalizer; used to derive stream ids.
std::uint64_t mix64(std::uint64_t x);

}  // namespace randmeas
