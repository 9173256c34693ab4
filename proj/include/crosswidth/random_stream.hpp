// Copyright 2026 crosswidth developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

namespace crosswidth {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers:
/// as easy as 1, 2, 3"). Maps a 128-bit counter and 64-bit key to 128 bits.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

/// Counter-based random stream. The pair (seed, stream_index) fixes the
/// whole sequence: the seed is the Philox key, the stream index fills the
/// upper half of the counter and the draw position the lower half.
///
/// Normals come from Box-Muller on pairs of uniforms; the second variate of
/// each pair is cached.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_index);

  /// Uniform on the open interval (0, 1) with 53 random bits.
  double uniform();
  /// Standard normal.
  double normal();
  /// Raw 64-bit output.
  std::uint64_t next_u64();

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_index() const noexcept { return stream_index_; }

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_index_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int buffered_words_ = 0;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace crosswidth
