// Copyright 2026 crosswidth developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>

#include "crosswidth/quadrature.hpp"
#include "crosswidth/random_stream.hpp"

namespace crosswidth {

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(samples)
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Execution knobs. Results depend on chunk_size but never on threads.
struct McOptions {
  unsigned threads = 0;                // 0: CROSSWIDTH_THREADS, else hardware concurrency
  std::uint64_t chunk_size = 1 << 16;  // samples per random stream
};

inline constexpr std::uint64_t default_seed = 20111202;

/// Worker count after resolving threads == 0.
unsigned resolve_threads(const McOptions& options);

/// One-pass mean/variance (Welford), mergeable with Chan's formula.
class RunningMoments {
 public:
  void add(double x) noexcept {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }
  void merge(const RunningMoments& other) noexcept;

  std::uint64_t count() const noexcept { return count_; }
  double mean() const noexcept { return mean_; }
  double variance() const noexcept;  // unbiased
  McEstimate estimate(std::uint64_t seed) const;

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Splits [0, samples) into chunks of options.chunk_size and calls
/// body(chunk_index, first_sample, count, stream) once per chunk, with
/// stream = RandomStream(seed, chunk_index). Chunks run on worker threads;
/// body must only write state owned by its chunk.
void for_each_chunk(
    std::uint64_t samples, std::uint64_t seed, const McOptions& options,
    const std::function<void(std::uint64_t, std::uint64_t, std::uint64_t, RandomStream&)>& body);

struct MomentPair {
  McEstimate first;   // E(X)
  McEstimate second;  // E(X^2)
};

/// Mean width and mean square width of the unit-edge cross-polytope over
/// directions uniform on S^(n-1) (normalized Gaussian vectors).
MomentPair mc_mean_width(unsigned n, std::uint64_t samples, std::uint64_t seed,
                         const McOptions& options = {});

/// mu_n and nu_n from the maximum of |Z_1|, ..., |Z_n|.
MomentPair mc_half_normal_max(unsigned n, std::uint64_t samples, std::uint64_t seed,
                              const McOptions& options = {});

/// Compares (2/n) nu_n (quadrature) with the Monte Carlo mean square width.
struct ConjectureReport {
  unsigned n = 0;
  double reference = 0.0;
  McEstimate estimate;
  double z_score = 0.0;
  bool beyond_confirmed_range = false;  // n > 6
};

ConjectureReport verify_conjecture(unsigned n, std::uint64_t samples, std::uint64_t seed,
                                   const McOptions& options = {}, Tolerance tol = {});

}  // namespace crosswidth
