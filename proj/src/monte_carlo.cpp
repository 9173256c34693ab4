// Copyright 2026 crosswidth developers
// SPDX-License-Identifier: Apache-2.0
#include "crosswidth/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "crosswidth/order_statistics.hpp"
#include "crosswidth/special_functions.hpp"

namespace crosswidth {

unsigned resolve_threads(const McOptions& options) {
  if (options.threads > 0) return options.threads;
  if (const char* env = std::getenv("CROSSWIDTH_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min(v, 1024UL));
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void RunningMoments::merge(const RunningMoments& other) noexcept {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(count_);
  const double nb = static_cast<double>(other.count_);
  const double n = na + nb;
  const double delta = other.mean_ - mean_;
  mean_ += delta * nb / n;
  m2_ += other.m2_ + delta * delta * na * nb / n;
  count_ += other.count_;
}

double RunningMoments::variance() const noexcept {
  return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
}

McEstimate RunningMoments::estimate(std::uint64_t seed) const {
  McEstimate e;
  e.mean = mean_;
  e.samples = count_;
  e.seed = seed;
  e.std_error = count_ > 0 ? std::sqrt(variance() / static_cast<double>(count_)) : 0.0;
  return e;
}

void for_each_chunk(
    std::uint64_t samples, std::uint64_t seed, const McOptions& options,
    const std::function<void(std::uint64_t, std::uint64_t, std::uint64_t, RandomStream&)>& body) {
  if (options.chunk_size == 0) throw DomainError("chunk_size must be >= 1");
  const std::uint64_t chunks = (samples + options.chunk_size - 1) / options.chunk_size;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(options), std::max<std::uint64_t>(chunks, 1)));

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&]() {
    try {
      for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
        const std::uint64_t first = c * options.chunk_size;
        const std::uint64_t count = std::min(options.chunk_size, samples - first);
        RandomStream stream(seed, c);
        body(c, first, count, stream);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(chunks);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

namespace {

void validate(unsigned n, std::uint64_t samples, unsigned min_n) {
  if (n < min_n) throw DomainError("Monte Carlo requires n >= " + std::to_string(min_n));
  if (samples < 2) throw DomainError("Monte Carlo requires at least 2 samples");
}

// Runs `draw` once per sample and accumulates x and x^2 per chunk, then
// reduces in chunk order.
template <typename Draw>
MomentPair accumulate(unsigned n, std::uint64_t samples, std::uint64_t seed,
                      const McOptions& options, Draw draw) {
  const std::uint64_t chunks = (samples + options.chunk_size - 1) / options.chunk_size;
  std::vector<RunningMoments> firsts(chunks);
  std::vector<RunningMoments> seconds(chunks);
  for_each_chunk(samples, seed, options,
                 [&](std::uint64_t c, std::uint64_t, std::uint64_t count, RandomStream& stream) {
                   std::vector<double> scratch(n);
                   RunningMoments a, b;
                   for (std::uint64_t i = 0; i < count; ++i) {
                     const double x = draw(stream, scratch);
                     a.add(x);
                     b.add(x * x);
                   }
                   firsts[c] = a;
                   seconds[c] = b;
                 });
  RunningMoments first, second;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    first.merge(firsts[c]);
    second.merge(seconds[c]);
  }
  return {first.estimate(seed), second.estimate(seed)};
}

}  // namespace

MomentPair mc_mean_width(unsigned n, std::uint64_t samples, std::uint64_t seed,
                         const McOptions& options) {
  validate(n, samples, 1);
  return accumulate(n, samples, seed, options, [](RandomStream& s, std::vector<double>& g) {
    double norm2 = 0.0;
    double peak = 0.0;
    for (double& x : g) {
      x = s.normal();
      norm2 += x * x;
      peak = std::max(peak, std::abs(x));
    }
    return sqrt2 * peak / std::sqrt(norm2);
  });
}

MomentPair mc_half_normal_max(unsigned n, std::uint64_t samples, std::uint64_t seed,
                              const McOptions& options) {
  validate(n, samples, 1);
  return accumulate(n, samples, seed, options, [](RandomStream& s, std::vector<double>& g) {
    double peak = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) peak = std::max(peak, std::abs(s.normal()));
    return peak;
  });
}

ConjectureReport verify_conjecture(unsigned n, std::uint64_t samples, std::uint64_t seed,
                                   const McOptions& options, Tolerance tol) {
  validate(n, samples, 2);
  ConjectureReport report;
  report.n = n;
  report.reference = 2.0 / static_cast<double>(n) * nu_quadrature(n, tol).value;
  report.estimate = mc_mean_width(n, samples, seed, options).second;
  report.z_score = (report.estimate.mean - report.reference) / report.estimate.std_error;
  report.beyond_confirmed_range = n > 6;
  return report;
}

}  // namespace crosswidth
