// Copyright 2026 crosswidth developers
// SPDX-License-Identifier: Apache-2.0
#include "crosswidth/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "crosswidth/special_functions.hpp"

namespace crosswidth {

namespace {

void require_at_least(std::uint64_t n, std::uint64_t min, const char* what) {
  if (n < min) {
    throw DomainError(std::string(what) + " requires n >= " + std::to_string(min) + ", got " +
                      std::to_string(n));
  }
}

}  // namespace

double a_n(std::uint64_t n) {
  require_at_least(n, 1, "a_n");
  const double m = static_cast<double>(n);
  return std::sqrt(lambert_w0(m * m / (2.0 * pi)));
}

double a_n_prime(std::uint64_t n) {
  require_at_least(n, 2, "a_n_prime");
  const double a = a_n(n);
  return a + std::log(2.0) / a;
}

double mu_asymptotic(std::uint64_t n) {
  require_at_least(n, 3, "mu_asymptotic");
  return a_n_prime(n) + euler_gamma / std::sqrt(2.0 * std::log(static_cast<double>(n)));
}

double mean_width_asymptotic(std::uint64_t n) {
  require_at_least(n, 3, "mean_width_asymptotic");
  const double m = static_cast<double>(n);
  const double l = std::log(m);
  return 2.0 * std::sqrt(l / m) -
         (std::log(l) + std::log(pi) - 2.0 * euler_gamma) / (2.0 * std::sqrt(m * l));
}

double adjusted_width_asymptotic(std::uint64_t n) {
  require_at_least(n, 3, "adjusted_width_asymptotic");
  return 2.0 * std::sqrt(2.0 * std::log(static_cast<double>(n)));
}

AsymptoticApproximation asymptotic_approximation(std::uint64_t n) {
  require_at_least(n, 3, "asymptotic_approximation");
  AsymptoticApproximation a;
  a.n = n;
  a.a_n = crosswidth::a_n(n);
  a.a_n_prime = crosswidth::a_n_prime(n);
  a.mu_approx = mu_asymptotic(n);
  a.mean_width_approx = mean_width_asymptotic(n);
  a.adjusted_width_approx = adjusted_width_asymptotic(n);
  return a;
}

double gumbel_pdf(double y) { return std::exp(-y - std::exp(-y)); }

double gumbel_cdf(double y) { return std::exp(-std::exp(-y)); }

GumbelMomentReport gumbel_moment_check(Tolerance tol) {
  constexpr double lower = -10.0;
  constexpr double upper = 50.0;
  GumbelMomentReport r;
  const QuadratureResult mass = integrate_finite(gumbel_pdf, lower, upper, tol);
  const QuadratureResult first =
      integrate_finite([](double y) { return y * gumbel_pdf(y); }, lower, upper, tol);
  const QuadratureResult second =
      integrate_finite([](double y) { return y * y * gumbel_pdf(y); }, lower, upper, tol);
  r.mass = mass.value;
  r.mass_error = mass.error_estimate;
  r.first_moment = first.value;
  r.first_error = first.error_estimate;
  r.second_moment = second.value;
  r.second_error = second.error_estimate;
  return r;
}

double sample_half_normal_max(std::uint64_t n, RandomStream& stream) {
  // P(m_n <= x) = F(x)^n, so F(m_n) = U^(1/n) and 1 - F(m_n) = -expm1(ln U / n).
  const double tail = -std::expm1(std::log(stream.uniform()) / static_cast<double>(n));
  return sqrt2 * erfc_inv(tail);
}

GumbelConvergenceReport gumbel_limit_convergence(std::uint64_t n, std::uint64_t samples,
                                                 std::uint64_t seed, const McOptions& options) {
  require_at_least(n, 10, "gumbel_limit_convergence");
  if (samples < 2) throw DomainError("gumbel_limit_convergence requires at least 2 samples");

  const double scale = std::sqrt(2.0 * std::log(static_cast<double>(n)));
  const double shift = a_n_prime(n);
  std::vector<double> y(samples);
  for_each_chunk(samples, seed, options,
                 [&](std::uint64_t, std::uint64_t first, std::uint64_t count, RandomStream& s) {
                   for (std::uint64_t i = 0; i < count; ++i) {
                     y[first + i] = scale * (sample_half_normal_max(n, s) - shift);
                   }
                 });
  std::sort(y.begin(), y.end());

  GumbelConvergenceReport report;
  report.n = n;
  report.samples = samples;
  report.seed = seed;
  const double total = static_cast<double>(samples);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double g = gumbel_cdf(y[i]);
    const double above = static_cast<double>(i + 1) / total - g;
    const double below = g - static_cast<double>(i) / total;
    report.sup_distance = std::max({report.sup_distance, above, below});
  }
  for (int k = 0; k <= 22; ++k) {
    const double at = -3.0 + 0.5 * k;
    const auto count = std::upper_bound(y.begin(), y.end(), at) - y.begin();
    report.grid.push_back({at, static_cast<double>(count) / total, gumbel_cdf(at)});
  }
  return report;
}

}  // namespace crosswidth
