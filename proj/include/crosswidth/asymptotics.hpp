// Copyright 2026 crosswidth developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "crosswidth/monte_carlo.hpp"
#include "crosswidth/quadrature.hpp"

namespace crosswidth {

// Large-n behaviour of the half-normal maximum m_n and of E(w_n).
// Expansions are returned exactly as the displayed leading terms; they are
// statements about n -> inf and carry no finite-n error bound.

/// Positive root of 2 pi a^2 exp(a^2) = n^2, i.e. sqrt(W(n^2 / 2pi)). n >= 1.
double a_n(std::uint64_t n);

/// Folding correction a_n + ln 2 / a_n. n >= 2.
double a_n_prime(std::uint64_t n);

/// a_n' + gamma / sqrt(2 ln n). n >= 3.
double mu_asymptotic(std::uint64_t n);

/// 2 sqrt(ln n / n) - (ln ln n + ln pi - 2 gamma) / (2 sqrt(n ln n)). n >= 3.
///
/// Obtained from Gamma(n/2)/Gamma((n+1)/2) ~ sqrt(2/n) (1 + 1/(4n)) times
/// mu_asymptotic(n).
double mean_width_asymptotic(std::uint64_t n);

/// Leading term of the mean width rescaled to unit inradius (inradius of the
/// unit-edge cross-polytope is 1/sqrt(2n)): 2 sqrt(2 ln n). n >= 3.
double adjusted_width_asymptotic(std::uint64_t n);

struct AsymptoticApproximation {
  std::uint64_t n = 0;
  double a_n = 0.0;
  double a_n_prime = 0.0;
  double mu_approx = 0.0;
  double mean_width_approx = 0.0;
  double adjusted_width_approx = 0.0;
};

/// All of the above for one n >= 3.
AsymptoticApproximation asymptotic_approximation(std::uint64_t n);

/// Standard Gumbel density exp(-y - e^(-y)).
double gumbel_pdf(double y);
double gumbel_cdf(double y);

/// Quadrature of the Gumbel density over [-10, 50].
struct GumbelMomentReport {
  double mass = 0.0;
  double first_moment = 0.0;   // expected: gamma
  double second_moment = 0.0;  // expected: pi^2/6 + gamma^2
  double mass_error = 0.0;
  double first_error = 0.0;
  double second_error = 0.0;
};

GumbelMomentReport gumbel_moment_check(Tolerance tol = {});

/// Exact draw of m_n by inversion: m_n = sqrt2 erfc_inv(1 - U^(1/n)).
/// Cost is independent of n.
double sample_half_normal_max(std::uint64_t n, RandomStream& stream);

/// Kolmogorov-Smirnov style comparison of sqrt(2 ln n) (m_n - a_n') with
/// the Gumbel limit.
struct GumbelConvergenceReport {
  std::uint64_t n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double sup_distance = 0.0;
  /// Empirical CDF on a fixed grid y = -3, -2.5, ..., 8: (y, ecdf(y), gumbel_cdf(y)).
  struct Point {
    double y;
    double empirical;
    double limit;
  };
  std::vector<Point> grid;
};

GumbelConvergenceReport gumbel_limit_convergence(std::uint64_t n, std::uint64_t samples,
                                                 std::uint64_t seed,
                                                 const McOptions& options = {});

}  // namespace crosswidth
