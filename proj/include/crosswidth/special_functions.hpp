// Copyright 2026 crosswidth developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <numbers>

namespace crosswidth {

inline constexpr double pi = std::numbers::pi;
inline constexpr double sqrt_pi = 1.772453850905516027298167483341145;
inline constexpr double sqrt2 = std::numbers::sqrt2;
inline constexpr double sqrt3 = std::numbers::sqrt3;

/// Euler-Mascheroni constant (0.57721566490153286060...).
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

double erf(double x);
double erfc(double x);

/// Inverse of erfc on (0, 2). Throws DomainError outside that interval.
double erfc_inv(double q);

/// arccos(1/x) for x >= 1, in [0, pi/2).
double arcsec(double x);

/// Principal branch of Lambert W restricted to x >= 0.
///
/// Halley iteration from ln(1 + x); stops when the step is below a few ulps
/// or after 50 iterations.
double lambert_w0(double x);

/// Density of |Z| for standard normal Z, x >= 0.
double half_normal_pdf(double x);
/// P(|Z| <= x) = erf(x / sqrt 2), x >= 0.
double half_normal_cdf(double x);
/// P(|Z| > x) = erfc(x / sqrt 2), x >= 0. Accurate in the upper tail.
double half_normal_sf(double x);

/// Gamma(n/2) / Gamma((n+1)/2) for n >= 1.
///
/// Uses r(1) = sqrt(pi), r(2) = 2/sqrt(pi) and r(n+2) = r(n) n/(n+1), so no
/// general gamma function is involved. Cost is O(n).
double gamma_half_ratio(unsigned long n);

}  // namespace crosswidth
