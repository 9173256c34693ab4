// Copyright 2026 crosswidth developers
// SPDX-License-Identifier: Apache-2.0
#include "crosswidth/special_functions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "crosswidth/error.hpp"

namespace crosswidth {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(what) + ": argument must be finite");
  }
}

void require_nonnegative(double x, const char* what) {
  require_finite(x, what);
  if (x < 0.0) {
    throw DomainError(std::string(what) + ": argument must be >= 0, got " +
                      std::to_string(x));
  }
}

}  // namespace

double erf(double x) {
  require_finite(x, "erf");
  return std::erf(x);
}

double erfc(double x) {
  require_finite(x, "erfc");
  return std::erfc(x);
}

double erfc_inv(double q) {
  if (!(q > 0.0 && q < 2.0)) {
    throw DomainError("erfc_inv: argument must lie in (0, 2)");
  }
  if (q > 1.0) return -erfc_inv(2.0 - q);
  if (q == 1.0) return 0.0;

  // Starting point from the leading tail asymptotic erfc(x) ~ exp(-x^2)/(x sqrt pi).
  double x;
  if (q < 0.1) {
    const double t = -std::log(q * sqrt_pi);
    x = std::sqrt(t - 0.5 * std::log(t));
  } else {
    x = 0.5 * sqrt_pi * (1.0 - q);
  }
  // Newton on log erfc, which stays well conditioned deep in the tail.
  const double target = std::log(q);
  for (int iter = 0; iter < 60; ++iter) {
    const double c = std::erfc(x);
    const double g = std::log(c) - target;
    const double slope = -2.0 / sqrt_pi * std::exp(-x * x) / c;
    const double step = g / slope;
    x -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) break;
  }
  return x;
}

double arcsec(double x) {
  require_finite(x, "arcsec");
  if (x < 1.0) {
    throw DomainError("arcsec: argument must be >= 1, got " + std::to_string(x));
  }
  return std::acos(1.0 / x);
}

double lambert_w0(double x) {
  require_nonnegative(x, "lambert_w0");
  if (x == 0.0) return 0.0;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double w = std::log1p(x);
  for (int iter = 0; iter < 50; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= 2.0 * eps * std::abs(w)) break;
  }
  return w;
}

double half_normal_pdf(double x) {
  require_nonnegative(x, "half_normal_pdf");
  return std::sqrt(2.0 / pi) * std::exp(-0.5 * x * x);
}

double half_normal_cdf(double x) {
  require_nonnegative(x, "half_normal_cdf");
  return std::erf(x / sqrt2);
}

double half_normal_sf(double x) {
  require_nonnegative(x, "half_normal_sf");
  return std::erfc(x / sqrt2);
}

double gamma_half_ratio(unsigned long n) {
  if (n == 0) throw DomainError("gamma_half_ratio: n must be >= 1");
  double r = (n % 2 == 1) ? sqrt_pi : 2.0 / sqrt_pi;
  for (unsigned long m = (n % 2 == 1) ? 1 : 2; m < n; m += 2) {
    r *= static_cast<double>(m) / static_cast<double>(m + 1);
  }
  return r;
}

}  // namespace crosswidth
