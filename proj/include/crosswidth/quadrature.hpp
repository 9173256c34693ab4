// Copyright 2026 crosswidth developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>

#include "crosswidth/error.hpp"

namespace crosswidth {

/// Stopping rule for the adaptive integrators: the accumulated error
/// estimate must fall below max(absolute, relative * |value|).
struct Tolerance {
  double absolute = 1e-12;
  double relative = 1e-12;

  /// Throws DomainError unless both components are finite and positive.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute, >= 0
  std::size_t evaluations = 0;
  std::size_t subdivisions = 0;
};

/// Raised when the evaluation budget runs out before the tolerance is met.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, QuadratureResult best)
      : Error(what), best_(best) {}
  const QuadratureResult& best_estimate() const noexcept { return best_; }

 private:
  QuadratureResult best_;
};

struct Interval {
  double lower;
  double upper;
};

/// Integrand evaluations allowed for one call before giving up.
inline constexpr std::size_t evaluation_budget = 1'000'000;

using Integrand = std::function<double(double)>;
using Integrand2D = std::function<double(double, double)>;

/// Globally adaptive 15-point Gauss-Kronrod integration on [a, b].
///
/// The integrand is only evaluated at interior nodes, so integrable endpoint
/// limits (e.g. 0/0 forms) need no special handling. The error estimate is
/// the usual QUADPACK heuristic, which is deliberately pessimistic.
QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  Tolerance tol = {});

/// Integral over [0, inf) of an integrand with at least exponential decay,
/// computed through the substitution x = t / (1 - t) on [0, 1).
QuadratureResult integrate_semi_infinite(const Integrand& f, Tolerance tol = {});

/// Iterated integral over x_range × y_range: adaptive in x over adaptive
/// inner integrals in y. The error estimate adds the outer estimate to the
/// worst inner estimate scaled by the x-extent.
QuadratureResult integrate_rect(const Integrand2D& f, Interval x_range,
                                Interval y_range, Tolerance tol = {});

}  // namespace crosswidth
