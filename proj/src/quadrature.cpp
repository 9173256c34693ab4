// Copyright 2026 crosswidth developers
// SPDX-License-Identifier: Apache-2.0
#include "crosswidth/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace crosswidth {

void Tolerance::validate() const {
  if (!(std::isfinite(absolute) && absolute > 0.0 && std::isfinite(relative) &&
        relative > 0.0)) {
    throw DomainError("tolerance components must be finite and > 0");
  }
}

namespace {

// Kronrod abscissae (descending, centre last) and weights for the 7/15 pair.
// Odd indices of kXgk are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr std::size_t kNodesPerRule = 15;

struct Segment {
  double a;
  double b;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Segment& lhs, const Segment& rhs) const {
    if (lhs.error != rhs.error) return lhs.error < rhs.error;
    return lhs.a > rhs.a;  // deterministic tie-break
  }
};

Segment gauss_kronrod_15(const Integrand& f, double a, double b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double tiny = std::numeric_limits<double>::min();
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(centre);
  double gauss = fc * kWg[3];
  double kronrod = fc * kWgk[7];
  double abs_k = std::abs(kronrod);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(centre - dx);
    f2[j] = f(centre + dx);
    const double sum = f1[j] + f2[j];
    kronrod += kWgk[j] * sum;
    abs_k += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  const double mean = 0.5 * kronrod;
  double asc = kWgk[7] * std::abs(fc - mean);
  for (std::size_t j = 0; j < 7; ++j) {
    asc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }

  const double scale = std::abs(half);
  const double value = kronrod * half;
  abs_k *= scale;
  asc *= scale;
  double err = std::abs((kronrod - gauss) * half);
  if (asc != 0.0 && err != 0.0) {
    err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  }
  // Rounding floor. QUADPACK uses 50 eps; 10 eps still dominates the
  // accumulated rounding of a 15-term sum and lets tolerances near 1e-14 converge.
  if (abs_k > tiny / (10.0 * eps)) err = std::max(10.0 * eps * abs_k, err);
  if (!std::isfinite(value)) err = std::numeric_limits<double>::infinity();
  return {a, b, value, err};
}

QuadratureResult adaptive(const Integrand& f, double a, double b, Tolerance tol,
                          std::size_t initial_segments) {
  tol.validate();
  if (!(std::isfinite(a) && std::isfinite(b))) {
    throw DomainError("integration limits must be finite");
  }
  if (a > b) throw DomainError("integration requires a <= b");
  if (a == b) return {0.0, 0.0, 1, 0};

  std::priority_queue<Segment, std::vector<Segment>, ByError> heap;
  std::size_t evaluations = 0;
  double value = 0.0;
  double error = 0.0;
  const double width = (b - a) / static_cast<double>(initial_segments);
  for (std::size_t i = 0; i < initial_segments; ++i) {
    const double lo = a + width * static_cast<double>(i);
    const double hi = (i + 1 == initial_segments) ? b : a + width * static_cast<double>(i + 1);
    Segment s = gauss_kronrod_15(f, lo, hi);
    evaluations += kNodesPerRule;
    value += s.value;
    error += s.error;
    heap.push(s);
  }
  std::size_t subdivisions = 0;

  // Re-add all segments so the reported value and error do not carry the
  // drift of the running sums.
  auto finalize = [&]() {
    std::vector<Segment> all;
    all.reserve(heap.size());
    auto copy = heap;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(), [](const Segment& l, const Segment& r) { return l.a < r.a; });
    double v = 0.0, c = 0.0, e = 0.0;
    for (const Segment& s : all) {
      const double y = s.value - c;
      const double t = v + y;
      c = (t - v) - y;
      v = t;
      e += s.error;
    }
    return QuadratureResult{v, e, evaluations, subdivisions};
  };

  auto converged = [&]() {
    return error <= std::max(tol.absolute, tol.relative * std::abs(value));
  };

  while (!converged()) {
    if (!std::isfinite(value)) {
      throw QuadratureError("integrand produced a non-finite value", finalize());
    }
    if (evaluations + 2 * kNodesPerRule > evaluation_budget) {
      QuadratureResult best = finalize();
      throw QuadratureError("quadrature did not converge within " +
                                std::to_string(evaluation_budget) +
                                " evaluations (error estimate " +
                                std::to_string(best.error_estimate) + ")",
                            best);
    }
    Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      QuadratureResult best = finalize();
      throw QuadratureError("quadrature segment cannot be bisected further", best);
    }
    heap.pop();
    Segment left = gauss_kronrod_15(f, worst.a, mid);
    Segment right = gauss_kronrod_15(f, mid, worst.b);
    evaluations += 2 * kNodesPerRule;
    ++subdivisions;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    // Running error can dip below the true sum of positives through cancellation.
    if (converged()) {
      QuadratureResult r = finalize();
      value = r.value;
      error = r.error_estimate;
    }
  }
  return finalize();
}

}  // namespace

QuadratureResult integrate_finite(const Integrand& f, double a, double b, Tolerance tol) {
  return adaptive(f, a, b, tol, 1);
}

QuadratureResult integrate_semi_infinite(const Integrand& f, Tolerance tol) {
  auto mapped = [&f](double t) {
    const double s = 1.0 - t;
    const double fx = f(t / s);
    if (fx == 0.0) return 0.0;
    return fx / (s * s);
  };
  // Gaussian-scale features of the original integrand occupy a small part of
  // [0, 1); a uniform initial partition keeps them from being skipped.
  return adaptive(mapped, 0.0, 1.0, tol, 16);
}

QuadratureResult integrate_rect(const Integrand2D& f, Interval x_range, Interval y_range,
                                Tolerance tol) {
  tol.validate();
  const double x_extent = x_range.upper - x_range.lower;
  const Tolerance inner_tol{tol.absolute / (10.0 * std::max(x_extent, 1.0)),
                            tol.relative / 10.0};
  std::size_t inner_evaluations = 0;
  double worst_inner_error = 0.0;
  auto outer = [&](double x) {
    const QuadratureResult inner = integrate_finite(
        [&f, x](double y) { return f(x, y); }, y_range.lower, y_range.upper, inner_tol);
    inner_evaluations += inner.evaluations;
    worst_inner_error = std::max(worst_inner_error, inner.error_estimate);
    return inner.value;
  };
  QuadratureResult r = integrate_finite(outer, x_range.lower, x_range.upper, tol);
  r.error_estimate += std::abs(x_extent) * worst_inner_error;
  r.evaluations = inner_evaluations;
  return r;
}

}  // namespace crosswidth
