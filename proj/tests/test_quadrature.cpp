// Copyright 2026 crosswidth developers
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "crosswidth/quadrature.hpp"
#include "crosswidth/special_functions.hpp"

using namespace crosswidth;

namespace {

double sec2(double x) { return 1.0 / (std::cos(x) * std::cos(x)); }

double polynomial(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

}  // namespace

TEST_CASE("finite integrals") {
  const QuadratureResult lin = integrate_finite([](double x) { return x; }, 0.0, 1.0);
  CHECK(lin.value == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(lin.error_estimate >= 0.0);
  CHECK(lin.evaluations >= 1);

  const double s2 = arcsec(3.0) / (2.0 * pi);
  const QuadratureResult s = integrate_finite(
      [](double x) { return 1.0 / std::sqrt(2.0 + sec2(x)); }, 0.0, pi / 4.0);
  CHECK(std::abs(s.value - pi * s2 / sqrt2) < 1e-12);
}

TEST_CASE("semi-infinite integrals") {
  const QuadratureResult g = integrate_semi_infinite([](double x) { return std::exp(-x * x); });
  CHECK(std::abs(g.value - sqrt_pi / 2.0) < 1e-12);

  const QuadratureResult f2 = integrate_semi_infinite([](double t) {
    const double f = half_normal_pdf(t);
    return f * f;
  });
  CHECK(std::abs(f2.value - 1.0 / sqrt_pi) < 1e-12);

  const QuadratureResult tf =
      integrate_semi_infinite([](double t) { return t * half_normal_pdf(t); });
  CHECK(std::abs(tf.value - std::sqrt(2.0 / pi)) < 1e-12);
}

TEST_CASE("rectangle integrals") {
  const QuadratureResult one = integrate_rect([](double, double) { return 1.0; }, {0, 1}, {0, 1});
  CHECK(std::abs(one.value - 1.0) < 1e-14);

  const QuadratureResult xy =
      integrate_rect([](double x, double y) { return x * y * y; }, {0, 2}, {-1, 1});
  CHECK(std::abs(xy.value - 4.0 / 3.0) < 1e-13);
}

TEST_CASE("narrow peak far from the origin is found on [0, inf)") {
  // Width 0.05 bump at x = 6.
  const QuadratureResult r = integrate_semi_infinite(
      [](double x) { return std::exp(-0.5 * (x - 6.0) * (x - 6.0) / 0.0025); });
  CHECK(std::abs(r.value - 0.05 * std::sqrt(2.0 * pi)) < 1e-12);
}

TEST_CASE("linearity on random polynomial pairs") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> p(6), q(6);
    for (auto& c : p) c = coef(gen);
    for (auto& c : q) c = coef(gen);
    const double alpha = coef(gen), beta = coef(gen);
    const auto ip = integrate_finite([&](double x) { return polynomial(p, x); }, -1.0, 2.0);
    const auto iq = integrate_finite([&](double x) { return polynomial(q, x); }, -1.0, 2.0);
    const auto icomb = integrate_finite(
        [&](double x) { return alpha * polynomial(p, x) + beta * polynomial(q, x); }, -1.0, 2.0);
    const double bound = std::abs(alpha) * ip.error_estimate + std::abs(beta) * iq.error_estimate +
                         icomb.error_estimate + 1e-12;
    CHECK(std::abs(icomb.value - (alpha * ip.value + beta * iq.value)) <= bound);
  }
}

TEST_CASE("interval additivity at random split points") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> split(0.05, 2.95);
  auto f = [](double x) { return std::exp(-x) * std::cos(3.0 * x) + x * x; };
  const auto whole = integrate_finite(f, 0.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double c = split(gen);
    const auto left = integrate_finite(f, 0.0, c);
    const auto right = integrate_finite(f, c, 3.0);
    CHECK(std::abs(whole.value - left.value - right.value) <=
          whole.error_estimate + left.error_estimate + right.error_estimate + 1e-13);
  }
}

TEST_CASE("determinism: repeated calls are bit-identical") {
  auto f = [](double x) { return std::log1p(x) * std::exp(-x * x); };
  const auto a = integrate_semi_infinite(f);
  const auto b = integrate_semi_infinite(f);
  CHECK(a.value == b.value);
  CHECK(a.error_estimate == b.error_estimate);
  CHECK(a.evaluations == b.evaluations);
  CHECK(a.subdivisions == b.subdivisions);
}

TEST_CASE("error estimate bounds the true error on known integrals") {
  struct Known {
    const char* name;
    Integrand f;
    double a, b;
    double exact;
  };
  const std::vector<Known> battery = {
      {"x^5", [](double x) { return std::pow(x, 5); }, 0, 2, 64.0 / 6.0},
      {"exp", [](double x) { return std::exp(x); }, 0, 1, std::exp(1.0) - 1.0},
      {"sin", [](double x) { return std::sin(x); }, 0, pi, 2.0},
      {"1/(1+x^2)", [](double x) { return 1.0 / (1.0 + x * x); }, 0, 1, pi / 4.0},
      {"sqrt", [](double x) { return std::sqrt(x); }, 0, 1, 2.0 / 3.0},
      {"log", [](double x) { return std::log(x); }, 0, 1, -1.0},
      {"1/sqrt", [](double x) { return 1.0 / std::sqrt(x); }, 0, 1, 2.0},
      {"cos 20x", [](double x) { return std::cos(20.0 * x); }, 0, 1, std::sin(20.0) / 20.0},
      {"x e^-x", [](double x) { return x * std::exp(-x); }, 0, 30,
       1.0 - 31.0 * std::exp(-30.0)},
      {"runge", [](double x) { return 1.0 / (1.0 + 25.0 * x * x); }, -1, 1,
       0.4 * std::atan(5.0)},
  };
  for (const Known& k : battery) {
    INFO(k.name);
    const auto r = integrate_finite(k.f, k.a, k.b);
    CHECK(std::abs(r.value - k.exact) <= r.error_estimate);
    CHECK(r.error_estimate <= std::max(1e-12, 1e-12 * std::abs(r.value)));
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(integrate_finite([](double x) { return x; }, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(integrate_finite([](double x) { return x; }, 0.0, 1.0, {0.0, 1e-12}),
                  DomainError);
  CHECK(integrate_finite([](double) { return 1.0; }, 2.0, 2.0).value == 0.0);

  SUBCASE("non-convergence carries the best estimate") {
    // Strongly singular and oscillating: cannot reach 1e-14 within the budget.
    auto nasty = [](double x) { return std::sin(1.0 / x) / x; };
    try {
      integrate_finite(nasty, 0.0, 1.0, {1e-14, 1e-14});
      FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
      CHECK(e.best_estimate().evaluations > 0);
      CHECK(e.best_estimate().error_estimate > 0.0);
    }
  }
}
