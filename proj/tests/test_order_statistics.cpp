// Copyright 2026 crosswidth developers
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "crosswidth/order_statistics.hpp"
#include "crosswidth/special_functions.hpp"
#include "oracles.hpp"

using namespace crosswidth;

namespace {

// True when value starts with the printed 3-decimal digits.
bool has_prefix(double value, double printed) {
  return value - printed > -1e-12 && value - printed < 1e-3;
}

}  // namespace

TEST_CASE("mu_n by quadrature") {
  CHECK(std::abs(mu_quadrature(1).value - std::sqrt(2.0 / pi)) < 1e-12);
  CHECK(has_prefix(mu_quadrature(2).value, 1.128));
  CHECK(has_prefix(mu_quadrature(7).value, 1.723));
  CHECK(mu_quadrature(4).method == MomentMethod::quadrature);
  CHECK_THROWS_AS(mu_quadrature(0), DomainError);
}

TEST_CASE("nu_n by quadrature") {
  CHECK(std::abs(nu_quadrature(1).value - 1.0) < 1e-12);
  CHECK(has_prefix(nu_quadrature(3).value, 2.102));
  CHECK(has_prefix(nu_quadrature(6).value, 3.032));
}

TEST_CASE("moments increase with n") {
  double mu_prev = 0.0, nu_prev = 0.0;
  for (unsigned n = 1; n <= 12; ++n) {
    const double mu = mu_quadrature(n).value;
    const double nu = nu_quadrature(n).value;
    CHECK(mu > mu_prev);
    CHECK(nu > nu_prev);
    mu_prev = mu;
    nu_prev = nu;
  }
}

TEST_CASE("brute-force midpoint oracle for n = 2..4") {
  for (unsigned n = 2; n <= 4; ++n) {
    for (int order = 1; order <= 2; ++order) {
      const double brute = oracle::midpoint(
          [n, order](double x) { return oracle::moment_integrand(n, order, x); }, 0.0, 12.0,
          10'000'000);
      const double quad = order == 1 ? mu_quadrature(n).value : nu_quadrature(n).value;
      CHECK(std::abs(brute - quad) <= 1e-6);
    }
  }
}

TEST_CASE("S_k forms") {
  CHECK(std::abs(constant_S(1).value - 1.0 / 6.0) < 1e-15);
  const double s2_oracle = oracle::arccos_bisection(1.0 / 3.0) / (2.0 * pi);
  CHECK(std::abs(s2_oracle - 0.195913276015304) < 1e-12);
  CHECK(std::abs(constant_S(2).value - 0.195913276015304) < 1e-12);
  CHECK(std::abs(constant_S(3, ConstantForm::defining_integral).value - arcsec(4.0) / (2.0 * pi)) <
        1e-10);
  for (unsigned k = 1; k <= 10; ++k) {
    const NamedConstant c = constant_S(k);
    CHECK(c.value > 0.0);
    CHECK(c.value < 0.25);
    CHECK(std::abs(constant_S(k, ConstantForm::defining_integral).value - c.value) < 1e-10);
  }
  CHECK_THROWS_AS(constant_S(0), DomainError);
  CHECK_THROWS_AS(constant_S(2, ConstantForm::reduced_integral), DomainError);
}

TEST_CASE("octahedron identity 6 S_2 = (3/pi) arccos(1/3)") {
  CHECK(std::abs(6.0 * constant_S(2).value - 3.0 / pi * std::acos(1.0 / 3.0)) <= 1e-14);
}

TEST_CASE("T_2 forms") {
  const NamedConstant dbl = constant_T2(ConstantForm::defining_integral);
  const NamedConstant red = constant_T2(ConstantForm::reduced_integral);
  CHECK(std::abs(dbl.value - red.value) <= 1e-10);
  CHECK_THROWS_AS(constant_T2(ConstantForm::closed_form), DomainError);

  const double s2 = constant_S(2).value;
  const double mu6 = 30.0 / sqrt_pi * (1.0 - 8.0 * s2 + 16.0 * red.value);
  CHECK(has_prefix(mu6, 1.653));

  SUBCASE("0 < T_2 < S_2/2 with a 1000x1000 Riemann grid") {
    const double grid = std::sqrt(2.0) / (pi * pi) *
                        oracle::midpoint_2d(
                            [](double x, double y) {
                              const double cx = std::cos(x), cy = std::cos(y);
                              return 1.0 / std::sqrt(2.0 + 1.0 / (cx * cx) + 1.0 / (cy * cy));
                            },
                            0.0, pi / 4.0, 0.0, pi / 4.0, 1000);
    CHECK(grid > 0.0);
    CHECK(grid < s2 / 2.0);
    CHECK(std::abs(grid - red.value) < 1e-7);
  }
}

TEST_CASE("T_1' forms") {
  const NamedConstant dbl = constant_T1_prime(ConstantForm::defining_integral);
  const NamedConstant red = constant_T1_prime(ConstantForm::reduced_integral);
  CHECK(std::abs(dbl.value - red.value) <= 1e-10);

  const double s2 = constant_S(2).value;
  const double mu5 = 5.0 / sqrt_pi * (-sqrt2 + 8.0 * s2 + 16.0 * sqrt2 * red.value);
  CHECK(has_prefix(mu5, 1.569));

  // The reduced integrand tends to arcsec(2) / (1 - 3) = -pi/6 as z -> 0.
  CHECK(std::abs(t1_prime_reduced_integrand(1e-8) + pi / 6.0) <= 1e-6);
  CHECK(std::isfinite(t1_prime_reduced_integrand(1e-300)));
}

TEST_CASE("closed forms") {
  CHECK(has_prefix(mu_closed_form(3).value, 1.326));
  CHECK(has_prefix(nu_closed_form(5).value, 2.773));
  CHECK(mu_closed_form(4).method == MomentMethod::closed_form);
  for (unsigned n = 2; n <= 6; ++n) {
    CHECK(std::abs(mu_closed_form(n).value - mu_quadrature(n).value) <= 1e-10);
  }
  for (unsigned n = 2; n <= 5; ++n) {
    CHECK(std::abs(nu_closed_form(n).value - nu_quadrature(n).value) <= 1e-10);
  }

  SUBCASE("range is enforced with a message") {
    CHECK_THROWS_WITH_AS(mu_closed_form(7), doctest::Contains("n = 2..6"), DomainError);
    CHECK_THROWS_AS(mu_closed_form(1), DomainError);
    CHECK_THROWS_WITH_AS(nu_closed_form(6), doctest::Contains("n = 2..5"), DomainError);
  }

  SUBCASE("perturbed constants move the reconstruction") {
    ClosedFormConstants c = ClosedFormConstants::reference();
    c.s2 += 1e-6;
    CHECK(std::abs(mu_closed_form(6, c).value - mu_quadrature(6).value) > 1e-6);
  }
}

TEST_CASE("integration-by-parts chain") {
  const PartsChainReport r3 = verify_parts_chain(3);
  CHECK(r3.max_discrepancy <= 1e-10);

  // n = 2: ∫ exp(-2x^2) = sqrt(pi/8), and the last form is (pi/(2 sqrt2)) mu_2 / 2.
  const PartsChainReport r2 = verify_parts_chain(2);
  CHECK(std::abs(r2.expressions[0] - std::sqrt(pi / 8.0)) < 1e-12);
  CHECK(std::abs(r2.expressions[3] - pi / (2.0 * sqrt2) * (2.0 / sqrt_pi) / 2.0) < 1e-12);
  CHECK(r2.max_discrepancy <= 1e-10);

  CHECK(verify_parts_chain(8).max_discrepancy <= 1e-9);
  CHECK_THROWS_AS(verify_parts_chain(1), DomainError);
}

TEST_CASE("polar-coordinate identity for F(t)^2") {
  const PolarIdentityReport r0 = verify_polar_identity(0.0);
  CHECK(r0.lhs == 0.0);
  CHECK(std::abs(r0.rhs) < 1e-15);
  CHECK(verify_polar_identity(1.0).difference <= 1e-12);
  CHECK(verify_polar_identity(5.0).difference <= 1e-12);
  CHECK_THROWS_AS(verify_polar_identity(-1.0), DomainError);
}

TEST_CASE("large n stays finite") {
  const MomentEstimate m = mu_quadrature(10000);
  CHECK(std::isfinite(m.value));
  CHECK(m.value > 4.0);
  CHECK(m.value < 4.1);
}
