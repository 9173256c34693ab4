// Copyright 2026 crosswidth developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string_view>

#include "crosswidth/quadrature.hpp"

namespace crosswidth {

// Moments of the maximum m_n of n independent half-normal variables:
//   mu_n = E(m_n)   = n ∫ x   F(x)^(n-1) f(x) dx,
//   nu_n = E(m_n^2) = n ∫ x^2 F(x)^(n-1) f(x) dx,
// with f, F the half-normal density and distribution on [0, inf).

enum class MomentMethod { closed_form, quadrature, monte_carlo };

std::string_view to_string(MomentMethod method);

struct MomentEstimate {
  unsigned n = 0;
  int order = 1;  // 1 for mu_n, 2 for nu_n
  double value = 0.0;
  MomentMethod method = MomentMethod::quadrature;
  double error_estimate = 0.0;
};

enum class ConstantName { S, T2, T1_prime };

/// Which representation of a constant to evaluate.
///   defining_integral: the single integral for S_k, the double integral
///                      over [0, pi/4]^2 for T_2 and T_1'.
///   reduced_integral:  the single-integral reduction over [0, pi S_2]
///                      (T_2 and T_1' only).
///   closed_form:       (1/2pi) arcsec(k+1) (S_k only).
enum class ConstantForm { defining_integral, reduced_integral, closed_form };

std::string_view to_string(ConstantForm form);

struct NamedConstant {
  ConstantName name = ConstantName::S;
  unsigned k = 0;  // only meaningful for S_k
  double value = 0.0;
  ConstantForm form = ConstantForm::closed_form;
  double error_estimate = 0.0;
};

NamedConstant constant_S(unsigned k, ConstantForm form = ConstantForm::closed_form,
                         Tolerance tol = {});
NamedConstant constant_T2(ConstantForm form, Tolerance tol = {});
NamedConstant constant_T1_prime(ConstantForm form, Tolerance tol = {});

// Integrands, exposed for tests.
double s_integrand(unsigned k, double x);
double t2_double_integrand(double x, double y);
double t2_reduced_integrand(double z);
double t1_prime_double_integrand(double x, double y);
/// Finite on (0, pi S_2]; tends to -pi/6 as z -> 0.
double t1_prime_reduced_integrand(double z);

/// The constants feeding the closed-form tables.
struct ClosedFormConstants {
  double s2 = 0.0;
  double s3 = 0.0;
  double t2 = 0.0;
  double t2_error = 0.0;
  double t1_prime = 0.0;
  double t1_prime_error = 0.0;

  /// S_2, S_3 from arcsec; T_2, T_1' from the reduced integrals at a tolerance
  /// near machine precision. Computed once.
  static const ClosedFormConstants& reference();
};

/// Closed forms for mu_n, n = 2..6.
MomentEstimate mu_closed_form(unsigned n,
                              const ClosedFormConstants& c = ClosedFormConstants::reference());
/// Closed forms for nu_n, n = 2..5.
MomentEstimate nu_closed_form(unsigned n,
                              const ClosedFormConstants& c = ClosedFormConstants::reference());

inline constexpr unsigned mu_closed_form_min = 2;
inline constexpr unsigned mu_closed_form_max = 6;
inline constexpr unsigned nu_closed_form_min = 2;
inline constexpr unsigned nu_closed_form_max = 5;

MomentEstimate mu_quadrature(unsigned n, Tolerance tol = {});
MomentEstimate nu_quadrature(unsigned n, Tolerance tol = {});

/// n ∫ x^order F(x)^(n-1) f(x), evaluated stably for large n.
double moment_integrand(unsigned n, int order, double x);

/// The four equal expressions obtained by integrating
/// ∫ exp(-2x^2) erf(x)^(n-2) dx by parts and rescaling:
///   [0] ∫ exp(-2x^2) erf(x)^(n-2)
///   [1] sqrt(pi)/(n-1) ∫ x exp(-x^2) erf(x)^(n-1)
///   [2] sqrt(pi)/(2(n-1)) ∫ x exp(-x^2/2) erf(x/sqrt 2)^(n-1)
///   [3] pi/(2 sqrt2 (n-1)) ∫ x f(x) F(x)^(n-1)
struct PartsChainReport {
  unsigned n = 0;
  std::array<double, 4> expressions{};
  double max_discrepancy = 0.0;
};

PartsChainReport verify_parts_chain(unsigned n, Tolerance tol = {});

/// F(t)^2 against 1 - (4/pi) ∫_0^{pi/4} exp(-t^2 sec^2(theta) / 2) dtheta.
struct PolarIdentityReport {
  double t = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double difference = 0.0;
};

PolarIdentityReport verify_polar_identity(double t, Tolerance tol = {});

}  // namespace crosswidth
