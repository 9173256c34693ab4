// Copyright 2026 crosswidth developers
// SPDX-License-Identifier: Apache-2.0
#include "crosswidth/order_statistics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "crosswidth/special_functions.hpp"

namespace crosswidth {

std::string_view to_string(MomentMethod method) {
  switch (method) {
    case MomentMethod::closed_form: return "closed_form";
    case MomentMethod::quadrature: return "quadrature";
    case MomentMethod::monte_carlo: return "monte_carlo";
  }
  return "unknown";
}

std::string_view to_string(ConstantForm form) {
  switch (form) {
    case ConstantForm::defining_integral: return "defining_integral";
    case ConstantForm::reduced_integral: return "reduced_integral";
    case ConstantForm::closed_form: return "closed_form";
  }
  return "unknown";
}

namespace {

constexpr double kQuarterPi = pi / 4.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// sec^2 and tan^2 from cos/sin directly.
double sec2(double x) {
  const double c = std::cos(x);
  return 1.0 / (c * c);
}

double tan2(double x) {
  const double s = std::sin(x);
  const double c = std::cos(x);
  return (s * s) / (c * c);
}

// Upper limit pi S_2 = arcsec(3) / 2 of the reduced integrals.
double reduced_upper_limit() { return 0.5 * arcsec(3.0); }

}  // namespace

double s_integrand(unsigned k, double x) {
  return 1.0 / std::sqrt(static_cast<double>(k) + sec2(x));
}

double t2_double_integrand(double x, double y) {
  return 1.0 / std::sqrt(2.0 + sec2(x) + sec2(y));
}

double t2_reduced_integrand(double z) {
  return arcsec(1.0 + 6.0 / (2.0 - tan2(z)));
}

double t1_prime_double_integrand(double x, double y) {
  return 1.0 / (1.0 + sec2(x) + sec2(y));
}

double t1_prime_reduced_integrand(double z) {
  const double s = std::sin(z);
  const double c = std::cos(z);
  // 3 / (1 + 4 cot^2 z) written without cot so z -> 0 stays finite.
  const double ratio = 3.0 * s * s / (s * s + 4.0 * c * c);
  return arcsec(2.0 - ratio) / (1.0 - 6.0 / (2.0 - tan2(z)));
}

NamedConstant constant_S(unsigned k, ConstantForm form, Tolerance tol) {
  if (k == 0) throw DomainError("S_k requires k >= 1");
  NamedConstant out;
  out.name = ConstantName::S;
  out.k = k;
  out.form = form;
  switch (form) {
    case ConstantForm::closed_form:
      out.value = arcsec(static_cast<double>(k) + 1.0) / (2.0 * pi);
      out.error_estimate = 2.0 * kEps * out.value;
      return out;
    case ConstantForm::defining_integral: {
      const QuadratureResult r =
          integrate_finite([k](double x) { return s_integrand(k, x); }, 0.0, kQuarterPi, tol);
      const double scale = std::sqrt(static_cast<double>(k)) / pi;
      out.value = scale * r.value;
      out.error_estimate = scale * r.error_estimate;
      return out;
    }
    case ConstantForm::reduced_integral:
      break;
  }
  throw DomainError("S_k has no reduced-integral form; use closed_form or defining_integral");
}

NamedConstant constant_T2(ConstantForm form, Tolerance tol) {
  NamedConstant out;
  out.name = ConstantName::T2;
  out.form = form;
  switch (form) {
    case ConstantForm::defining_integral: {
      const QuadratureResult r =
          integrate_rect(t2_double_integrand, {0.0, kQuarterPi}, {0.0, kQuarterPi}, tol);
      const double scale = sqrt2 / (pi * pi);
      out.value = scale * r.value;
      out.error_estimate = scale * r.error_estimate;
      return out;
    }
    case ConstantForm::reduced_integral: {
      const QuadratureResult r =
          integrate_finite(t2_reduced_integrand, 0.0, reduced_upper_limit(), tol);
      const double scale = 1.0 / (2.0 * pi * pi);
      out.value = scale * r.value;
      out.error_estimate = scale * r.error_estimate;
      return out;
    }
    case ConstantForm::closed_form:
      break;
  }
  throw DomainError("T_2 has no closed form; use defining_integral or reduced_integral");
}

NamedConstant constant_T1_prime(ConstantForm form, Tolerance tol) {
  NamedConstant out;
  out.name = ConstantName::T1_prime;
  out.form = form;
  switch (form) {
    case ConstantForm::defining_integral: {
      const QuadratureResult r = integrate_rect(t1_prime_double_integrand, {0.0, kQuarterPi},
                                                {0.0, kQuarterPi}, tol);
      const double scale = 1.0 / (pi * pi);
      out.value = scale * r.value;
      out.error_estimate = scale * r.error_estimate;
      return out;
    }
    case ConstantForm::reduced_integral: {
      const double s2 = constant_S(2).value;
      const QuadratureResult r =
          integrate_finite(t1_prime_reduced_integrand, 0.0, reduced_upper_limit(), tol);
      const double scale = 1.0 / (2.0 * sqrt2 * pi * pi);
      out.value = (1.0 - 2.0 * sqrt2 * s2) / 16.0 + scale * r.value;
      out.error_estimate = scale * r.error_estimate + 4.0 * kEps;
      return out;
    }
    case ConstantForm::closed_form:
      break;
  }
  throw DomainError("T_1' has no closed form; use defining_integral or reduced_integral");
}

const ClosedFormConstants& ClosedFormConstants::reference() {
  static const ClosedFormConstants constants = [] {
    const Tolerance tight{1e-17, 1e-14};
    ClosedFormConstants c;
    c.s2 = constant_S(2).value;
    c.s3 = constant_S(3).value;
    const NamedConstant t2 = constant_T2(ConstantForm::reduced_integral, tight);
    const NamedConstant t1 = constant_T1_prime(ConstantForm::reduced_integral, tight);
    c.t2 = t2.value;
    c.t2_error = t2.error_estimate;
    c.t1_prime = t1.value;
    c.t1_prime_error = t1.error_estimate;
    return c;
  }();
  return constants;
}

namespace {

MomentEstimate closed(unsigned n, int order, double value, double propagated_error) {
  MomentEstimate m;
  m.n = n;
  m.order = order;
  m.value = value;
  m.method = MomentMethod::closed_form;
  m.error_estimate = propagated_error + 8.0 * kEps * std::abs(value);
  return m;
}

}  // namespace

MomentEstimate mu_closed_form(unsigned n, const ClosedFormConstants& c) {
  const double k = 1.0 / sqrt_pi;
  switch (n) {
    case 2: return closed(n, 1, 2.0 * k, 0.0);
    case 3: return closed(n, 1, 12.0 * k * c.s2, 0.0);
    case 4: return closed(n, 1, 12.0 * k * (1.0 - 4.0 * c.s2), 0.0);
    case 5:
      return closed(n, 1, 5.0 * k * (-sqrt2 + 8.0 * c.s2 + 16.0 * sqrt2 * c.t1_prime),
                    5.0 * k * 16.0 * sqrt2 * c.t1_prime_error);
    case 6:
      return closed(n, 1, 30.0 * k * (1.0 - 8.0 * c.s2 + 16.0 * c.t2),
                    30.0 * k * 16.0 * c.t2_error);
    default:
      throw DomainError("closed form for mu_n is available for n = 2..6 only, got n = " +
                        std::to_string(n));
  }
}

MomentEstimate nu_closed_form(unsigned n, const ClosedFormConstants& c) {
  switch (n) {
    case 2: return closed(n, 2, 1.0 + 2.0 / pi, 0.0);
    case 3: return closed(n, 2, 1.0 + 2.0 * sqrt3 / pi, 0.0);
    case 4: return closed(n, 2, 1.0 + 8.0 * sqrt3 / (3.0 * pi), 0.0);
    case 5: return closed(n, 2, 1.0 + (20.0 * sqrt3 / pi) * (1.0 - 4.0 * c.s3), 0.0);
    default:
      throw DomainError("closed form for nu_n is available for n = 2..5 only, got n = " +
                        std::to_string(n));
  }
}

double moment_integrand(unsigned n, int order, double x) {
  if (x <= 0.0) return 0.0;
  double power = 1.0;
  if (n > 1) {
    // F^(n-1) = exp((n-1) log(1 - sf)) keeps full precision when F is near 1.
    power = std::exp(static_cast<double>(n - 1) * std::log1p(-half_normal_sf(x)));
  }
  const double weight = order == 1 ? x : x * x;
  return static_cast<double>(n) * weight * power * half_normal_pdf(x);
}

namespace {

MomentEstimate moment_by_quadrature(unsigned n, int order, Tolerance tol) {
  if (n == 0) throw DomainError("moments of the half-normal maximum require n >= 1");
  const QuadratureResult r =
      integrate_semi_infinite([n, order](double x) { return moment_integrand(n, order, x); }, tol);
  MomentEstimate m;
  m.n = n;
  m.order = order;
  m.value = r.value;
  m.method = MomentMethod::quadrature;
  m.error_estimate = r.error_estimate;
  return m;
}

}  // namespace

MomentEstimate mu_quadrature(unsigned n, Tolerance tol) { return moment_by_quadrature(n, 1, tol); }

MomentEstimate nu_quadrature(unsigned n, Tolerance tol) { return moment_by_quadrature(n, 2, tol); }

PartsChainReport verify_parts_chain(unsigned n, Tolerance tol) {
  if (n < 2) throw DomainError("the integration-by-parts chain requires n >= 2");
  const double m = static_cast<double>(n);
  const auto ipow = [](double base, unsigned e) { return e == 0 ? 1.0 : std::pow(base, e); };

  PartsChainReport report;
  report.n = n;
  report.expressions[0] =
      integrate_semi_infinite(
          [n, &ipow](double x) { return std::exp(-2.0 * x * x) * ipow(std::erf(x), n - 2); }, tol)
          .value;
  report.expressions[1] =
      sqrt_pi / (m - 1.0) *
      integrate_semi_infinite(
          [n, &ipow](double x) { return x * std::exp(-x * x) * ipow(std::erf(x), n - 1); }, tol)
          .value;
  report.expressions[2] =
      sqrt_pi / (2.0 * (m - 1.0)) *
      integrate_semi_infinite(
          [n, &ipow](double x) {
            return x * std::exp(-0.5 * x * x) * ipow(std::erf(x / sqrt2), n - 1);
          },
          tol)
          .value;
  report.expressions[3] =
      pi / (2.0 * sqrt2 * (m - 1.0)) *
      integrate_semi_infinite(
          [n, &ipow](double x) {
            return x * half_normal_pdf(x) * ipow(half_normal_cdf(x), n - 1);
          },
          tol)
          .value;

  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      report.max_discrepancy = std::max(
          report.max_discrepancy, std::abs(report.expressions[i] - report.expressions[j]));
    }
  }
  return report;
}

PolarIdentityReport verify_polar_identity(double t, Tolerance tol) {
  if (!(std::isfinite(t) && t >= 0.0)) throw DomainError("polar identity requires t >= 0");
  PolarIdentityReport report;
  report.t = t;
  const double cdf = half_normal_cdf(t);
  report.lhs = cdf * cdf;
  const QuadratureResult r = integrate_finite(
      [t](double theta) { return std::exp(-0.5 * t * t * sec2(theta)); }, 0.0, kQuarterPi, tol);
  report.rhs = 1.0 - 4.0 / pi * r.value;
  report.difference = std::abs(report.lhs - report.rhs);
  return report;
}

}  // namespace crosswidth
