// Copyright 2026 crosswidth developers
// SPDX-License-Identifier: Apache-2.0
#include "crosswidth/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "crosswidth/asymptotics.hpp"
#include "crosswidth/geometry.hpp"
#include "crosswidth/order_statistics.hpp"
#include "crosswidth/special_functions.hpp"

namespace crosswidth {

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

namespace {

class Suite {
 public:
  void near(std::string name, double expected, double actual, double tolerance,
            std::string note = {}) {
    const bool ok = std::isfinite(actual) && std::abs(actual - expected) <= tolerance;
    report_.checks.push_back({std::move(name), expected, actual, tolerance, ok, std::move(note)});
  }

  // value must start with the printed digits: 0 <= value - prefix < 10^-digits.
  void prefix(std::string name, double printed, double value, int digits) {
    const double ulp = std::pow(10.0, -digits);
    const double diff = value - printed;
    const bool ok = diff > -1e-12 && diff < ulp;
    report_.checks.push_back({std::move(name), printed, value, ulp, ok, "printed-digit prefix"});
  }

  void truth(std::string name, bool ok, double actual = 0.0, std::string note = {}) {
    report_.checks.push_back({std::move(name), 1.0, ok ? 1.0 : 0.0, 0.0, ok,
                              note.empty() ? std::to_string(actual) : std::move(note)});
  }

  // Runs body; an exception becomes a failed check rather than aborting the suite.
  template <typename Body>
  void guarded(const std::string& name, Body body) {
    try {
      body();
    } catch (const std::exception& e) {
      report_.checks.push_back({name, 0.0, 0.0, 0.0, false, std::string("error: ") + e.what()});
    }
  }

  Report take() { return std::move(report_); }

 private:
  Report report_;
};

std::string indexed(const char* stem, unsigned long i) { return stem + std::to_string(i); }

void special_function_checks(Suite& s) {
  s.near("erf_1", 0.842700792949715, erf(1.0), 1e-14);
  s.near("arcsec_3", 1.230959417340775, arcsec(3.0), 1e-14);
  double worst = 0.0;
  for (int k = -6; k <= 12; ++k) {
    const double x = std::pow(10.0, k);
    const double w = lambert_w0(x);
    worst = std::max(worst, std::abs(w * std::exp(w) - x) / std::max(x, 1.0));
  }
  s.near("lambert_w0_residual", 0.0, worst, 1e-14);
}

void constant_checks(Suite& s, Tolerance tol) {
  for (unsigned k = 1; k <= 10; ++k) {
    s.near(indexed("S_integral_vs_arcsec_k", k), constant_S(k).value,
           constant_S(k, ConstantForm::defining_integral, tol).value, 1e-10);
  }
  s.near("T2_double_vs_reduced", constant_T2(ConstantForm::reduced_integral, tol).value,
         constant_T2(ConstantForm::defining_integral, tol).value, 1e-10);
  s.near("T1_prime_double_vs_reduced", constant_T1_prime(ConstantForm::reduced_integral, tol).value,
         constant_T1_prime(ConstantForm::defining_integral, tol).value, 1e-10);
  s.near("octahedron_6S2_vs_arccos", 3.0 / pi * std::acos(1.0 / 3.0), 6.0 * constant_S(2).value,
         1e-14);
}

void printed_width_checks(Suite& s) {
  const double means[] = {1.273239544735162, 1.175479656091821, 1.101845693159859,
                          1.043421681509785, 0.995378656038812};
  const double squares[] = {1.636619772367581, 1.401771860562389, 1.235105193895722,
                            1.109499626837713};
  for (unsigned n = 2; n <= 6; ++n) {
    s.near(indexed("mean_width_exact_n", n), means[n - 2], mean_width_exact(n), 1e-13);
  }
  for (unsigned n = 2; n <= 5; ++n) {
    s.near(indexed("mean_square_width_exact_n", n), squares[n - 2], mean_square_width_exact(n),
           1e-13);
  }
}

void moment_checks(Suite& s, const VerifyOptions& opt) {
  ClosedFormConstants constants = ClosedFormConstants::reference();
  constants.s2 += opt.s2_perturbation;

  const double mu_printed[] = {1.128, 1.326, 1.464, 1.569, 1.653};
  const double nu_printed[] = {1.636, 2.102, 2.470, 2.773};
  for (unsigned n = 2; n <= 6; ++n) {
    const double closed = mu_closed_form(n, constants).value;
    const double quad = mu_quadrature(n, opt.tol).value;
    std::string note;
    if (n == 5) note = "T_1'/mu_5 reconstruction";
    if (n == 6) note = "T_2/mu_6 reconstruction";
    s.near(indexed("mu_closed_form_vs_quadrature_n", n), quad, closed, 1e-10, note);
    s.prefix(indexed("mu_printed_n", n), mu_printed[n - 2], closed, 3);
  }
  for (unsigned n = 2; n <= 5; ++n) {
    const double closed = nu_closed_form(n, constants).value;
    s.near(indexed("nu_closed_form_vs_quadrature_n", n), nu_quadrature(n, opt.tol).value, closed,
           1e-10);
    s.prefix(indexed("nu_printed_n", n), nu_printed[n - 2], closed, 3);
  }
  s.prefix("nu_printed_n6_quadrature_only", 3.032, nu_quadrature(6, opt.tol).value, 3);
  s.prefix("mu_printed_n7_quadrature_only", 1.723, mu_quadrature(7, opt.tol).value, 3);

  double previous = 0.0;
  bool increasing = true;
  for (unsigned n = 1; n <= 12; ++n) {
    const double v = mu_quadrature(n, opt.tol).value;
    increasing = increasing && v > previous;
    previous = v;
  }
  s.truth("mu_increasing_n1_to_12", increasing);
}

void width_route_checks(Suite& s, Tolerance tol) {
  for (unsigned n = 2; n <= 20; ++n) {
    const double gamma_route = mean_width_via_gamma_relation(n, tol).value;
    const double integral_route = mean_width_via_direct_integral(n, tol).value;
    s.near(indexed("width_gamma_vs_integral_n", n), gamma_route, integral_route, 1e-10);
    if (n <= 6) s.near(indexed("width_exact_vs_gamma_n", n), mean_width_exact(n), gamma_route, 1e-10);
  }
}

void derivation_checks(Suite& s, Tolerance tol) {
  for (unsigned n = 2; n <= 8; ++n) {
    s.near(indexed("parts_chain_n", n), 0.0, verify_parts_chain(n, tol).max_discrepancy, 1e-10);
  }
  for (double t : {0.1, 0.5, 1.0, 2.0, 5.0}) {
    const PolarIdentityReport r = verify_polar_identity(t, tol);
    s.near("polar_identity_t" + std::to_string(t).substr(0, 3), r.lhs, r.rhs, 1e-10);
  }
}

void asymptotic_checks(Suite& s, Tolerance tol) {
  double worst = 0.0;
  for (double n = 2.0; n <= 1e9; n *= 1.5) {
    const auto k = static_cast<std::uint64_t>(n);
    const double a = a_n(k);
    const double target = static_cast<double>(k) * static_cast<double>(k);
    worst = std::max(worst, std::abs(2.0 * pi * a * a * std::exp(a * a) - target) / target);
  }
  s.near("a_n_defining_equation_residual", 0.0, worst, 1e-12);

  const GumbelMomentReport g = gumbel_moment_check(tol);
  s.near("gumbel_mass", 1.0, g.mass, 1e-10);
  s.near("gumbel_first_moment", euler_gamma, g.first_moment, 1e-8);
  s.near("gumbel_second_moment", pi * pi / 6.0 + euler_gamma * euler_gamma, g.second_moment, 1e-8);

  double previous = 1e300;
  bool decreasing = true;
  for (std::uint64_t n : {10ULL, 100ULL, 1000ULL, 10000ULL}) {
    const double exact = mu_quadrature(static_cast<unsigned>(n), tol).value;
    const double rel = std::abs(mu_asymptotic(n) / exact - 1.0);
    decreasing = decreasing && rel < previous;
    previous = rel;
  }
  s.truth("mu_asymptotic_error_decreasing", decreasing, previous);
}

void geometry_checks(Suite& s, std::uint64_t seed) {
  RandomStream stream(seed, 0xC0FFEE);
  for (unsigned n = 2; n <= 8; ++n) {
    const Polytope p = crosspolytope(n);
    double worst = 0.0;
    std::vector<double> u(n);
    for (int trial = 0; trial < 1000; ++trial) {
      for (double& x : u) x = stream.normal();
      worst = std::max(worst, std::abs(crosspolytope_width(u) - width_in_direction(p, u)));
    }
    s.near(indexed("width_closed_vs_vertices_n", n), 0.0, worst, 1e-14);
  }
  for (unsigned n = 1; n <= 10; ++n) {
    s.near(indexed("inradius_n", n), std::sqrt(1.0 / (2.0 * n)), crosspolytope_inradius(n), 1e-12);
  }
}

void monte_carlo_checks(Suite& s, const VerifyOptions& opt) {
  for (unsigned n = 2; n <= 6; ++n) {
    const MomentPair w = mc_mean_width(n, opt.samples, opt.seed, opt.mc);
    const double conj = 2.0 / n * nu_quadrature(n, opt.tol).value;
    s.near(indexed("mc_mean_square_width_vs_conjecture_n", n), conj, w.second.mean,
           4.0 * w.second.std_error, "4 standard errors");
    s.near(indexed("mc_mean_width_vs_exact_n", n), mean_width_exact(n), w.first.mean,
           4.0 * w.first.std_error, "4 standard errors");
  }
  const MomentPair m = mc_half_normal_max(2, opt.samples, opt.seed, opt.mc);
  s.near("mc_half_normal_max_mu2", 2.0 / sqrt_pi, m.first.mean, 4.0 * m.first.std_error,
         "4 standard errors");

  const double d3 = gumbel_limit_convergence(1000, 1'000'000, opt.seed, opt.mc).sup_distance;
  const double d5 = gumbel_limit_convergence(100000, 1'000'000, opt.seed, opt.mc).sup_distance;
  s.truth("gumbel_sup_distance_shrinks", d5 < d3, d5);
}

}  // namespace

Report run_verification(const VerifyOptions& options) {
  Suite s;
  s.guarded("special_functions", [&] { special_function_checks(s); });
  s.guarded("constants", [&] { constant_checks(s, options.tol); });
  s.guarded("printed_widths", [&] { printed_width_checks(s); });
  s.guarded("moments", [&] { moment_checks(s, options); });
  s.guarded("width_routes", [&] { width_route_checks(s, options.tol); });
  s.guarded("derivations", [&] { derivation_checks(s, options.tol); });
  s.guarded("asymptotics", [&] { asymptotic_checks(s, options.tol); });
  s.guarded("geometry", [&] { geometry_checks(s, options.seed); });
  if (options.full) s.guarded("monte_carlo", [&] { monte_carlo_checks(s, options); });
  return s.take();
}

}  // namespace crosswidth
