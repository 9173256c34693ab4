// Copyright 2026 crosswidth developers
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails or exceeds its time budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "crosswidth/asymptotics.hpp"
#include "crosswidth/geometry.hpp"
#include "crosswidth/monte_carlo.hpp"
#include "crosswidth/order_statistics.hpp"
#include "crosswidth/special_functions.hpp"

using namespace crosswidth;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Worst-case tracker: records max |a - b| and fails when it exceeds tol.
class Within {
 public:
  explicit Within(double tol) : tol_(tol) {}
  void operator()(double a, double b) {
    const double d = std::abs(a - b);
    worst_ = std::max(worst_, std::isfinite(d) ? d : std::numeric_limits<double>::infinity());
  }
  bool ok() const { return worst_ <= tol_; }
  double worst() const { return worst_; }

 private:
  double tol_;
  double worst_ = 0.0;
};

std::string format(const char* fmt, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return buf;
}

bool has_prefix(double value, double printed) {
  return value - printed > -1e-12 && value - printed < 1e-3;
}

Outcome closed_form_reproduction() {
  const double widths[] = {1.273239544735162, 1.175479656091821, 1.101845693159859,
                           1.043421681509785, 0.995378656038812};
  const double squares[] = {1.636619772367581, 1.401771860562389, 1.235105193895722,
                            1.109499626837713};
  Within w(1e-13);
  for (unsigned n = 2; n <= 6; ++n) w(mean_width_exact(n), widths[n - 2]);
  for (unsigned n = 2; n <= 5; ++n) w(mean_square_width_exact(n), squares[n - 2]);
  return {w.ok(), format("max abs error %.3g (tol 1e-13)", w.worst())};
}

Outcome table_reproduction() {
  const double mu_printed[] = {1.128, 1.326, 1.464, 1.569, 1.653};
  const double nu_printed[] = {1.636, 2.102, 2.470, 2.773};
  bool prefixes = true;
  Within agree(1e-10);
  for (unsigned n = 2; n <= 6; ++n) {
    const double c = mu_closed_form(n).value;
    prefixes &= has_prefix(c, mu_printed[n - 2]);
    agree(c, mu_quadrature(n).value);
  }
  for (unsigned n = 2; n <= 5; ++n) {
    const double c = nu_closed_form(n).value;
    prefixes &= has_prefix(c, nu_printed[n - 2]);
    agree(c, nu_quadrature(n).value);
  }
  prefixes &= has_prefix(nu_quadrature(6).value, 3.032);
  prefixes &= has_prefix(mu_quadrature(7).value, 1.723);
  return {prefixes && agree.ok(),
          std::string(prefixes ? "prefixes match" : "prefix mismatch") +
              format(", closed vs quadrature %.3g (tol 1e-10)", agree.worst())};
}

Outcome identity_suite() {
  Within w(1e-10);
  for (unsigned k = 1; k <= 10; ++k) {
    w(constant_S(k, ConstantForm::defining_integral).value,
      constant_S(k, ConstantForm::closed_form).value);
  }
  w(constant_T2(ConstantForm::defining_integral).value,
    constant_T2(ConstantForm::reduced_integral).value);
  w(constant_T1_prime(ConstantForm::defining_integral).value,
    constant_T1_prime(ConstantForm::reduced_integral).value);
  for (unsigned n = 2; n <= 8; ++n) w(verify_parts_chain(n).max_discrepancy, 0.0);
  for (double t : {0.1, 0.5, 1.0, 2.0, 5.0}) w(verify_polar_identity(t).difference, 0.0);
  w(6.0 * constant_S(2).value, 3.0 / pi * std::acos(1.0 / 3.0));
  return {w.ok(), format("max discrepancy %.3g (tol 1e-10)", w.worst())};
}

Outcome three_routes() {
  Within w(1e-10);
  for (unsigned n = 2; n <= 20; ++n) {
    const double g = mean_width_via_gamma_relation(n).value;
    const double d = mean_width_via_direct_integral(n).value;
    w(g, d);
    if (n <= 6) {
      w(mean_width_exact(n), g);
      w(mean_width_exact(n), d);
    }
  }
  return {w.ok(), format("max route disagreement %.3g (tol 1e-10)", w.worst())};
}

Outcome conjecture() {
  double worst = 0.0;
  for (unsigned n = 2; n <= 6; ++n) {
    worst = std::max(worst, std::abs(verify_conjecture(n, 10'000'000, default_seed).z_score));
  }
  return {worst <= 4.0, format("max |z| %.3f over n = 2..6 at 1e7 samples (limit 4)", worst)};
}

Outcome monte_carlo_width() {
  double worst = 0.0;
  for (unsigned n = 2; n <= 6; ++n) {
    const McEstimate e = mc_mean_width(n, 10'000'000, default_seed).first;
    worst = std::max(worst, std::abs(e.mean - mean_width_exact(n)) / e.std_error);
  }
  bool identical = true;
  for (unsigned threads : {1u, 2u, 4u}) {
    McOptions a;
    a.threads = 1;
    McOptions b;
    b.threads = threads;
    const MomentPair x = mc_mean_width(5, 1'000'000, default_seed, a);
    const MomentPair y = mc_mean_width(5, 1'000'000, default_seed, b);
    identical &= x.first.mean == y.first.mean && x.first.std_error == y.first.std_error &&
                 x.second.mean == y.second.mean;
  }
  return {worst <= 4.0 && identical,
          format("max |z| %.3f at 1e7 samples (limit 4), ", worst) +
              (identical ? "bit-identical for 1, 2 and 4 workers" : "worker-count dependence")};
}

Outcome asymptotics() {
  double residual = 0.0;
  std::mt19937_64 gen(1);
  std::vector<std::uint64_t> ns = {2, 3, 10, 100, 1000, 1'000'000, 1'000'000'000};
  std::uniform_real_distribution<double> exponent(std::log(2.0), std::log(1e9));
  for (int i = 0; i < 200; ++i) ns.push_back(static_cast<std::uint64_t>(std::exp(exponent(gen))));
  for (std::uint64_t n : ns) {
    const double a = a_n(n);
    const double nn = static_cast<double>(n);
    residual = std::max(residual, std::abs(2.0 * pi * a * a * std::exp(a * a) / (nn * nn) - 1.0));
  }
  const GumbelMomentReport g = gumbel_moment_check();
  const double gerr = std::max(std::abs(g.first_moment - euler_gamma),
                               std::abs(g.second_moment - (pi * pi / 6.0 + euler_gamma * euler_gamma)));
  bool decreasing = true;
  double prev = INFINITY;
  for (std::uint64_t n : {10ULL, 100ULL, 1000ULL, 10000ULL}) {
    const double err = std::abs(mu_asymptotic(n) / mu_quadrature(static_cast<unsigned>(n)).value - 1.0);
    decreasing &= err < prev;
    prev = err;
  }
  const double d3 = gumbel_limit_convergence(1000, 1'000'000, default_seed).sup_distance;
  const double d5 = gumbel_limit_convergence(100000, 1'000'000, default_seed).sup_distance;
  const bool ok = residual <= 1e-12 && gerr <= 1e-8 && decreasing && d5 < d3;
  return {ok, format("a_n residual %.3g, Gumbel moment error %.3g, ", residual, gerr) +
                  (decreasing ? "mu error decreasing, " : "mu error NOT decreasing, ") +
                  format("sup distance %.4f -> %.4f", d3, d5)};
}

Outcome geometry_oracle() {
  std::mt19937_64 gen(8);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  for (std::size_t n = 2; n <= 8; ++n) {
    const Polytope p = crosspolytope(n);
    std::vector<double> u(n);
    for (int t = 0; t < 10000; ++t) {
      for (double& x : u) x = normal(gen);
      worst = std::max(worst, std::abs(width_in_direction(p, u) - crosspolytope_width(u)));
    }
  }
  double inradius = 0.0;
  for (std::size_t n = 1; n <= 10; ++n) {
    inradius = std::max(inradius, std::abs(crosspolytope_inradius(n) - std::sqrt(1.0 / (2.0 * n))));
  }
  return {worst <= 1e-14 && inradius <= 1e-12,
          format("width error %.3g (tol 1e-14), inradius error %.3g (tol 1e-12)", worst, inradius)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "closed-form reproduction", 1.0, closed_form_reproduction},
      {2, "table reproduction", 5.0, table_reproduction},
      {3, "identity suite", 30.0, identity_suite},
      {4, "three-route width agreement", 30.0, three_routes},
      {5, "conjecture confirmation", 120.0, conjecture},
      {6, "Monte Carlo mean width", 120.0, monte_carlo_width},
      {7, "asymptotics", 120.0, asymptotics},
      {8, "geometry oracle", 10.0, geometry_oracle},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool pass = o.passed && in_time;
    failures += pass ? 0 : 1;
    std::printf("%s criterion %d (%s): %s; %.2f s of %.0f s%s\n", pass ? "PASS" : "FAIL", c.id,
                c.name, o.detail.c_str(), seconds, c.budget_seconds,
                in_time ? "" : " (over budget)");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
