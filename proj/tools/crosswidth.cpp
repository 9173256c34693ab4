// Copyright 2026 crosswidth developers
// SPDX-License-Identifier: Apache-2.0
//
// crosswidth: command-line front end to libcrosswidth.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "crosswidth/crosswidth.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

struct Record {
  std::string quantity;
  std::uint64_t n = 0;
  std::string method;
  double value = 0.0;
  double error_estimate = 0.0;
  std::optional<std::uint64_t> seed;
  std::string note;  // text output only
};

struct Settings {
  std::string format = "text";
  std::string output;
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  std::uint64_t samples = 10'000'000;
  std::uint64_t seed = 20111202;
};

class Failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(cw_status s) {
  if (s != CW_OK) {
    throw Failure(std::string(cw_status_string(s)) + ": " + cw_last_error());
  }
}

class Context {
 public:
  explicit Context(const Settings& s) {
    check(cw_context_create(&ctx_));
    if (cw_status st = cw_context_set_tolerance(ctx_, s.abs_tol, s.rel_tol); st != CW_OK) {
      cw_context_destroy(ctx_);
      check(st);
    }
  }
  ~Context() { cw_context_destroy(ctx_); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  cw_context* get() const { return ctx_; }

 private:
  cw_context* ctx_ = nullptr;
};

std::string number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.17g", v);
  return buf;
}

const char* method_name(cw_method m) {
  switch (m) {
    case CW_METHOD_CLOSED_FORM: return "closed_form";
    case CW_METHOD_QUADRATURE: return "quadrature";
    case CW_METHOD_MONTE_CARLO: return "monte_carlo";
  }
  return "unknown";
}

Record from_moment(const char* quantity, const cw_moment& m) {
  return {quantity, m.n, method_name(m.method), m.value, m.error_estimate, std::nullopt, ""};
}

Record from_mc(const char* quantity, std::uint64_t n, const cw_mc_estimate& e) {
  return {quantity, n, "monte_carlo", e.mean, e.std_error, e.seed, ""};
}

// Output ------------------------------------------------------------------

json to_json(const Record& r) {
  json j;
  j["quantity"] = r.quantity;
  j["n"] = r.n;
  j["method"] = r.method;
  j["value"] = r.value;
  j["error_estimate"] = r.error_estimate;
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

std::string render_records(const std::vector<Record>& records, const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    json arr = json::array();
    for (const Record& r : records) arr.push_back(to_json(r));
    out << arr.dump(2) << '\n';
  } else if (format == "csv") {
    out << "quantity,n,method,value,error_estimate,seed\n";
    for (const Record& r : records) {
      out << r.quantity << ',' << r.n << ',' << r.method << ',' << number(r.value) << ','
          << number(r.error_estimate) << ',';
      if (r.seed) out << *r.seed;
      out << '\n';
    }
  } else {
    char line[256];
    for (const Record& r : records) {
      std::snprintf(line, sizeof line, "%-28s n=%-10llu %-18s %s  +- %s", r.quantity.c_str(),
                    static_cast<unsigned long long>(r.n), r.method.c_str(),
                    number(r.value).c_str(), number(r.error_estimate).c_str());
      out << line;
      if (r.seed) out << "  seed=" << *r.seed;
      if (!r.note.empty()) out << "  (" << r.note << ')';
      out << '\n';
    }
  }
  return out.str();
}

void emit(const std::string& text, const Settings& s) {
  if (s.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(s.output, std::ios::binary);
  if (!f) throw Failure("cannot open output file " + s.output);
  f << text;
  if (!f) throw Failure("failed writing " + s.output);
}

// Commands ----------------------------------------------------------------

struct TableRow {
  unsigned n;
  Record mu, nu, width, square;
};

std::vector<TableRow> build_table(const Context& ctx, unsigned n_max) {
  std::vector<TableRow> rows;
  for (unsigned n = 2; n <= n_max; ++n) {
    TableRow row{n, {}, {}, {}, {}};
    cw_moment m{};
    check(cw_moment_compute(ctx.get(), n, 1, n <= 6 ? CW_METHOD_CLOSED_FORM : CW_METHOD_QUADRATURE,
                            &m));
    row.mu = from_moment("mu_n", m);
    if (n > 6) row.mu.note = "no closed form";
    check(cw_moment_compute(ctx.get(), n, 2, n <= 5 ? CW_METHOD_CLOSED_FORM : CW_METHOD_QUADRATURE,
                            &m));
    row.nu = from_moment("nu_n", m);
    if (n > 5) row.nu.note = "no closed form";

    cw_value v{};
    if (n <= 6) {
      check(cw_mean_width(ctx.get(), n, CW_WIDTH_EXACT, &v));
      row.width = {"mean_width", n, "exact", v.value, v.error_estimate, std::nullopt, ""};
    } else {
      check(cw_mean_width(ctx.get(), n, CW_WIDTH_GAMMA_RELATION, &v));
      row.width = {"mean_width", n, "gamma_relation", v.value, v.error_estimate, std::nullopt,
                   "no closed form"};
    }
    if (n <= 5) {
      check(cw_mean_square_width_exact(ctx.get(), n, &v));
      row.square = {"mean_square_width", n, "exact", v.value, v.error_estimate, std::nullopt, ""};
    } else {
      check(cw_mean_square_width_conjectured(ctx.get(), n, &v));
      row.square = {"mean_square_width", n, "conjectured", v.value, v.error_estimate,
                    std::nullopt, "(2/n) nu_n, no closed form"};
    }
    rows.push_back(row);
  }
  return rows;
}

std::string render_table_text(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  auto cell = [](const Record& r) {
    std::string s = number(r.value) + " [" + r.method;
    if (!r.note.empty()) s += ", " + r.note;
    return s + "]";
  };
  out << "n  mu_n | nu_n | E(w_n) | E(w_n^2)\n";
  for (const TableRow& row : rows) {
    out << row.n << "  " << cell(row.mu) << " | " << cell(row.nu) << " | " << cell(row.width)
        << " | " << cell(row.square) << '\n';
  }
  return out.str();
}

int cmd_table(const Settings& s, unsigned n_max) {
  const Context ctx(s);
  const auto rows = build_table(ctx, n_max);
  if (s.format == "text") {
    emit(render_table_text(rows), s);
  } else {
    std::vector<Record> flat;
    for (const TableRow& r : rows) {
      flat.push_back(r.mu);
      flat.push_back(r.nu);
      flat.push_back(r.width);
      flat.push_back(r.square);
    }
    emit(render_records(flat, s.format), s);
  }
  return 0;
}

int cmd_moments(const Settings& s, unsigned n, const std::string& method) {
  const Context ctx(s);
  std::vector<Record> out;
  if (method == "mc") {
    cw_mc_estimate mu{}, nu{};
    check(cw_moment_monte_carlo(ctx.get(), n, s.samples, s.seed, &mu, &nu));
    out.push_back(from_mc("mu_n", n, mu));
    out.push_back(from_mc("nu_n", n, nu));
  } else {
    const cw_method m = method == "closed" ? CW_METHOD_CLOSED_FORM : CW_METHOD_QUADRATURE;
    cw_moment mu{}, nu{};
    check(cw_moment_compute(ctx.get(), n, 1, m, &mu));
    check(cw_moment_compute(ctx.get(), n, 2, m, &nu));
    out.push_back(from_moment("mu_n", mu));
    out.push_back(from_moment("nu_n", nu));
  }
  emit(render_records(out, s.format), s);
  return 0;
}

int cmd_width(const Settings& s, unsigned n, const std::string& method) {
  const Context ctx(s);
  std::vector<Record> out;
  cw_value v{};
  if (method == "mc") {
    cw_mc_estimate w{}, w2{};
    check(cw_width_monte_carlo(ctx.get(), n, s.samples, s.seed, &w, &w2));
    out.push_back(from_mc("mean_width", n, w));
    out.push_back(from_mc("mean_square_width", n, w2));
  } else if (method == "exact") {
    check(cw_mean_width(ctx.get(), n, CW_WIDTH_EXACT, &v));
    out.push_back({"mean_width", n, "exact", v.value, v.error_estimate, std::nullopt, ""});
    if (n <= 5) {
      check(cw_mean_square_width_exact(ctx.get(), n, &v));
      out.push_back({"mean_square_width", n, "exact", v.value, v.error_estimate, std::nullopt,
                     ""});
    }
  } else {
    const bool gamma = method == "gamma";
    check(cw_mean_width(ctx.get(), n, gamma ? CW_WIDTH_GAMMA_RELATION : CW_WIDTH_DIRECT_INTEGRAL,
                        &v));
    out.push_back({"mean_width", n, gamma ? "gamma_relation" : "direct_integral", v.value,
                   v.error_estimate, std::nullopt, ""});
    check(cw_mean_square_width_conjectured(ctx.get(), n, &v));
    out.push_back({"mean_square_width", n, "conjectured", v.value, v.error_estimate,
                   std::nullopt, "(2/n) nu_n"});
  }
  emit(render_records(out, s.format), s);
  return 0;
}

int cmd_constants(const Settings& s, unsigned k_max) {
  const Context ctx(s);
  std::vector<Record> out;
  cw_value v{};
  for (unsigned k = 1; k <= k_max; ++k) {
    check(cw_constant_s(ctx.get(), k, CW_FORM_CLOSED, &v));
    out.push_back({"S_k", k, "closed_form", v.value, v.error_estimate, std::nullopt, ""});
    check(cw_constant_s(ctx.get(), k, CW_FORM_DEFINING_INTEGRAL, &v));
    out.push_back({"S_k", k, "defining_integral", v.value, v.error_estimate, std::nullopt, ""});
  }
  check(cw_constant_t2(ctx.get(), CW_FORM_DEFINING_INTEGRAL, &v));
  out.push_back({"T_2", 0, "defining_integral", v.value, v.error_estimate, std::nullopt, ""});
  check(cw_constant_t2(ctx.get(), CW_FORM_REDUCED_INTEGRAL, &v));
  out.push_back({"T_2", 0, "reduced_integral", v.value, v.error_estimate, std::nullopt, ""});
  check(cw_constant_t1_prime(ctx.get(), CW_FORM_DEFINING_INTEGRAL, &v));
  out.push_back({"T_1_prime", 0, "defining_integral", v.value, v.error_estimate, std::nullopt,
                 ""});
  check(cw_constant_t1_prime(ctx.get(), CW_FORM_REDUCED_INTEGRAL, &v));
  out.push_back({"T_1_prime", 0, "reduced_integral", v.value, v.error_estimate, std::nullopt,
                 ""});
  emit(render_records(out, s.format), s);
  return 0;
}

int cmd_mc(const Settings& s, unsigned n) {
  const Context ctx(s);
  std::vector<Record> out;
  cw_mc_estimate w{}, w2{}, mu{}, nu{};
  check(cw_width_monte_carlo(ctx.get(), n, s.samples, s.seed, &w, &w2));
  check(cw_moment_monte_carlo(ctx.get(), n, s.samples, s.seed, &mu, &nu));
  out.push_back(from_mc("mean_width", n, w));
  out.push_back(from_mc("mean_square_width", n, w2));
  out.push_back(from_mc("mu_n", n, mu));
  out.push_back(from_mc("nu_n", n, nu));
  cw_value ref{};
  check(cw_mean_square_width_conjectured(ctx.get(), n, &ref));
  Record conj{"mean_square_width", n, "conjectured", ref.value, ref.error_estimate, std::nullopt,
              ""};
  char z[64];
  std::snprintf(z, sizeof z, "z = %.3f", (w2.mean - ref.value) / w2.std_error);
  conj.note = z;
  out.push_back(conj);
  emit(render_records(out, s.format), s);
  return 0;
}

int cmd_asymptotics(const Settings& s, std::uint64_t n) {
  const Context ctx(s);
  cw_asymptotic a{};
  check(cw_asymptotics(n, &a));
  std::vector<Record> out = {
      {"a_n", n, "asymptotic", a.a_n, 0.0, std::nullopt, ""},
      {"a_n_prime", n, "asymptotic", a.a_n_prime, 0.0, std::nullopt, ""},
      {"mu_n", n, "asymptotic", a.mu_approx, 0.0, std::nullopt, ""},
      {"mean_width", n, "asymptotic", a.mean_width_approx, 0.0, std::nullopt, ""},
      {"adjusted_mean_width", n, "asymptotic", a.adjusted_width_approx, 0.0, std::nullopt,
       "rescaled to unit inradius"},
  };
  if (n <= 0xffffffffULL) {
    cw_moment m{};
    check(cw_moment_compute(ctx.get(), static_cast<unsigned>(n), 1, CW_METHOD_QUADRATURE, &m));
    out.push_back(from_moment("mu_n", m));
    cw_value v{};
    check(cw_mean_width(ctx.get(), static_cast<unsigned>(n), CW_WIDTH_GAMMA_RELATION, &v));
    out.push_back({"mean_width", n, "gamma_relation", v.value, v.error_estimate, std::nullopt, ""});
  }
  emit(render_records(out, s.format), s);
  return 0;
}

class Report {
 public:
  explicit Report(cw_report* r) : r_(r) {}
  ~Report() { cw_report_destroy(r_); }
  Report(const Report&) = delete;
  Report& operator=(const Report&) = delete;
  cw_report* get() const { return r_; }

 private:
  cw_report* r_;
};

int cmd_verify(const Settings& s, bool full, double perturb) {
  const Context ctx(s);
  if (perturb != 0.0) check(cw_context_set_s2_perturbation(ctx.get(), perturb));
  cw_report* raw = nullptr;
  check(cw_verify(ctx.get(), full ? 1 : 0, s.samples, s.seed, &raw));
  const Report report(raw);

  std::vector<cw_check> checks(cw_report_size(report.get()));
  for (std::size_t i = 0; i < checks.size(); ++i) check(cw_report_get(report.get(), i, &checks[i]));
  const bool passed = cw_report_passed(report.get()) != 0;
  std::size_t failures = 0;
  for (const cw_check& c : checks) failures += c.passed ? 0 : 1;

  std::ostringstream out;
  if (s.format == "json") {
    json arr = json::array();
    for (const cw_check& c : checks) {
      arr.push_back({{"name", c.name},
                     {"expected", c.expected},
                     {"actual", c.actual},
                     {"tolerance", c.tolerance},
                     {"passed", c.passed != 0},
                     {"note", c.note}});
    }
    json doc = {{"level", full ? "full" : "fast"},
                {"seed", s.seed},
                {"passed", passed},
                {"failures", failures},
                {"checks", arr}};
    out << doc.dump(2) << '\n';
  } else if (s.format == "csv") {
    out << "name,expected,actual,tolerance,passed\n";
    for (const cw_check& c : checks) {
      out << c.name << ',' << number(c.expected) << ',' << number(c.actual) << ','
          << number(c.tolerance) << ',' << (c.passed ? 1 : 0) << '\n';
    }
  } else {
    for (const cw_check& c : checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << "  expected " << number(c.expected)
          << "  actual " << number(c.actual) << "  tolerance " << number(c.tolerance);
      if (c.note && *c.note) out << "  (" << c.note << ')';
      out << '\n';
    }
    out << checks.size() - failures << '/' << checks.size() << " checks passed\n";
  }
  emit(out.str(), s);
  if (!passed && s.format != "text") {
    for (const cw_check& c : checks) {
      if (!c.passed) std::cerr << "FAIL " << c.name << " (" << c.note << ")\n";
    }
  }
  return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mean width of regular cross-polytopes and half-normal maximum moments"};
  app.set_version_flag("--version", std::string(cw_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output", s.output, "Write output to this file instead of stdout");
  app.add_option("--abs-tol", s.abs_tol, "Absolute quadrature tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--rel-tol", s.rel_tol, "Relative quadrature tolerance")
      ->check(CLI::NonNegativeNumber);

  auto add_sampling = [&s](CLI::App* sub) {
    sub->add_option("--samples", s.samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
    sub->add_option("--seed", s.seed, "Monte Carlo seed");
  };

  unsigned n_max = 6;
  auto* table = app.add_subcommand("table", "Moments and widths for n = 2..n-max");
  table->add_option("--n-max", n_max, "Largest dimension")->check(CLI::Range(2u, 1000u));

  unsigned n = 0;
  std::string moment_method = "quad";
  auto* moments = app.add_subcommand("moments", "mu_n and nu_n of the half-normal maximum");
  moments->add_option("--n", n, "Sample size")->required()->check(CLI::PositiveNumber);
  moments->add_option("--method", moment_method, "closed, quad or mc")
      ->check(CLI::IsMember({"closed", "quad", "mc"}));
  add_sampling(moments);

  std::string width_method = "exact";
  auto* width = app.add_subcommand("width", "Mean width and mean square width");
  width->add_option("--n", n, "Dimension")->required()->check(CLI::PositiveNumber);
  width->add_option("--method", width_method, "exact, gamma, integral or mc")
      ->check(CLI::IsMember({"exact", "gamma", "integral", "mc"}));
  add_sampling(width);

  unsigned k_max = 3;
  auto* constants = app.add_subcommand("constants", "S_1..S_k, T_2 and T_1'");
  constants->add_option("--k", k_max, "Largest k for S_k")->check(CLI::Range(1u, 1000u));

  auto* mc = app.add_subcommand("mc", "Monte Carlo widths and moments");
  mc->add_option("--n", n, "Dimension")->required()->check(CLI::PositiveNumber);
  add_sampling(mc);

  std::uint64_t big_n = 0;
  auto* asym = app.add_subcommand("asymptotics", "Large-n approximations");
  asym->add_option("--n", big_n, "Dimension, n >= 3")->required()->check(CLI::PositiveNumber);

  bool full = false;
  double perturb = 0.0;
  auto* verify = app.add_subcommand("verify", "Run the identity and cross-route checks");
  verify->add_flag("--full", full, "Add the Monte Carlo checks");
  verify->add_option("--perturb-s2", perturb, "Offset S_2 in the closed-form reconstructions");
  add_sampling(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*table) return cmd_table(s, n_max);
    if (*moments) return cmd_moments(s, n, moment_method);
    if (*width) return cmd_width(s, n, width_method);
    if (*constants) return cmd_constants(s, k_max);
    if (*mc) return cmd_mc(s, n);
    if (*asym) return cmd_asymptotics(s, big_n);
    if (*verify) return cmd_verify(s, full, perturb);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
