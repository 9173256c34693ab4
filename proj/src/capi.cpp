// Copyright 2026 crosswidth developers
// SPDX-License-Identifier: Apache-2.0
#include "crosswidth/crosswidth.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "crosswidth/asymptotics.hpp"
#include "crosswidth/geometry.hpp"
#include "crosswidth/monte_carlo.hpp"
#include "crosswidth/order_statistics.hpp"
#include "crosswidth/verify.hpp"

struct cw_context {
  crosswidth::Tolerance tol;
  crosswidth::McOptions mc;
  double s2_perturbation = 0.0;
};

struct cw_polytope {
  crosswidth::Polytope body;
};

struct cw_report {
  crosswidth::Report report;
};

namespace {

thread_local std::string last_error;

cw_status fail(cw_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs body, mapping exceptions onto status codes.
template <typename Body>
cw_status guarded(Body&& body) noexcept {
  try {
    body();
    return CW_OK;
  } catch (const crosswidth::QuadratureError& e) {
    return fail(CW_ERROR_NO_CONVERGENCE, e.what());
  } catch (const crosswidth::DomainError& e) {
    return fail(CW_ERROR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CW_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CW_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(CW_ERROR_INTERNAL, "unknown error");
  }
}

const cw_context& context_or_default(const cw_context* ctx) {
  static const cw_context defaults{};
  return ctx ? *ctx : defaults;
}

cw_mc_estimate to_c(const crosswidth::McEstimate& e) {
  return {e.mean, e.std_error, e.samples, e.seed};
}

bool to_form(cw_constant_form form, crosswidth::ConstantForm& out) {
  switch (form) {
    case CW_FORM_DEFINING_INTEGRAL: out = crosswidth::ConstantForm::defining_integral; return true;
    case CW_FORM_REDUCED_INTEGRAL: out = crosswidth::ConstantForm::reduced_integral; return true;
    case CW_FORM_CLOSED: out = crosswidth::ConstantForm::closed_form; return true;
  }
  return false;
}

cw_status constant_result(const crosswidth::NamedConstant& c, cw_value* out) {
  *out = {c.value, c.error_estimate};
  return CW_OK;
}

}  // namespace

extern "C" {

const char* cw_version(void) { return "0.1.0"; }

const char* cw_status_string(cw_status status) {
  switch (status) {
    case CW_OK: return "ok";
    case CW_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case CW_ERROR_DOMAIN: return "domain error";
    case CW_ERROR_NO_CONVERGENCE: return "no convergence";
    case CW_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* cw_last_error(void) { return last_error.c_str(); }

cw_status cw_context_create(cw_context** out) {
  if (!out) return fail(CW_ERROR_INVALID_ARGUMENT, "out must not be NULL");
  return guarded([&] { *out = new cw_context{}; });
}

void cw_context_destroy(cw_context* ctx) { delete ctx; }

cw_status cw_context_set_tolerance(cw_context* ctx, double absolute, double relative) {
  if (!ctx) return fail(CW_ERROR_INVALID_ARGUMENT, "context must not be NULL");
  return guarded([&] {
    const crosswidth::Tolerance tol{absolute, relative};
    tol.validate();
    ctx->tol = tol;
  });
}

cw_status cw_context_set_threads(cw_context* ctx, unsigned threads) {
  if (!ctx) return fail(CW_ERROR_INVALID_ARGUMENT, "context must not be NULL");
  ctx->mc.threads = threads;
  return CW_OK;
}

cw_status cw_context_set_chunk_size(cw_context* ctx, uint64_t chunk_size) {
  if (!ctx) return fail(CW_ERROR_INVALID_ARGUMENT, "context must not be NULL");
  if (chunk_size == 0) return fail(CW_ERROR_DOMAIN, "chunk size must be >= 1");
  ctx->mc.chunk_size = chunk_size;
  return CW_OK;
}

cw_status cw_context_set_s2_perturbation(cw_context* ctx, double delta) {
  if (!ctx) return fail(CW_ERROR_INVALID_ARGUMENT, "context must not be NULL");
  ctx->s2_perturbation = delta;
  return CW_OK;
}

cw_status cw_moment_compute(const cw_context* ctx, unsigned n, int order, cw_method method,
                            cw_moment* out) {
  if (!out) return fail(CW_ERROR_INVALID_ARGUMENT, "out must not be NULL");
  if (order != 1 && order != 2) return fail(CW_ERROR_INVALID_ARGUMENT, "order must be 1 or 2");
  const cw_context& c = context_or_default(ctx);
  return guarded([&] {
    crosswidth::MomentEstimate m;
    switch (method) {
      case CW_METHOD_CLOSED_FORM:
        m = order == 1 ? crosswidth::mu_closed_form(n) : crosswidth::nu_closed_form(n);
        break;
      case CW_METHOD_QUADRATURE:
        m = order == 1 ? crosswidth::mu_quadrature(n, c.tol) : crosswidth::nu_quadrature(n, c.tol);
        break;
      default:
        throw crosswidth::DomainError(
            "cw_moment_compute supports closed form and quadrature; use cw_moment_monte_carlo");
    }
    *out = {m.n, m.order, m.value, m.error_estimate,
            m.method == crosswidth::MomentMethod::closed_form ? CW_METHOD_CLOSED_FORM
                                                              : CW_METHOD_QUADRATURE};
  });
}

cw_status cw_moment_monte_carlo(const cw_context* ctx, unsigned n, uint64_t samples, uint64_t seed,
                                cw_mc_estimate* mu, cw_mc_estimate* nu) {
  if (!mu || !nu) return fail(CW_ERROR_INVALID_ARGUMENT, "outputs must not be NULL");
  const cw_context& c = context_or_default(ctx);
  return guarded([&] {
    const crosswidth::MomentPair p = crosswidth::mc_half_normal_max(n, samples, seed, c.mc);
    *mu = to_c(p.first);
    *nu = to_c(p.second);
  });
}

cw_status cw_constant_s(const cw_context* ctx, unsigned k, cw_constant_form form, cw_value* out) {
  crosswidth::ConstantForm f;
  if (!out) return fail(CW_ERROR_INVALID_ARGUMENT, "out must not be NULL");
  if (!to_form(form, f)) return fail(CW_ERROR_INVALID_ARGUMENT, "unknown constant form");
  const cw_context& c = context_or_default(ctx);
  return guarded([&] { constant_result(crosswidth::constant_S(k, f, c.tol), out); });
}

cw_status cw_constant_t2(const cw_context* ctx, cw_constant_form form, cw_value* out) {
  crosswidth::ConstantForm f;
  if (!out) return fail(CW_ERROR_INVALID_ARGUMENT, "out must not be NULL");
  if (!to_form(form, f)) return fail(CW_ERROR_INVALID_ARGUMENT, "unknown constant form");
  const cw_context& c = context_or_default(ctx);
  return guarded([&] { constant_result(crosswidth::constant_T2(f, c.tol), out); });
}

cw_status cw_constant_t1_prime(const cw_context* ctx, cw_constant_form form, cw_value* out) {
  crosswidth::ConstantForm f;
  if (!out) return fail(CW_ERROR_INVALID_ARGUMENT, "out must not be NULL");
  if (!to_form(form, f)) return fail(CW_ERROR_INVALID_ARGUMENT, "unknown constant form");
  const cw_context& c = context_or_default(ctx);
  return guarded([&] { constant_result(crosswidth::constant_T1_prime(f, c.tol), out); });
}

cw_status cw_mean_width(const cw_context* ctx, unsigned n, cw_width_route route, cw_value* out) {
  if (!out) return fail(CW_ERROR_INVALID_ARGUMENT, "out must not be NULL");
  const cw_context& c = context_or_default(ctx);
  switch (route) {
    case CW_WIDTH_EXACT:
      return guarded([&] {
        const double v = crosswidth::mean_width_exact(n);
        *out = {v, 0.0};
      });
    case CW_WIDTH_GAMMA_RELATION:
      return guarded([&] {
        const auto r = crosswidth::mean_width_via_gamma_relation(n, c.tol);
        *out = {r.value, r.error_estimate};
      });
    case CW_WIDTH_DIRECT_INTEGRAL:
      return guarded([&] {
        const auto r = crosswidth::mean_width_via_direct_integral(n, c.tol);
        *out = {r.value, r.error_estimate};
      });
  }
  return fail(CW_ERROR_INVALID_ARGUMENT, "unknown width route");
}

cw_status cw_mean_square_width_exact(const cw_context*, unsigned n, cw_value* out) {
  if (!out) return fail(CW_ERROR_INVALID_ARGUMENT, "out must not be NULL");
  return guarded([&] { *out = {crosswidth::mean_square_width_exact(n), 0.0}; });
}

cw_status cw_mean_square_width_conjectured(const cw_context* ctx, unsigned n, cw_value* out) {
  if (!out) return fail(CW_ERROR_INVALID_ARGUMENT, "out must not be NULL");
  const cw_context& c = context_or_default(ctx);
  return guarded([&] {
    if (n < 2) throw crosswidth::DomainError("mean square width requires n >= 2");
    const crosswidth::MomentEstimate nu = crosswidth::nu_quadrature(n, c.tol);
    const double scale = 2.0 / static_cast<double>(n);
    *out = {scale * nu.value, scale * nu.error_estimate};
  });
}

cw_status cw_width_monte_carlo(const cw_context* ctx, unsigned n, uint64_t samples, uint64_t seed,
                               cw_mc_estimate* mean_width, cw_mc_estimate* mean_square_width) {
  if (!mean_width || !mean_square_width) {
    return fail(CW_ERROR_INVALID_ARGUMENT, "outputs must not be NULL");
  }
  const cw_context& c = context_or_default(ctx);
  return guarded([&] {
    const crosswidth::MomentPair p = crosswidth::mc_mean_width(n, samples, seed, c.mc);
    *mean_width = to_c(p.first);
    *mean_square_width = to_c(p.second);
  });
}

cw_status cw_conjecture_check(const cw_context* ctx, unsigned n, uint64_t samples, uint64_t seed,
                              double* reference, cw_mc_estimate* estimate, double* z_score,
                              int* beyond_range) {
  if (!reference || !estimate || !z_score || !beyond_range) {
    return fail(CW_ERROR_INVALID_ARGUMENT, "outputs must not be NULL");
  }
  const cw_context& c = context_or_default(ctx);
  return guarded([&] {
    const auto r = crosswidth::verify_conjecture(n, samples, seed, c.mc, c.tol);
    *reference = r.reference;
    *estimate = to_c(r.estimate);
    *z_score = r.z_score;
    *beyond_range = r.beyond_confirmed_range ? 1 : 0;
  });
}

cw_status cw_polytope_create(unsigned dim, size_t vertex_count, const double* coordinates,
                             cw_polytope** out) {
  if (!out || (!coordinates && vertex_count > 0)) {
    return fail(CW_ERROR_INVALID_ARGUMENT, "pointers must not be NULL");
  }
  return guarded([&] {
    std::vector<double> coords(coordinates, coordinates + vertex_count * dim);
    *out = new cw_polytope{crosswidth::Polytope(dim, std::move(coords))};
  });
}

cw_status cw_polytope_crosspolytope(unsigned n, cw_polytope** out) {
  if (!out) return fail(CW_ERROR_INVALID_ARGUMENT, "out must not be NULL");
  return guarded([&] { *out = new cw_polytope{crosswidth::crosspolytope(n)}; });
}

void cw_polytope_destroy(cw_polytope* p) { delete p; }

unsigned cw_polytope_dim(const cw_polytope* p) {
  return p ? static_cast<unsigned>(p->body.dim()) : 0U;
}

size_t cw_polytope_vertex_count(const cw_polytope* p) { return p ? p->body.vertex_count() : 0U; }

cw_status cw_polytope_support(const cw_polytope* p, const double* direction, double* out) {
  if (!p || !direction || !out) return fail(CW_ERROR_INVALID_ARGUMENT, "pointers must not be NULL");
  return guarded([&] {
    *out = crosswidth::support(p->body, std::span<const double>(direction, p->body.dim()));
  });
}

cw_status cw_polytope_width(const cw_polytope* p, const double* direction, double* out) {
  if (!p || !direction || !out) return fail(CW_ERROR_INVALID_ARGUMENT, "pointers must not be NULL");
  return guarded([&] {
    *out = crosswidth::width_in_direction(p->body,
                                          std::span<const double>(direction, p->body.dim()));
  });
}

cw_status cw_crosspolytope_inradius(unsigned n, double* out) {
  if (!out) return fail(CW_ERROR_INVALID_ARGUMENT, "out must not be NULL");
  return guarded([&] { *out = crosswidth::crosspolytope_inradius(n); });
}

cw_status cw_asymptotics(uint64_t n, cw_asymptotic* out) {
  if (!out) return fail(CW_ERROR_INVALID_ARGUMENT, "out must not be NULL");
  return guarded([&] {
    const auto a = crosswidth::asymptotic_approximation(n);
    *out = {a.n, a.a_n, a.a_n_prime, a.mu_approx, a.mean_width_approx, a.adjusted_width_approx};
  });
}

cw_status cw_gumbel_moments(const cw_context* ctx, double* mass, double* first, double* second) {
  if (!mass || !first || !second) return fail(CW_ERROR_INVALID_ARGUMENT, "outputs must not be NULL");
  const cw_context& c = context_or_default(ctx);
  return guarded([&] {
    const auto r = crosswidth::gumbel_moment_check(c.tol);
    *mass = r.mass;
    *first = r.first_moment;
    *second = r.second_moment;
  });
}

cw_status cw_gumbel_sup_distance(const cw_context* ctx, uint64_t n, uint64_t samples, uint64_t seed,
                                 double* out) {
  if (!out) return fail(CW_ERROR_INVALID_ARGUMENT, "out must not be NULL");
  const cw_context& c = context_or_default(ctx);
  return guarded([&] {
    *out = crosswidth::gumbel_limit_convergence(n, samples, seed, c.mc).sup_distance;
  });
}

cw_status cw_verify(const cw_context* ctx, int full, uint64_t samples, uint64_t seed,
                    cw_report** out) {
  if (!out) return fail(CW_ERROR_INVALID_ARGUMENT, "out must not be NULL");
  const cw_context& c = context_or_default(ctx);
  return guarded([&] {
    crosswidth::VerifyOptions options;
    options.full = full != 0;
    options.samples = samples;
    options.seed = seed;
    options.mc = c.mc;
    options.tol = c.tol;
    options.s2_perturbation = c.s2_perturbation;
    *out = new cw_report{crosswidth::run_verification(options)};
  });
}

void cw_report_destroy(cw_report* report) { delete report; }

size_t cw_report_size(const cw_report* report) { return report ? report->report.checks.size() : 0U; }

cw_status cw_report_get(const cw_report* report, size_t index, cw_check* out) {
  if (!report || !out) return fail(CW_ERROR_INVALID_ARGUMENT, "pointers must not be NULL");
  if (index >= report->report.checks.size()) return fail(CW_ERROR_DOMAIN, "check index out of range");
  const crosswidth::Check& c = report->report.checks[index];
  *out = {c.name.c_str(), c.expected, c.actual, c.tolerance, c.passed ? 1 : 0, c.note.c_str()};
  return CW_OK;
}

int cw_report_passed(const cw_report* report) {
  return report && report->report.all_passed() ? 1 : 0;
}

}  // extern "C"
