// Copyright 2026 crosswidth developers
// SPDX-License-Identifier: Apache-2.0
#include "crosswidth/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "crosswidth/order_statistics.hpp"
#include "crosswidth/special_functions.hpp"

namespace crosswidth {

Polytope::Polytope(std::size_t dim, std::vector<double> coordinates)
    : dim_(dim), coordinates_(std::move(coordinates)) {
  if (dim_ == 0) throw DomainError("polytope dimension must be >= 1");
  if (coordinates_.size() % dim_ != 0) {
    throw DomainError("coordinate count is not a multiple of the dimension");
  }
  if (vertex_count() < dim_ + 1) {
    throw DomainError("polytope in R^" + std::to_string(dim_) + " needs at least " +
                      std::to_string(dim_ + 1) + " vertices");
  }
  for (double c : coordinates_) {
    if (!std::isfinite(c)) throw DomainError("polytope coordinates must be finite");
  }
}

std::span<const double> Polytope::vertex(std::size_t i) const {
  if (i >= vertex_count()) throw DomainError("vertex index out of range");
  return std::span<const double>(coordinates_).subspan(i * dim_, dim_);
}

Polytope crosspolytope(std::size_t n) {
  if (n == 0) throw DomainError("crosspolytope dimension must be >= 1");
  const double h = 1.0 / sqrt2;
  std::vector<double> coords(2 * n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    coords[(2 * i) * n + i] = h;
    coords[(2 * i + 1) * n + i] = -h;
  }
  return Polytope(n, std::move(coords));
}

Polytope hypercube(std::size_t n) {
  if (n == 0 || n > 20) throw DomainError("hypercube dimension must be in 1..20");
  const std::size_t count = std::size_t{1} << n;
  std::vector<double> coords(count * n);
  for (std::size_t v = 0; v < count; ++v) {
    for (std::size_t i = 0; i < n; ++i) coords[v * n + i] = ((v >> i) & 1U) ? 0.5 : -0.5;
  }
  return Polytope(n, std::move(coords));
}

namespace {

double norm_of(std::span<const double> u) {
  double s = 0.0;
  for (double x : u) s += x * x;
  return std::sqrt(s);
}

double checked_norm(std::span<const double> u) {
  const double norm = norm_of(u);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw DomainError("direction must be a finite nonzero vector");
  }
  return norm;
}

double support_unnormalized(const Polytope& p, std::span<const double> u, double sign) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t v = 0; v < p.vertex_count(); ++v) {
    const auto vert = p.vertex(v);
    double dot = 0.0;
    for (std::size_t i = 0; i < p.dim(); ++i) dot += vert[i] * u[i];
    best = std::max(best, sign * dot);
  }
  return best;
}

}  // namespace

double support(const Polytope& p, std::span<const double> u) {
  if (u.size() != p.dim()) throw DomainError("direction dimension does not match polytope");
  const double norm = checked_norm(u);
  return support_unnormalized(p, u, 1.0) / norm;
}

double width_in_direction(const Polytope& p, std::span<const double> u) {
  if (u.size() != p.dim()) throw DomainError("direction dimension does not match polytope");
  const double norm = checked_norm(u);
  return (support_unnormalized(p, u, 1.0) + support_unnormalized(p, u, -1.0)) / norm;
}

double crosspolytope_width(std::span<const double> u) {
  const double norm = checked_norm(u);
  double m = 0.0;
  for (double x : u) m = std::max(m, std::abs(x));
  return sqrt2 * m / norm;
}

double facet_distance(const Polytope& p, std::span<const std::size_t> vertex_indices) {
  const std::size_t n = p.dim();
  if (vertex_indices.size() != n) {
    throw DomainError("a facet of a polytope in R^n is spanned by n vertices");
  }
  // The hyperplane {x : <a, x> = 1} through the vertices solves V a = 1;
  // its distance from the origin is 1 / |a|.
  std::vector<double> m(n * (n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    const auto v = p.vertex(vertex_indices[r]);
    std::copy(v.begin(), v.end(), m.begin() + static_cast<std::ptrdiff_t>(r * (n + 1)));
    m[r * (n + 1) + n] = 1.0;
  }
  auto at = [&](std::size_t r, std::size_t c) -> double& { return m[r * (n + 1) + c]; };
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(at(r, col)) > std::abs(at(pivot, col))) pivot = r;
    }
    if (std::abs(at(pivot, col)) < 1e-300) {
      throw DomainError("facet vertices are affinely dependent with the origin");
    }
    if (pivot != col) {
      for (std::size_t c = 0; c <= n; ++c) std::swap(at(col, c), at(pivot, c));
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double factor = at(r, col) / at(col, col);
      if (factor == 0.0) continue;
      for (std::size_t c = col; c <= n; ++c) at(r, c) -= factor * at(col, c);
    }
  }
  double norm2 = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    const double a = at(r, n) / at(r, r);
    norm2 += a * a;
  }
  return 1.0 / std::sqrt(norm2);
}

double crosspolytope_inradius(std::size_t n) {
  if (n == 0 || n > 24) throw DomainError("crosspolytope_inradius supports n = 1..24");
  const Polytope p = crosspolytope(n);
  std::vector<std::size_t> facet(n);
  double best = std::numeric_limits<double>::infinity();
  const std::size_t count = std::size_t{1} << n;
  for (std::size_t signs = 0; signs < count; ++signs) {
    for (std::size_t i = 0; i < n; ++i) facet[i] = 2 * i + ((signs >> i) & 1U);
    best = std::min(best, facet_distance(p, facet));
  }
  return best;
}

double mean_width_exact(unsigned n) {
  const ClosedFormConstants& c = ClosedFormConstants::reference();
  switch (n) {
    case 2: return 4.0 / pi;
    case 3: return 6.0 * c.s2;
    case 4: return 16.0 / pi * (1.0 - 4.0 * c.s2);
    case 5: return 15.0 / 8.0 * (-sqrt2 + 8.0 * c.s2 + 16.0 * sqrt2 * c.t1_prime);
    case 6: return 32.0 / pi * (1.0 - 8.0 * c.s2 + 16.0 * c.t2);
    default:
      throw DomainError("exact mean width is available for n = 2..6 only, got n = " +
                        std::to_string(n));
  }
}

double mean_square_width_exact(unsigned n) {
  const ClosedFormConstants& c = ClosedFormConstants::reference();
  switch (n) {
    case 2: return 1.0 + 2.0 / pi;
    case 3: return 2.0 / 3.0 * (1.0 + 2.0 * sqrt3 / pi);
    case 4: return 0.5 * (1.0 + 8.0 * sqrt3 / (3.0 * pi));
    case 5: return 0.4 * (1.0 + 20.0 * sqrt3 / pi * (1.0 - 4.0 * c.s3));
    default:
      throw DomainError("exact mean square width is available for n = 2..5 only, got n = " +
                        std::to_string(n));
  }
}

QuadratureResult mean_width_via_gamma_relation(unsigned n, Tolerance tol) {
  if (n < 2) throw DomainError("mean width routes require n >= 2");
  const double ratio = gamma_half_ratio(n);
  const MomentEstimate mu = mu_quadrature(n, tol);
  return {ratio * mu.value, ratio * mu.error_estimate, 0, 0};
}

QuadratureResult mean_width_via_direct_integral(unsigned n, Tolerance tol) {
  if (n < 2) throw DomainError("mean width routes require n >= 2");
  const unsigned power = n - 2;
  QuadratureResult r = integrate_semi_infinite(
      [power](double x) {
        const double e = std::erf(x);
        return std::exp(-2.0 * x * x) * (power == 0 ? 1.0 : std::pow(e, power));
      },
      tol);
  const double m = static_cast<double>(n);
  const double scale = 2.0 * sqrt2 * m * (m - 1.0) / pi * gamma_half_ratio(n);
  r.value *= scale;
  r.error_estimate *= scale;
  return r;
}

}  // namespace crosswidth
