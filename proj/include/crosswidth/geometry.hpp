// Copyright 2026 crosswidth developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "crosswidth/quadrature.hpp"

namespace crosswidth {

/// A convex body given as the convex hull of a vertex list in R^dim.
///
/// Only the support function is used, so the vertex list need not be
/// minimal. Coordinates are stored row-major, one vertex per row.
class Polytope {
 public:
  /// Throws DomainError unless dim >= 1, there are at least dim + 1 vertices
  /// and every coordinate is finite.
  Polytope(std::size_t dim, std::vector<double> coordinates);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t vertex_count() const noexcept { return coordinates_.size() / dim_; }
  std::span<const double> vertex(std::size_t i) const;
  std::span<const double> coordinates() const noexcept { return coordinates_; }

 private:
  std::size_t dim_;
  std::vector<double> coordinates_;
};

/// Regular cross-polytope with unit edges: vertices ±e_i / sqrt 2.
Polytope crosspolytope(std::size_t n);

/// Axis-aligned cube with unit edges centred at the origin.
Polytope hypercube(std::size_t n);

/// max over vertices v of <v, u / |u|>. Throws DomainError for u = 0 or a
/// dimension mismatch.
double support(const Polytope& p, std::span<const double> u);

/// Distance between the two supporting hyperplanes orthogonal to u.
double width_in_direction(const Polytope& p, std::span<const double> u);

/// Width of the unit-edge cross-polytope in direction u: sqrt 2 max|u_i| / |u|.
double crosspolytope_width(std::span<const double> u);

/// Distance from the origin to the affine hull of dim vertices of p.
double facet_distance(const Polytope& p, std::span<const std::size_t> vertex_indices);

/// Inradius of the unit-edge cross-polytope, as the minimum facet distance
/// over its 2^n facets (one vertex from each antipodal pair). n <= 24.
double crosspolytope_inradius(std::size_t n);

/// Mean width E(w_n) from the closed forms, n = 2..6.
double mean_width_exact(unsigned n);
/// Mean square width E(w_n^2) from the closed forms, n = 2..5.
double mean_square_width_exact(unsigned n);

/// Gamma(n/2)/Gamma((n+1)/2) * mu_n, with mu_n by quadrature. n >= 2.
QuadratureResult mean_width_via_gamma_relation(unsigned n, Tolerance tol = {});

/// (2 sqrt2 n (n-1) / pi) Gamma(n/2)/Gamma((n+1)/2) ∫ exp(-2x^2) erf(x)^(n-2) dx. n >= 2.
QuadratureResult mean_width_via_direct_integral(unsigned n, Tolerance tol = {});

}  // namespace crosswidth
