// Copyright 2026 crosswidth developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crosswidth/monte_carlo.hpp"
#include "crosswidth/quadrature.hpp"

namespace crosswidth {

struct Check {
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

struct Report {
  std::vector<Check> checks;

  bool all_passed() const;
  std::size_t failures() const;
};

struct VerifyOptions {
  bool full = false;  // adds the Monte Carlo checks
  std::uint64_t samples = 10'000'000;
  std::uint64_t seed = default_seed;
  McOptions mc;
  Tolerance tol;
  /// Added to S_2 inside the closed-form reconstructions. Mutation hook for
  /// testing that the suite notices a wrong constant; 0 in normal use.
  double s2_perturbation = 0.0;
};

/// Runs the identity and cross-route checks. Output is deterministic for
/// fixed options.
Report run_verification(const VerifyOptions& options);

}  // namespace crosswidth
