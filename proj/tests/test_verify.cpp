// Copyright 2026 crosswidth developers
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>

#include "crosswidth/verify.hpp"

using namespace crosswidth;

TEST_CASE("fast verification passes") {
  const Report r = run_verification({});
  for (const Check& c : r.checks) {
    INFO(c.name << " expected " << c.expected << " actual " << c.actual << " " << c.note);
    CHECK(c.passed);
  }
  CHECK(r.all_passed());
  CHECK(r.failures() == 0);
  CHECK(r.checks.size() > 50);
}

TEST_CASE("verification is deterministic") {
  const Report a = run_verification({});
  const Report b = run_verification({});
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].actual == b.checks[i].actual);
  }
}

TEST_CASE("a perturbed S_2 is caught by the mu_6 reconstruction") {
  VerifyOptions opts;
  opts.s2_perturbation = 1e-6;
  const Report r = run_verification(opts);
  CHECK_FALSE(r.all_passed());
  const auto it = std::find_if(r.checks.begin(), r.checks.end(), [](const Check& c) {
    return c.name == "mu_closed_form_vs_quadrature_n6";
  });
  REQUIRE(it != r.checks.end());
  CHECK_FALSE(it->passed);
  CHECK(it->note.find("T_2") != std::string::npos);
}
