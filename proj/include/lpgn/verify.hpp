#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lpgn/exponent.hpp"
#include "lpgn/pnorm.hpp"

namespace lpgn::verify {

struct SuiteConfig {
  std::size_t n = 4;  ///< group order for the random-element suites
  int trials = 20;
  std::uint64_t seed = 0;
  std::vector<Exponent> grid;  ///< exponent grid for gamma; empty = 1, 1.25, …, 2
  NormBudget budget;
};

struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;  ///< first few failure descriptions

  void record(bool ok, const std::string& what);
};

/// shift, duality, gamma, logconvex, isometry, toeplitz, antipodal.
const std::vector<std::string>& suite_names();

/// Throws ValidationError for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace lpgn::verify
