// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "floer_rings/report.hpp"

namespace fr {

struct SuiteOptions {
  int genus_max = 5;
  std::uint64_t seed = 1;
  /// Number of random perturbation profiles.
  int profiles = 20;
  /// Truncation order N of the perturbed series base.
  int order = 4;
  /// Symmetric products are checked up to min(genus_max, sympow_genus_max).
  int sympow_genus_max = 4;
};

/// rank, eigen, fin, gr, hom-symm, sympow, bounds, perturb, adjunct, all.
const std::vector<std::string>& suite_names();

/// Runs one suite. Results are ordered by (suite, genus, item) regardless of
/// thread scheduling. Throws InvalidArgument for an unknown suite name.
Report run_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace fr
