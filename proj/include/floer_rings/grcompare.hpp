// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "floer_rings/floer.hpp"
#include "floer_rings/sympow.hpp"

namespace fr {

struct GrSliceData {
  int dim = 0;
  /// Nilpotency index of the cyclic operator on the slice.
  int nilpotency = 0;
  bool cyclic = false;

  friend bool operator==(const GrSliceData&, const GrSliceData&) = default;
};

/// Gr of one Lambda^k_0 block: slices i = 0, 1, ... of the filtration by
/// gamma (Floer side) or theta (symmetric product side).
struct GrBlock {
  int k = 0;
  /// dim Lambda^k_0.
  int multiplicity = 0;
  std::vector<GrSliceData> slices;

  friend bool operator==(const GrBlock&, const GrBlock&) = default;
};

struct GradedProfile {
  std::string source;
  int genus = 0;
  std::vector<GrBlock> blocks;

  /// sum over blocks of multiplicity * sum of slice dims.
  int total_dim() const;
  Json to_json() const;
};

/// Gr_gamma of H_r with the beta-bar action; atlas at t = 0.
GradedProfile profile_floer(const ArtinianAtlas& atlas, int r);
/// Gr_theta of the eta-theta submodules generated by psi_1...psi_k, k <= d.
GradedProfile profile_sympow(const SymmetricProductRing& s);

/// Equal as block data (ignores the source label).
bool same_profile(const GradedProfile& a, const GradedProfile& b);

/// grcompare.match for one r, with both profiles in the data.
CheckResult compare_profiles(const GradedProfile& floer, const GradedProfile& sympow, int r);
/// grcompare.formula: slices are cyclic with index [(n - k - i - 1)/2] + 1,
/// n = g - |r| (Floer) or d + 1 (symmetric product).
CheckResult check_profile_formula(const GradedProfile& p, int n, const std::string& label);

/// Floer and symmetric-product profiles for every r, each side built
/// independently.
std::vector<CheckResult> verify_hom_symm(const ArtinianAtlas& atlas);

}  // namespace fr
