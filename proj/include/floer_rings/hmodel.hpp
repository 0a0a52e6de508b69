// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdlib>
#include <map>
#include <tuple>
#include <vector>

#include "floer_rings/floer.hpp"

namespace fr {

/// H_r = sum_k Lambda^k_0 (x) R_{g,k,r} at t = 0, realized as a cyclic
/// module over beta-bar and psi_1..psi_2g. The monomial beta-bar^a psi_T acts
/// on the generator by
///   psi_T = sum_i L^i w_i  ->  sum_i w_i (x) (-1/2)^i gamma^i beta-bar^a e_k,
/// with k = |T| - 2i and blocks k >= g - |r| absent.
class HrModel {
 public:
  struct Block {
    int k = 0;
    const FloerPiece* piece = nullptr;
    PieceCoordinates coords;
    int primitive_dim = 0;
    int rank = 0;
    int offset = 0;
  };

  HrModel(const ArtinianAtlas& atlas, int r);

  int genus() const noexcept { return genus_; }
  int r() const noexcept { return r_; }
  /// g - |r| - 1.
  int l() const noexcept { return genus_ - std::abs(r_) - 1; }
  int dim() const noexcept { return dim_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  /// Image of beta-bar^a psi_T applied to the generator.
  SparseVec image(int a, OddMask t) const;

 private:
  const ArtinianAtlas* atlas_;
  int genus_;
  int r_;
  int dim_ = 0;
  std::vector<Block> blocks_;
  std::map<int, std::size_t> block_of_k_;
  // (block, a, i) -> coordinates of gamma^i beta-bar^a e in the block basis.
  mutable std::map<std::tuple<std::size_t, int, int>, Vector> piece_cache_;
  mutable std::map<OddMask, std::vector<LefschetzCoordinates>> lefschetz_cache_;

  const Vector& piece_vector(std::size_t block, int a, int i) const;
};

/// Degree bounds on H_r for every r (t = 0 only):
///   bounds.piece_nilpotent  beta-bar^n gamma^m = 0 on R_{g,k,r} for n + m >= g - k - |r|
///   bounds.degree           monomials of degree > 2(g - |r| - 1) act as zero
///   bounds.betabar_power    beta-bar^{[(g-|r|-1)/2]+1} H_r lies in (psi_1..psi_2g) H_r
///   bounds.psi_ideal        degree l+1 monomials map H_r into (psi_1..psi_l) H_r
/// plus hr.cyclic: the monomial images span H_r.
std::vector<CheckResult> verify_quotient_bounds(const ArtinianAtlas& atlas);

}  // namespace fr
