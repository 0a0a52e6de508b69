// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "floer_rings/quotient.hpp"
#include "floer_rings/report.hpp"
#include "floer_rings/split.hpp"

namespace fr {

/// Scalar perturbations f_ij in t*Q(i)[[t]] for the relation recursions.
/// Values are derived from the seed by hashing (seed, i, j, r, g, bar), so
/// no table is stored.
struct PerturbationProfile {
  /// Truncation order N of the series base; 0 means the plain t = 0 ring.
  int order = 0;
  bool random = false;
  std::uint64_t seed = 0;

  static PerturbationProfile unperturbed() { return {}; }
  /// Series base with every f_ij = 0.
  static PerturbationProfile zero_series(int order);
  static PerturbationProfile from_seed(std::uint64_t seed, int order);

  bool has_series() const noexcept { return order > 0; }
  /// f_ij (bar = false) or the two-variable f-bar_ij (bar = true) at step r.
  /// Coefficients of t^1..t^{N-1} are p/q with p in -2..2 and q in 1..3.
  TruncatedSeries f(int i, int j, int r, int g, bool bar) const;
  Json to_json() const;
};

/// `count` profiles whose seeds come from a SplitMix64 stream started at seed.
std::vector<PerturbationProfile> random_profiles(std::uint64_t seed, int count, int order);

/// alpha, beta, gamma (weight 1) and, for order > 0, t (weight 0, t^N = 0).
RingPtr floer_ring(int order);
/// alpha, beta and optionally t.
RingPtr floer_bar_ring(int order);

struct RelationTriple {
  SuperPolynomial r1, r2, r3;
};
struct RelationPair {
  SuperPolynomial r1, r2;
};

/// (R^1_r, R^2_r, R^3_r) for r = 0..up_to, over floer_ring(p.order).
std::vector<RelationTriple> build_relations(int g, int up_to, const PerturbationProfile& p);
/// (R-bar^1_r, R-bar^2_r) for r = 0..up_to, over floer_bar_ring(p.order).
std::vector<RelationPair> build_bar_relations(int g, int up_to, const PerturbationProfile& p);

/// T_{g,k} = ring / J_{g-k}.
QuotientAlgebra build_T(int g, int k, const PerturbationProfile& p);
/// T-bar_{g,k} = ring / J-bar_{g-k}.
QuotientAlgebra build_Tbar(int g, int k, const PerturbationProfile& p);

struct FloerRing {
  int genus = 0;
  PerturbationProfile profile;
  /// Indexed by k = 0..g-1.
  std::vector<QuotientAlgebra> t;
  std::vector<QuotientAlgebra> tbar;
  /// dim Lambda^k_0 for k = 0..g-1.
  std::vector<int> primitive_dims;
};

FloerRing build_floer(int g, const PerturbationProfile& p);

/// The (4r or 4ri, -+8) label of an eigenvalue pair at t = 0. Throws
/// EigenvalueCollision when (alpha, beta) does not fit the pattern.
int label_from_eigenvalues(const Scalar& alpha, const Scalar& beta);
/// beta-bar = beta + shift on the piece labelled r: shift = (-1)^{r+1} 8.
Scalar betabar_shift(int r);

struct FloerPiece {
  int k = 0;
  int r = 0;
  LocalPiece local;
  /// g - k - |r|.
  int gbar = 0;
};

struct ArtinianAtlas {
  std::shared_ptr<const FloerRing> ring;
  /// Pieces R_{g,k,r} of T_{g,k} and R-bar_{g,k,r} of T-bar_{g,k}, sorted by (k, r).
  std::vector<FloerPiece> pieces;
  std::vector<FloerPiece> bar_pieces;

  const FloerPiece* find(int k, int r, bool bar = false) const;
};

ArtinianAtlas split_atlas(std::shared_ptr<const FloerRing> ring);

/// Coordinates of a piece in the monomial basis beta-bar^i gamma^j e with
/// 2i + j < gbar (times t^s over a series base).
struct PieceCoordinates {
  /// (i, j) for each column block; over a series base column index is
  /// block * N + s.
  std::vector<std::pair<int, int>> monomials;
  Matrix basis;  // columns in T_{g,k} coordinates
  int order = 1;
  bool is_basis = false;

  /// Coordinates of v (which must lie in the piece); nullopt otherwise.
  std::optional<Vector> coordinates(const Vector& v) const;
};

PieceCoordinates piece_coordinates(const ArtinianAtlas& atlas, const FloerPiece& piece);

/// beta-bar^a gamma^i e in T_{g,k} coordinates.
Vector piece_monomial(const ArtinianAtlas& atlas, const FloerPiece& piece, int a, int i);

// ---------------------------------------------------------------------------
// Checks. Each returns one result per (g, k[, r]) item.

/// Free ranks C(g-k+2, 3) and C(g-k+1, 2) with the expected monomial bases.
std::vector<CheckResult> check_ranks(const FloerRing& f);
/// Eigenvalue constant terms of T-bar_{g,0} pieces.
std::vector<CheckResult> check_eigenvalues(const ArtinianAtlas& a);
/// rank R-bar_{g,k,r} = [(g-k-1-|r|)/2] + 1.
std::vector<CheckResult> check_fin_ranks(const ArtinianAtlas& a);
/// Gr_gamma slices of each R_{g,k,r}: beta-bar nilpotency (mod t) and
/// cyclicity; slice ranks C(g-k-i+1, 2) and monomial independence on T_{g,k}.
std::vector<CheckResult> verify_gr_structure(const ArtinianAtlas& a);
/// gamma R^j_{r} in J_{r+1} for every r (only meaningful at t = 0).
std::vector<CheckResult> check_gamma_inclusion(const FloerRing& f);
/// Rewriting patterns: at t = 0 the d(e) support pattern and
/// beta-bar^n gamma^m = 0 for n + m >= gbar; over a series base the e(e)
/// coefficient pattern of R_k.
std::vector<CheckResult> verify_rewriting_degrees(const ArtinianAtlas& a);
/// The ideal (R_k, gamma R_{k+1}, ..., gamma^gbar) in Q[beta-bar, gamma]
/// reproduces each piece at t = 0 (rank and operators).
std::vector<CheckResult> check_hf_presentation(const ArtinianAtlas& a);
/// T-bar_{g,0}/(beta -+ 8) versus the explicit Q[alpha] quotients, with the
/// beta sign exchanged.
std::vector<CheckResult> check_alpha_quotients(int g);

/// Relation R_k of a piece: coefficient of beta-bar^i gamma^j as a series.
struct PieceRelation {
  int d = 0;
  /// Multiplicity of the root beta-bar = 0 in P_{d+1,t}.
  int e = 0;
  /// P_{d+1,t} coefficients, index i = power of beta-bar, each a series.
  std::vector<TruncatedSeries> p;
  /// c_{ij} for j > 0.
  std::map<std::pair<int, int>, TruncatedSeries> c;
};
PieceRelation piece_relation(const ArtinianAtlas& atlas, const FloerPiece& piece);

Json piece_to_json(const ArtinianAtlas& atlas, const FloerPiece& piece);

}  // namespace fr
