// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "floer_rings/quotient.hpp"
#include "floer_rings/report.hpp"

namespace fr {

/// eta (weight 2) and psi_1..psi_2g (weight 1).
RingPtr sympow_ring(int g);
/// eta and theta, both weight 1 (cohomological degree 2).
RingPtr eta_theta_ring();
/// theta = sum_{i=1}^g psi_i psi_{g+i} in `ring`.
SuperPolynomial theta_element(const RingPtr& ring);

/// Macdonald relations eta^r prod_{i in I}(eta - psi_i psi_{g+i}) psi_J psi_{g+K}
/// for disjoint I, J, K in {1..g} with r + 2|I| + |J| + |K| in
/// [d+1, d+window].
IdealPresentation macdonald_ideal(int g, int d, int window = 2);

struct SymmetricProductRing {
  int genus = 0;
  int degree = 0;
  QuotientAlgebra quotient;
  /// b_0..b_{2d}.
  std::vector<int> betti;
};

SymmetricProductRing build_sympow(int g, int d);

/// Closed-form R_k over eta_theta_ring(), 0 <= k <= d+1 (R_{d+1} = 1).
SuperPolynomial build_Rk(int g, int d, int k);
/// (R_k, theta R_{k+1}, ..., theta^{d+1-k}).
std::vector<SuperPolynomial> jk_generators(int g, int d, int k);
/// Quotient C[eta, theta] / I.
QuotientAlgebra eta_theta_quotient(const std::vector<SuperPolynomial>& generators);
/// p(eta, theta) with theta -> sum psi_i psi_{g+i} in `target`.
SuperPolynomial to_sympow(const SuperPolynomial& p, const RingPtr& target);
/// theta * v in a quotient of sympow_ring(g).
Vector apply_theta(const QuotientAlgebra& q, const Vector& v);
/// Level w holds eta^j theta^{w-j} omega for j = 0..w; stops at the first
/// level that vanishes.
std::vector<std::vector<Vector>> eta_theta_orbit(const QuotientAlgebra& q, const Vector& omega);
/// psi_1 ... psi_k in `ring`.
SuperPolynomial leading_primitive(const RingPtr& ring, int k);

/// sympow.membership, sympow.isotypic, sympow.ideal_equality,
/// sympow.recurrence.
std::vector<CheckResult> verify_presentation(const SymmetricProductRing& s);
/// sympow.pairing: H^i x H^{2d-i} -> H^{2d} has full rank for all i.
std::vector<CheckResult> poincare_pairing_check(const SymmetricProductRing& s);
/// sympow.duality (b_i = b_{2d-i}, b_0 = 1, b_1 = 2g for d > 0),
/// sympow.primitive_vanishing (Lambda^k_0 -> 0 for k > d),
/// sympow.invariants (the Sp(2g, Z)-invariant part is spanned by eta^a theta^b),
/// sympow.stabilization (window d+3 adds nothing).
std::vector<CheckResult> check_sympow_structure(const SymmetricProductRing& s);

}  // namespace fr
