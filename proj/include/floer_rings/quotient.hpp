// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "floer_rings/linalg.hpp"
#include "floer_rings/polyring.hpp"

namespace fr {

struct IdealPresentation {
  RingPtr ring;
  std::vector<SuperPolynomial> generators;
  /// Largest working degree tried before giving up with NotFiniteRank.
  int degree_bound = 32;
  /// First working degree; -1 means the largest generator weight.
  int initial_degree = -1;
};

/// Finite-rank quotient R/I stored as a standard-monomial basis together with
/// the left-multiplication operators of every ring variable.
///
/// Variable indices: even variables 0..E-1 in ring order, then psi_1..psi_2g
/// at E..E+2g-1.
class QuotientAlgebra {
 public:
  QuotientAlgebra() = default;

  const RingPtr& ring() const noexcept { return ring_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  /// -1 when m is not a basis monomial.
  int basis_index(const Monomial& m) const;
  int variable_count() const noexcept { return static_cast<int>(ops_.size()); }
  int variable_index(std::string_view name) const;
  const SparseMatrix& op(int var) const { return ops_.at(static_cast<std::size_t>(var)); }
  const SparseMatrix& operator_of(std::string_view name) const { return op(variable_index(name)); }
  /// Working degree at which the presentation was certified.
  int working_degree() const noexcept { return degree_; }

  /// Dimension per ring weight.
  std::map<int, int> graded_dims() const;
  std::map<int, int> graded_dims(const GradingTable& table) const;

  Vector one() const;
  Vector normal_form(const SuperPolynomial& p) const;
  /// m * v, with m acting on the left.
  Vector apply_monomial(const Monomial& m, const Vector& v) const;
  /// b_i * v for every basis monomial b_i, one operator application each.
  std::vector<Vector> basis_orbit(const Vector& v) const;
  /// Row vectors u^T M(b_i) for every basis monomial, where M(b) is the
  /// matrix of left multiplication by b.
  std::vector<Vector> dual_orbit(const Vector& u) const;
  Vector multiply(const Vector& a, const Vector& b) const;
  /// Matrix of v -> a * v.
  Matrix left_multiplication(const Vector& a) const;
  SuperPolynomial to_polynomial(const Vector& v) const;

  friend QuotientAlgebra quotient_basis(const IdealPresentation& ideal);

 private:
  RingPtr ring_;
  std::vector<Monomial> basis_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<SparseMatrix> ops_;
  int degree_ = 0;
  // b_i = x * b_parent with x = parent_var_[i]; tree_order_ lists parents first.
  std::vector<int> parent_;
  std::vector<int> parent_var_;
  std::vector<int> tree_order_;

  void build_tree();
};

/// Computes R/I by graded linear algebra. The working degree D is raised
/// until the standard monomials below D form an order ideal whose border
/// lies within D, the resulting operators supercommute, and every generator
/// reduces to zero. Throws NotFiniteRank when no D up to degree_bound works.
QuotientAlgebra quotient_basis(const IdealPresentation& ideal);

/// Sparse helpers on operator matrices.
SparseMatrix sparse_multiply(const SparseMatrix& a, const SparseMatrix& b);
bool sparse_equal(const SparseMatrix& a, const SparseMatrix& b);
bool sparse_is_zero(const SparseMatrix& a);

}  // namespace fr
