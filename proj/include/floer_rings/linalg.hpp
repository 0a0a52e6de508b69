// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "floer_rings/scalar.hpp"

namespace fr {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n);
  /// Columns given as vectors of equal length.
  static Matrix from_columns(const std::vector<Vector>& cols, int rows);

  int rows() const noexcept { return r_; }
  int cols() const noexcept { return c_; }
  Scalar& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * c_ + c]; }
  const Scalar& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * c_ + c]; }

  Vector column(int c) const;
  std::vector<Vector> columns() const;
  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  Matrix pow(int e) const;
  bool is_zero() const noexcept;
  bool is_identity() const noexcept;
  Scalar trace() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  int r_ = 0;
  int c_ = 0;
  std::vector<Scalar> a_;
};

bool is_zero_vector(const Vector& v) noexcept;
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);
Vector unit_vector(int n, int i);

struct Rref {
  Matrix reduced;
  std::vector<int> pivots;
};

Rref rref(Matrix m);
int rank(const Matrix& m);
/// Columns form a basis of the null space.
Matrix kernel(const Matrix& m);
/// A maximal independent subset of the columns, in order.
Matrix column_basis(const Matrix& m);
std::optional<Vector> solve(const Matrix& a, const Vector& b);
/// Throws InvalidArgument when singular.
Matrix inverse(const Matrix& m);
Matrix hstack(const Matrix& a, const Matrix& b);
/// True when every column of `sub` lies in the column span of `space`.
bool span_contains(const Matrix& space, const Matrix& sub);

// ---------------------------------------------------------------------------
// Univariate polynomials, coefficients from low to high degree.

using UPoly = std::vector<Scalar>;

void poly_trim(UPoly& p);
int poly_degree(const UPoly& p);
Scalar poly_eval(const UPoly& p, const Scalar& x);
UPoly poly_mul(const UPoly& a, const UPoly& b);
UPoly poly_sub(const UPoly& a, const UPoly& b);
UPoly poly_derivative(const UPoly& p);
std::pair<UPoly, UPoly> poly_divmod(const UPoly& a, const UPoly& b);
UPoly poly_gcd(UPoly a, UPoly b);
UPoly poly_monic(const UPoly& p);

/// det(xI - M) via Hessenberg reduction.
UPoly charpoly(const Matrix& m);

struct Root {
  Scalar value;
  int multiplicity = 0;
};

/// All roots of p, which must lie in Q(i). Throws FactorizationFailed
/// otherwise. Sorted by the total order on Scalar.
std::vector<Root> gaussian_roots(const UPoly& p);

// ---------------------------------------------------------------------------
// Sparse vectors and incremental row echelon form.

/// (index, value) pairs with nonzero values, ascending index unless noted.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec to_sparse(const Vector& v);
Vector to_dense(const SparseVec& v, int n);

/// Square or rectangular matrix stored as sparse columns.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(static_cast<std::size_t>(cols)) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return static_cast<int>(cols_.size()); }
  void set_column(int c, SparseVec v) { cols_.at(static_cast<std::size_t>(c)) = std::move(v); }
  const SparseVec& column(int c) const { return cols_.at(static_cast<std::size_t>(c)); }

  Vector apply(const Vector& v) const;
  Matrix to_dense() const;
  static SparseMatrix from_dense(const Matrix& m);

 private:
  int rows_ = 0;
  std::vector<SparseVec> cols_;
};

/// Row echelon form over column indices 0..n-1. The leading entry of a
/// row is its largest column index; stored rows are normalized so that
/// the leading coefficient is 1.
class SparseEchelon {
 public:
  explicit SparseEchelon(int ncols);

  int ncols() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(rows_.size()); }
  bool is_pivot(int col) const { return pivot_[static_cast<std::size_t>(col)] >= 0; }
  /// Row whose leading column is `col`; terms in descending column order.
  const SparseVec& row_at(int col) const { return rows_[static_cast<std::size_t>(pivot_[static_cast<std::size_t>(col)])]; }

  /// Reduces v against the stored rows. With full = false only the leading
  /// term is reduced away.
  SparseVec reduce(const SparseVec& v, bool full = true);
  /// Inserts v; returns the leading column of the new row when v was
  /// independent of the stored rows.
  std::optional<int> insert(const SparseVec& v, bool full = true);
  bool contains(const SparseVec& v) { return reduce(v, false).empty(); }
  /// Fully reduces every row against the others.
  void interreduce();

 private:
  int n_;
  std::vector<SparseVec> rows_;
  std::vector<int> pivot_;
  std::vector<Scalar> acc_;
  std::vector<char> queued_;
  std::vector<int> heap_;
};

}  // namespace fr
