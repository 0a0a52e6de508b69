// SPDX-License-Identifier: Apache-2.0
#include "floer_rings/linalg.hpp"

#include <algorithm>
#include <functional>

#include <gtest/gtest.h>

#include "test_support.hpp"

using fr::Matrix;
using fr::Rational;
using fr::Scalar;
using fr::UPoly;
using fr::Vector;

namespace {

Matrix random_matrix(frtest::Gen& g, int r, int c, int rank_cap = -1) {
  // Product of r x k and k x c factors when rank_cap = k.
  if (rank_cap < 0) {
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = Scalar(g.range(-3, 3));
    return m;
  }
  Matrix a(r, rank_cap), b(rank_cap, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < rank_cap; ++j) a(i, j) = Scalar(g.range(-3, 3));
  for (int i = 0; i < rank_cap; ++i)
    for (int j = 0; j < c; ++j) b(i, j) = Scalar(g.range(-3, 3));
  return a * b;
}

// Laplace expansion; independent of the library's elimination code.
Scalar det_oracle(const Matrix& m) {
  const int n = m.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return m(0, 0);
  Scalar d(0);
  for (int j = 0; j < n; ++j) {
    Matrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      for (int c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const Scalar term = m(0, j) * det_oracle(minor);
    d = (j % 2 == 0) ? d + term : d - term;
  }
  return d;
}

UPoly from_roots(const std::vector<Scalar>& roots) {
  UPoly p{Scalar(1)};
  for (const auto& r : roots) p = fr::poly_mul(p, {-r, Scalar(1)});
  return p;
}

}  // namespace

TEST(Matrix, BasicAlgebra) {
  const Matrix i3 = Matrix::identity(3);
  EXPECT_TRUE(i3.is_identity());
  frtest::Gen g(1);
  const Matrix a = random_matrix(g, 3, 3), b = random_matrix(g, 3, 3), c = random_matrix(g, 3, 3);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * i3, a);
  EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
  EXPECT_EQ(a.pow(3), a * a * a);
  EXPECT_EQ((a + b).trace(), a.trace() + b.trace());
}

TEST(Matrix, RankNullityAndKernel) {
  frtest::Gen g(2);
  for (int t = 0; t < 60; ++t) {
    const int r = static_cast<int>(g.range(1, 6)), c = static_cast<int>(g.range(1, 6));
    const int k = static_cast<int>(g.range(0, std::min(r, c)));
    const Matrix m = random_matrix(g, r, c, k);
    const int rk = fr::rank(m);
    EXPECT_LE(rk, k);
    const Matrix ker = fr::kernel(m);
    EXPECT_EQ(ker.cols(), c - rk);
    EXPECT_TRUE((m * ker).is_zero());
    EXPECT_EQ(fr::rank(ker), ker.cols());
    EXPECT_EQ(fr::column_basis(m).cols(), rk);
    EXPECT_TRUE(fr::span_contains(fr::column_basis(m), m));
  }
}

TEST(Matrix, SolveAndInverse) {
  frtest::Gen g(3);
  int invertible = 0;
  for (int t = 0; t < 40; ++t) {
    const int n = static_cast<int>(g.range(1, 5));
    const Matrix m = random_matrix(g, n, n);
    const Scalar det = det_oracle(m);
    if (det.is_zero()) {
      EXPECT_THROW(fr::inverse(m), fr::Error);
      continue;
    }
    ++invertible;
    EXPECT_EQ(fr::rank(m), n);
    EXPECT_TRUE((m * fr::inverse(m)).is_identity());
    Vector b(static_cast<std::size_t>(n));
    for (auto& x : b) x = g.scalar();
    const auto x = fr::solve(m, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(m.apply(*x), b);
  }
  EXPECT_GT(invertible, 10);
  Matrix z(2, 2);
  EXPECT_FALSE(fr::solve(z, {Scalar(1), Scalar(0)}).has_value());
}

TEST(Charpoly, MatchesDeterminantOracle) {
  frtest::Gen g(4);
  for (int t = 0; t < 30; ++t) {
    const int n = static_cast<int>(g.range(1, 5));
    const Matrix m = random_matrix(g, n, n);
    const UPoly p = fr::charpoly(m);
    ASSERT_EQ(fr::poly_degree(p), n);
    for (int x = -2; x <= 2; ++x) {
      const Matrix shifted = Scalar(x) * Matrix::identity(n) - m;
      EXPECT_EQ(fr::poly_eval(p, Scalar(x)), det_oracle(shifted));
    }
  }
}

TEST(Roots, GaussianIntegerRoots) {
  const Scalar four_i(Rational(0), Rational(4));
  const std::vector<Scalar> roots{Scalar(0), Scalar(4), Scalar(-4), four_i, -four_i, Scalar(4)};
  const auto found = fr::gaussian_roots(from_roots(roots));
  int total = 0;
  for (const auto& r : found) {
    total += r.multiplicity;
    const auto expect = std::count(roots.begin(), roots.end(), r.value);
    EXPECT_EQ(r.multiplicity, expect) << r.value;
  }
  EXPECT_EQ(total, 6);
  EXPECT_TRUE(std::is_sorted(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.value < b.value; }));
  // x^2 - 2 has no root in Q(i)
  EXPECT_THROW(fr::gaussian_roots({Scalar(-2), Scalar(0), Scalar(1)}), fr::Error);
}

TEST(Roots, RationalRoots) {
  const auto found = fr::gaussian_roots(from_roots({Scalar(Rational(1, 2)), Scalar(Rational(-3, 4))}));
  ASSERT_EQ(found.size(), 2u);
  EXPECT_EQ(found[0].value, Scalar(Rational(-3, 4)));
  EXPECT_EQ(found[1].value, Scalar(Rational(1, 2)));
}

TEST(Poly, DivmodAndGcd) {
  frtest::Gen g(5);
  for (int t = 0; t < 40; ++t) {
    UPoly a, b;
    for (int i = 0; i < g.range(1, 6); ++i) a.push_back(g.scalar());
    for (int i = 0; i < g.range(1, 4); ++i) b.push_back(g.scalar());
    b.push_back(Scalar(1));
    fr::poly_trim(a);
    const auto [q, r] = fr::poly_divmod(a, b);
    EXPECT_LT(fr::poly_degree(r), fr::poly_degree(b));
    UPoly back = fr::poly_mul(q, b);
    UPoly diff = fr::poly_sub(a, back);
    const UPoly rest = fr::poly_sub(diff, r);
    EXPECT_TRUE(std::all_of(rest.begin(), rest.end(), [](const Scalar& c) { return c.is_zero(); }));
  }
  const UPoly p = from_roots({Scalar(1), Scalar(2), Scalar(3)});
  const UPoly q = from_roots({Scalar(2), Scalar(3), Scalar(5)});
  EXPECT_EQ(fr::poly_monic(fr::poly_gcd(p, q)), from_roots({Scalar(2), Scalar(3)}));
  EXPECT_EQ(fr::poly_derivative({Scalar(1), Scalar(2), Scalar(3)}), (UPoly{Scalar(2), Scalar(6)}));
}

TEST(Sparse, DenseRoundTripAndApply) {
  frtest::Gen g(6);
  const Matrix m = random_matrix(g, 4, 5);
  const fr::SparseMatrix s = fr::SparseMatrix::from_dense(m);
  EXPECT_EQ(s.to_dense(), m);
  Vector v(5);
  for (auto& x : v) x = g.scalar();
  EXPECT_EQ(s.apply(v), m.apply(v));
  EXPECT_EQ(fr::to_dense(fr::to_sparse(v), 5), v);
}

TEST(Sparse, EchelonMatchesDenseRank) {
  frtest::Gen g(7);
  for (int t = 0; t < 40; ++t) {
    const int n = static_cast<int>(g.range(2, 8));
    const int rows = static_cast<int>(g.range(1, 8));
    const Matrix m = random_matrix(g, rows, n, static_cast<int>(g.range(1, std::min(rows, n))));
    fr::SparseEchelon ech(n);
    int inserted = 0;
    for (int r = 0; r < rows; ++r) {
      Vector row(static_cast<std::size_t>(n));
      for (int c = 0; c < n; ++c) row[static_cast<std::size_t>(c)] = m(r, c);
      if (ech.insert(fr::to_sparse(row), g.coin())) ++inserted;
    }
    EXPECT_EQ(inserted, fr::rank(m));
    EXPECT_EQ(ech.size(), inserted);
    for (int r = 0; r < rows; ++r) {
      Vector row(static_cast<std::size_t>(n));
      for (int c = 0; c < n; ++c) row[static_cast<std::size_t>(c)] = m(r, c);
      EXPECT_TRUE(ech.contains(fr::to_sparse(row)));
    }
  }
}
