// SPDX-License-Identifier: Apache-2.0
#include "floer_rings/split.hpp"

namespace fr {

namespace {

Matrix block_rows(const Matrix& m, int r0, int n) {
  Matrix out(n, m.cols());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = m(r0 + r, c);
  return out;
}

Matrix block(const Matrix& m, int r0, int c0, int n) {
  Matrix out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out(r, c) = m(r0 + r, c0 + c);
  return out;
}

Matrix shift_identity(const Matrix& a, const Scalar& lambda) {
  Matrix out = a;
  for (int i = 0; i < a.rows(); ++i) out(i, i) -= lambda;
  return out;
}

}  // namespace

std::vector<LocalPiece> artinian_split(const QuotientAlgebra& q, std::string_view op) {
  std::vector<LocalPiece> pieces;
  const int n = q.dim();
  if (n == 0) return pieces;
  const PolyRing& ring = *q.ring();
  const int split_var = q.variable_index(op);
  if (split_var >= ring.even_count()) fail(ErrorCode::InvalidArgument, "split operator must be even");
  const int bt = ring.base_variable();
  const int N = bt >= 0 ? ring.even(bt).cap : 1;

  // Standard monomials free of t, and the reduction Q -> Q/tQ.
  std::vector<int> b0;
  std::vector<int> to0(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const Monomial& m = q.basis()[static_cast<std::size_t>(i)];
    if (bt < 0 || m.e[static_cast<std::size_t>(bt)] == 0) {
      to0[static_cast<std::size_t>(i)] = static_cast<int>(b0.size());
      b0.push_back(i);
    }
  }
  const int n0 = static_cast<int>(b0.size());
  if (bt >= 0) {
    if (n0 * N != n) fail(ErrorCode::StructureMismatch, "quotient is not free over the series base");
    for (int i : b0) {
      Monomial m = q.basis()[static_cast<std::size_t>(i)];
      for (int s = 1; s < N; ++s) {
        m.e[static_cast<std::size_t>(bt)] = static_cast<std::uint8_t>(s);
        if (q.basis_index(m) < 0) fail(ErrorCode::StructureMismatch, "basis is not a product with powers of t");
      }
    }
  }
  auto reduced_op = [&](int var) {
    Matrix a(n0, n0);
    for (int j = 0; j < n0; ++j) {
      for (const auto& [r, c] : q.op(var).column(b0[static_cast<std::size_t>(j)])) {
        int r0 = to0[static_cast<std::size_t>(r)];
        if (r0 >= 0) a(r0, j) = c;
      }
    }
    return a;
  };

  const Matrix A = reduced_op(split_var);
  const std::vector<Root> roots = gaussian_roots(charpoly(A));
  std::vector<Matrix> spaces;
  std::vector<Matrix> cols;
  for (const auto& root : roots) {
    Matrix k = kernel(shift_identity(A, root.value).pow(root.multiplicity));
    if (k.cols() != root.multiplicity) fail(ErrorCode::Internal, "generalized eigenspace has the wrong dimension");
    spaces.push_back(k);
  }
  Matrix P(n0, 0);
  for (const auto& k : spaces) P = hstack(P, k);
  const Matrix Pinv = inverse(P);

  std::vector<std::pair<int, Matrix>> others;  // conjugated operators of the other even variables
  for (int v = 0; v < ring.even_count(); ++v) {
    if (v == bt) continue;
    others.emplace_back(v, Pinv * reduced_op(v) * P);
  }

  Vector one0(static_cast<std::size_t>(n0));
  one0[static_cast<std::size_t>(to0[static_cast<std::size_t>(q.basis_index(Monomial{}))])] = Scalar(1);

  int offset = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const int m = roots[i].multiplicity;
    LocalPiece piece;
    piece.eigenvalue = roots[i].value;
    for (const auto& [v, conj] : others) {
      Matrix b = block(conj, offset, offset, m);
      Scalar c = b.trace() / Scalar(m);
      if (!shift_identity(b, c).pow(m).is_zero()) {
        fail(ErrorCode::EigenvalueCollision, "variable " + ring.even(v).name + " has several eigenvalues on one piece");
      }
      piece.constant_terms[ring.even(v).name] = c;
    }
    const Matrix P0 = spaces[i] * block_rows(Pinv, offset, m);
    const Vector e0 = P0.apply(one0);
    if (bt < 0) {
      piece.projector = P0;
      piece.basis = spaces[i];
      piece.idempotent = e0;
      piece.dim = m;
      piece.rank = m;
    } else {
      Vector e(static_cast<std::size_t>(n));
      for (int j = 0; j < n0; ++j) e[static_cast<std::size_t>(b0[static_cast<std::size_t>(j)])] = e0[static_cast<std::size_t>(j)];
      for (int it = 0;; ++it) {
        if (it > 64) fail(ErrorCode::Internal, "idempotent lifting did not converge");
        Vector e2 = q.multiply(e, e);
        if (e2 == e) break;
        Vector e3 = q.multiply(e2, e);
        e = sub(scale(Scalar(3), e2), scale(Scalar(2), e3));
      }
      piece.idempotent = e;
      piece.projector = q.left_multiplication(e);
      piece.basis = column_basis(piece.projector);
      piece.dim = piece.basis.cols();
      if (piece.dim != m * N) fail(ErrorCode::StructureMismatch, "lifted piece is not free over the series base");
      piece.rank = m;
    }
    pieces.push_back(std::move(piece));
    offset += m;
  }
  return pieces;
}

bool verify_split(const QuotientAlgebra& q, const std::vector<LocalPiece>& pieces) {
  const int n = q.dim();
  Matrix sum(n, n);
  std::vector<Matrix> ops;
  for (int v = 0; v < q.variable_count(); ++v) ops.push_back(q.op(v).to_dense());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Matrix& p = pieces[i].projector;
    if (p.rows() != n || p.cols() != n) return false;
    sum = sum + p;
    if (!(p * p == p)) return false;
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      if (!(p * pieces[j].projector).is_zero()) return false;
    }
    for (const auto& m : ops) {
      if (!(p * m == m * p)) return false;
    }
  }
  return n == 0 || sum.is_identity();
}

LinearOp as_op(const SparseMatrix& m) {
  return [&m](const Vector& v) { return m.apply(v); };
}

LinearOp shifted(const SparseMatrix& m, const Scalar& c) {
  return [&m, c](const Vector& v) {
    Vector out = m.apply(v);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) out[i] += c * v[i];
    }
    return out;
  };
}

int span_dim(const Matrix& m) { return m.cols() == 0 ? 0 : rank(m); }

Matrix image_of(const LinearOp& op, const Matrix& w) {
  std::vector<Vector> cols;
  for (int c = 0; c < w.cols(); ++c) cols.push_back(op(w.column(c)));
  Matrix m = Matrix::from_columns(cols, w.rows());
  return m.cols() == 0 ? m : column_basis(m);
}

std::vector<Matrix> filtration_levels(const LinearOp& f, const Matrix& w) {
  std::vector<Matrix> levels;
  Matrix cur = w.cols() == 0 ? w : column_basis(w);
  const int limit = cur.cols() + 1;
  while (cur.cols() > 0) {
    if (static_cast<int>(levels.size()) > limit) fail(ErrorCode::NotNilpotent, "filtration operator is not nilpotent");
    levels.push_back(cur);
    Matrix next = image_of(f, cur);
    if (next.cols() == cur.cols()) fail(ErrorCode::NotNilpotent, "filtration operator is not nilpotent");
    cur = std::move(next);
  }
  return levels;
}

int relative_nilpotency(const LinearOp& g, const Matrix& upper, const Matrix& lower) {
  Matrix cur = upper;
  for (int m = 0; m <= upper.cols() + 1; ++m) {
    if (span_contains(lower, cur)) return m;
    cur = image_of(g, cur);
  }
  return -1;
}

std::vector<GrSlice> associated_graded(const LinearOp& f, const LinearOp& g, const Matrix& w) {
  std::vector<Matrix> levels = filtration_levels(f, w);
  std::vector<GrSlice> out;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const Matrix& upper = levels[i];
    const Matrix lower = i + 1 < levels.size() ? levels[i + 1] : Matrix(upper.rows(), 0);
    GrSlice s;
    s.index = static_cast<int>(i);
    s.dim = upper.cols() - lower.cols();
    s.nilpotency = relative_nilpotency(g, upper, lower);
    // Complement of lower inside upper.
    Matrix basis = lower;
    int r = lower.cols();
    std::vector<Vector> comp;
    for (int c = 0; c < upper.cols() && static_cast<int>(comp.size()) < s.dim; ++c) {
      Matrix trial = hstack(basis, Matrix::from_columns({upper.column(c)}, upper.rows()));
      if (rank(trial) > r) {
        basis = trial;
        ++r;
        comp.push_back(upper.column(c));
      }
    }
    s.induced = Matrix(s.dim, s.dim);
    for (int j = 0; j < s.dim; ++j) {
      auto x = solve(basis, g(comp[static_cast<std::size_t>(j)]));
      if (!x) fail(ErrorCode::NotNilpotent, "level is not invariant under the slice operator");
      for (int k = 0; k < s.dim; ++k) s.induced(k, j) = (*x)[static_cast<std::size_t>(lower.cols() + k)];
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool cyclic_modulo(const LinearOp& g, const LinearOp* h, const Vector& v, const Matrix& upper, const Matrix& lower) {
  const int cap = upper.cols() + 1;
  std::vector<Vector> span;
  Vector hv = v;
  for (int s = 0; s <= cap && !is_zero_vector(hv); ++s) {
    Vector x = hv;
    for (int j = 0; j <= cap && !is_zero_vector(x); ++j) {
      span.push_back(x);
      x = g(x);
    }
    if (!h) break;
    hv = (*h)(hv);
  }
  Matrix gens = Matrix::from_columns(span, upper.rows());
  if (!span_contains(upper, gens)) return false;
  return span_dim(hstack(lower, gens)) == span_dim(upper);
}

}  // namespace fr
