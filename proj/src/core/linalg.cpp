// SPDX-License-Identifier: Apache-2.0
#include "floer_rings/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace fr {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, int rows) {
  Matrix m(rows, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    const Vector& v = cols[static_cast<std::size_t>(c)];
    if (static_cast<int>(v.size()) != rows) fail(ErrorCode::InvalidArgument, "column length mismatch");
    for (int r = 0; r < rows; ++r) m(r, c) = v[static_cast<std::size_t>(r)];
  }
  return m;
}

Vector Matrix::column(int c) const {
  Vector v(static_cast<std::size_t>(r_));
  for (int r = 0; r < r_; ++r) v[static_cast<std::size_t>(r)] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(static_cast<std::size_t>(c_));
  for (int c = 0; c < c_; ++c) out.push_back(column(c));
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (static_cast<int>(v.size()) != c_) fail(ErrorCode::InvalidArgument, "vector length mismatch");
  Vector out(static_cast<std::size_t>(r_));
  for (int c = 0; c < c_; ++c) {
    const Scalar& x = v[static_cast<std::size_t>(c)];
    if (x.is_zero()) continue;
    for (int r = 0; r < r_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[static_cast<std::size_t>(r)] += a * x;
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (int r = 0; r < r_; ++r)
    for (int c = 0; c < c_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::pow(int e) const {
  if (r_ != c_) fail(ErrorCode::InvalidArgument, "power of a non-square matrix");
  if (e < 0) fail(ErrorCode::OutOfRange, "negative matrix power");
  Matrix result = identity(r_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const noexcept {
  if (r_ != c_) return false;
  for (int r = 0; r < r_; ++r)
    for (int c = 0; c < c_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (r == c ? !a.is_one() : !a.is_zero()) return false;
    }
  return true;
}

Scalar Matrix::trace() const {
  Scalar s;
  for (int i = 0; i < std::min(r_, c_); ++i) s += (*this)(i, i);
  return s;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) fail(ErrorCode::InvalidArgument, "matrix shape mismatch");
  Matrix m(a.r_, a.c_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) fail(ErrorCode::InvalidArgument, "matrix shape mismatch");
  Matrix m(a.r_, a.c_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.c_ != b.r_) fail(ErrorCode::InvalidArgument, "matrix shape mismatch");
  Matrix m(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.c_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) m(i, j) += x * y;
      }
    }
  return m;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix m(a.r_, a.c_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = s * a.a_[i];
  return m;
}

bool is_zero_vector(const Vector& v) noexcept {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector add(const Vector& a, const Vector& b) {
  Vector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  Vector out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scale(const Scalar& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Vector unit_vector(int n, int i) {
  Vector v(static_cast<std::size_t>(n));
  v.at(static_cast<std::size_t>(i)) = Scalar(1);
  return v;
}

Rref rref(Matrix m) {
  Rref out;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (!m(r, col).is_zero()) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    Scalar inv = m(row, col).inverse();
    for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar f = m(r, col);
      for (int c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c).sub_mul(f, m(row, c));
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

Matrix kernel(const Matrix& m) {
  Rref r = rref(m);
  std::vector<char> is_pivot(static_cast<std::size_t>(m.cols()), 0);
  for (int p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
  std::vector<Vector> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector v(static_cast<std::size_t>(m.cols()));
    v[static_cast<std::size_t>(free)] = Scalar(1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      v[static_cast<std::size_t>(r.pivots[i])] = -r.reduced(static_cast<int>(i), free);
    }
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(basis, m.cols());
}

Matrix column_basis(const Matrix& m) {
  Rref r = rref(m);
  std::vector<Vector> cols;
  for (int p : r.pivots) cols.push_back(m.column(p));
  return Matrix::from_columns(cols, m.rows());
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  Matrix aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b.at(static_cast<std::size_t>(r));
  }
  Rref rr = rref(std::move(aug));
  if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) return std::nullopt;
  Vector x(static_cast<std::size_t>(a.cols()));
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    x[static_cast<std::size_t>(rr.pivots[i])] = rr.reduced(static_cast<int>(i), a.cols());
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
  const int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar(1);
  }
  Rref rr = rref(std::move(aug));
  if (static_cast<int>(rr.pivots.size()) < n || rr.pivots[static_cast<std::size_t>(n - 1)] != n - 1) {
    fail(ErrorCode::InvalidArgument, "matrix is singular");
  }
  Matrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv(r, c) = rr.reduced(r, n + c);
  return inv;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  if (a.rows() != b.rows()) fail(ErrorCode::InvalidArgument, "hstack row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (int c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

bool span_contains(const Matrix& space, const Matrix& sub) {
  if (sub.cols() == 0) return true;
  if (space.cols() == 0) return sub.is_zero();
  return rank(space) == rank(hstack(space, sub));
}

// ---------------------------------------------------------------------------

void poly_trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int poly_degree(const UPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    if (!p[static_cast<std::size_t>(i)].is_zero()) return i;
  }
  return -1;
}

Scalar poly_eval(const UPoly& p, const Scalar& x) {
  Scalar acc;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly poly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  poly_trim(out);
  return out;
}

UPoly poly_sub(const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  poly_trim(out);
  return out;
}

UPoly poly_derivative(const UPoly& p) {
  UPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(Scalar(static_cast<long long>(i)) * p[i]);
  poly_trim(out);
  return out;
}

std::pair<UPoly, UPoly> poly_divmod(const UPoly& a, const UPoly& b) {
  UPoly r = a;
  poly_trim(r);
  UPoly d = b;
  poly_trim(d);
  if (d.empty()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  const int db = static_cast<int>(d.size()) - 1;
  if (static_cast<int>(r.size()) - 1 < db) return {UPoly{}, r};
  UPoly q(r.size() - static_cast<std::size_t>(db));
  Scalar lead_inv = d.back().inverse();
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    Scalar c = r[static_cast<std::size_t>(i)] * lead_inv;
    if (c.is_zero()) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)].sub_mul(c, d[static_cast<std::size_t>(j)]);
  }
  poly_trim(q);
  poly_trim(r);
  return {q, r};
}

UPoly poly_monic(const UPoly& p) {
  UPoly out = p;
  poly_trim(out);
  if (out.empty()) return out;
  Scalar inv = out.back().inverse();
  for (auto& c : out) c *= inv;
  return out;
}

UPoly poly_gcd(UPoly a, UPoly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    UPoly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

UPoly charpoly(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::InvalidArgument, "charpoly of a non-square matrix");
  const int n = m.rows();
  Matrix h = m;
  // similarity reduction to upper Hessenberg form
  for (int col = 0; col + 2 < n; ++col) {
    const int m1 = col + 1;
    int piv = -1;
    for (int i = m1; i < n; ++i) {
      if (!h(i, col).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != m1) {
      for (int c = 0; c < n; ++c) std::swap(h(piv, c), h(m1, c));
      for (int r = 0; r < n; ++r) std::swap(h(r, piv), h(r, m1));
    }
    Scalar inv = h(m1, col).inverse();
    for (int j = m1 + 1; j < n; ++j) {
      if (h(j, col).is_zero()) continue;
      Scalar u = h(j, col) * inv;
      for (int c = 0; c < n; ++c) {
        if (!h(m1, c).is_zero()) h(j, c).sub_mul(u, h(m1, c));
      }
      for (int r = 0; r < n; ++r) {
        if (!h(r, j).is_zero()) h(r, m1) += u * h(r, j);
      }
    }
  }
  std::vector<UPoly> p(static_cast<std::size_t>(n + 1));
  p[0] = UPoly{Scalar(1)};
  for (int k = 1; k <= n; ++k) {
    // p_k = (x - h_kk) p_{k-1} - sum_i h_{k-i,k} t_i p_{k-i-1}   (1-based)
    UPoly cur = poly_mul(UPoly{-h(k - 1, k - 1), Scalar(1)}, p[static_cast<std::size_t>(k - 1)]);
    Scalar t(1);
    for (int i = 1; i <= k - 1; ++i) {
      t = t * h(k - i, k - i - 1);
      if (t.is_zero()) break;
      Scalar coeff = h(k - i - 1, k - 1) * t;
      if (coeff.is_zero()) continue;
      cur = poly_sub(cur, poly_mul(UPoly{coeff}, p[static_cast<std::size_t>(k - i - 1)]));
    }
    p[static_cast<std::size_t>(k)] = cur;
  }
  UPoly out = p[static_cast<std::size_t>(n)];
  out.resize(static_cast<std::size_t>(n + 1));
  return out;
}

namespace {

mpz_class lcm_den(const UPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p) {
    mpz_class a = c.re().denominator();
    mpz_class b = c.im().denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b.get_mpz_t());
  }
  return l;
}

// smallest integer r with r^(2k) >= n
mpz_class root_ceil(const mpz_class& n, unsigned long k2) {
  mpz_class r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k2);
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), r.get_mpz_t(), k2);
  if (p < n) r += 1;
  return r;
}

}  // namespace

std::vector<Root> gaussian_roots(const UPoly& input) {
  UPoly p = poly_monic(input);
  const int n = poly_degree(p);
  if (n < 0) fail(ErrorCode::InvalidArgument, "roots of the zero polynomial");
  if (n == 0) return {};
  UPoly sq = poly_divmod(p, poly_gcd(p, poly_derivative(p))).first;
  sq = poly_monic(sq);
  const int m = poly_degree(sq);

  // y = D x turns sq into a monic polynomial over Z[i]; its roots in Q(i)
  // are then Gaussian integers.
  mpz_class dz = lcm_den(sq);
  Rational dr{mpq_class(dz)};
  UPoly q(sq.size());
  Rational dpow(1);
  for (int i = m; i >= 0; --i) {
    q[static_cast<std::size_t>(i)] = Scalar(dpow) * sq[static_cast<std::size_t>(i)];
    dpow = dpow * dr;
  }
  // Fujiwara-type bound: |y| <= 2 max_k |q_{m-k}|^{1/k}
  mpz_class bound = 1;
  for (int k = 1; k <= m; ++k) {
    Rational nm = q[static_cast<std::size_t>(m - k)].norm();
    mpz_class nz = nm.numerator();
    mpz_class r = root_ceil(nz, static_cast<unsigned long>(2 * k));
    if (r > bound) bound = r;
  }
  bound *= 2;
  if (!bound.fits_slong_p() || bound > 1000000) fail(ErrorCode::FactorizationFailed, "root bound too large");
  const long b = bound.get_si();

  std::vector<Scalar> found;
  auto try_root = [&](long re, long im) {
    Scalar y{Rational(static_cast<long long>(re)), Rational(static_cast<long long>(im))};
    if (poly_eval(q, y).is_zero()) found.push_back(y / Scalar(dr));
  };
  for (long a = -b; a <= b && static_cast<int>(found.size()) < m; ++a) try_root(a, 0);
  for (long c = -b; c <= b && static_cast<int>(found.size()) < m; ++c) {
    if (c != 0) try_root(0, c);
  }
  for (long a = -b; a <= b && static_cast<int>(found.size()) < m; ++a) {
    if (a == 0) continue;
    for (long c = -b; c <= b && static_cast<int>(found.size()) < m; ++c) {
      if (c != 0) try_root(a, c);
    }
  }
  if (static_cast<int>(found.size()) < m) {
    fail(ErrorCode::FactorizationFailed, "characteristic polynomial does not split over Q(i)");
  }
  std::vector<Root> roots;
  int total = 0;
  for (const auto& lam : found) {
    UPoly cur = p;
    int mult = 0;
    UPoly lin{-lam, Scalar(1)};
    for (;;) {
      auto [qq, rr] = poly_divmod(cur, lin);
      if (!rr.empty()) break;
      ++mult;
      cur = std::move(qq);
    }
    total += mult;
    roots.push_back({lam, mult});
  }
  if (total != n) fail(ErrorCode::FactorizationFailed, "root multiplicities do not add up");
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.value < b.value; });
  return roots;
}

// ---------------------------------------------------------------------------

SparseVec to_sparse(const Vector& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.emplace_back(static_cast<int>(i), v[i]);
  }
  return out;
}

Vector to_dense(const SparseVec& v, int n) {
  Vector out(static_cast<std::size_t>(n));
  for (const auto& [i, c] : v) out.at(static_cast<std::size_t>(i)) += c;
  return out;
}

Vector SparseMatrix::apply(const Vector& v) const {
  if (static_cast<int>(v.size()) != cols()) fail(ErrorCode::InvalidArgument, "vector length mismatch");
  Vector out(static_cast<std::size_t>(rows_));
  for (std::size_t c = 0; c < cols_.size(); ++c) {
    if (v[c].is_zero()) continue;
    for (const auto& [r, a] : cols_[c]) out[static_cast<std::size_t>(r)] += a * v[c];
  }
  return out;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows_, cols());
  for (int c = 0; c < cols(); ++c)
    for (const auto& [r, a] : cols_[static_cast<std::size_t>(c)]) m(r, c) = a;
  return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (int c = 0; c < m.cols(); ++c) s.set_column(c, to_sparse(m.column(c)));
  return s;
}

SparseEchelon::SparseEchelon(int ncols)
    : n_(ncols),
      pivot_(static_cast<std::size_t>(ncols), -1),
      acc_(static_cast<std::size_t>(ncols)),
      queued_(static_cast<std::size_t>(ncols), 0) {}

SparseVec SparseEchelon::reduce(const SparseVec& v, bool full) {
  heap_.clear();
  for (const auto& [i, c] : v) {
    if (i < 0 || i >= n_) fail(ErrorCode::OutOfRange, "sparse index out of range");
    acc_[static_cast<std::size_t>(i)] += c;
    if (!queued_[static_cast<std::size_t>(i)]) {
      queued_[static_cast<std::size_t>(i)] = 1;
      heap_.push_back(i);
    }
  }
  std::make_heap(heap_.begin(), heap_.end());
  SparseVec out;
  while (!heap_.empty()) {
    std::pop_heap(heap_.begin(), heap_.end());
    const int idx = heap_.back();
    heap_.pop_back();
    const auto u = static_cast<std::size_t>(idx);
    queued_[u] = 0;
    Scalar c = std::move(acc_[u]);
    acc_[u] = Scalar();
    if (c.is_zero()) continue;
    const int pr = pivot_[u];
    if (pr >= 0 && (full || out.empty())) {
      const SparseVec& row = rows_[static_cast<std::size_t>(pr)];
      for (std::size_t k = 1; k < row.size(); ++k) {
        const auto j = static_cast<std::size_t>(row[k].first);
        acc_[j].sub_mul(c, row[k].second);
        if (!queued_[j]) {
          queued_[j] = 1;
          heap_.push_back(row[k].first);
          std::push_heap(heap_.begin(), heap_.end());
        }
      }
    } else {
      out.emplace_back(idx, std::move(c));
    }
  }
  return out;
}

std::optional<int> SparseEchelon::insert(const SparseVec& v, bool full) {
  SparseVec r = reduce(v, full);
  if (r.empty()) return std::nullopt;
  Scalar inv = r.front().second.inverse();
  if (!inv.is_one()) {
    for (auto& [i, c] : r) c *= inv;
  }
  const int lead = r.front().first;
  pivot_[static_cast<std::size_t>(lead)] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return lead;
}

void SparseEchelon::interreduce() {
  for (int col = 0; col < n_; ++col) {
    const int pr = pivot_[static_cast<std::size_t>(col)];
    if (pr < 0) continue;
    SparseVec& row = rows_[static_cast<std::size_t>(pr)];
    SparseVec tail(row.begin() + 1, row.end());
    SparseVec reduced = reduce(tail, true);
    SparseVec next;
    next.reserve(reduced.size() + 1);
    next.push_back(std::move(row.front()));
    for (auto& t : reduced) next.push_back(std::move(t));
    row = std::move(next);
  }
}

}  // namespace fr
