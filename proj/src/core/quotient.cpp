// SPDX-License-Identifier: Apache-2.0
#include "floer_rings/quotient.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace fr {

namespace {

// Monomials of weight <= D, sorted so that a larger index means a larger
// monomial: weight first, then capped weight-0 variables with the lower
// power ranked higher, then lex on even exponents, then the odd mask.
struct ColumnSet {
  std::vector<Monomial> cols;
  std::unordered_map<std::uint64_t, int> index;
  std::vector<int> weight;
};

std::vector<int> order_key(const PolyRing& ring, const Monomial& m) {
  std::vector<int> k;
  k.push_back(monomial_weight(ring, m));
  for (int i = 0; i < ring.even_count(); ++i) {
    if (ring.even(i).weight == 0) k.push_back(-m.e[static_cast<std::size_t>(i)]);
  }
  for (int i = 0; i < ring.even_count(); ++i) k.push_back(m.e[static_cast<std::size_t>(i)]);
  k.push_back(static_cast<int>(m.odd));
  return k;
}

void enumerate_even(const PolyRing& ring, int i, int budget, Monomial& cur, std::vector<Monomial>& out) {
  if (i == ring.even_count()) {
    out.push_back(cur);
    return;
  }
  const auto& v = ring.even(i);
  int max_e = v.weight == 0 ? v.cap - 1 : budget / v.weight;
  if (v.cap > 0) max_e = std::min(max_e, v.cap - 1);
  max_e = std::min(max_e, 255);
  for (int e = 0; e <= max_e; ++e) {
    cur.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
    enumerate_even(ring, i + 1, budget - e * v.weight, cur, out);
  }
  cur.e[static_cast<std::size_t>(i)] = 0;
}

ColumnSet make_columns(const PolyRing& ring, int D) {
  ColumnSet cs;
  const int n_odd = ring.odd_count();
  for (int k = 0; k <= n_odd; ++k) {
    const int budget = D - k * ring.odd_weight();
    if (budget < 0) break;
    std::vector<Monomial> evens;
    Monomial cur;
    enumerate_even(ring, 0, budget, cur, evens);
    for (OddMask mask : masks_of_degree(ring.genus(), k)) {
      for (Monomial m : evens) {
        m.odd = mask;
        cs.cols.push_back(m);
      }
    }
  }
  std::vector<std::pair<std::vector<int>, Monomial>> keyed;
  keyed.reserve(cs.cols.size());
  for (const auto& m : cs.cols) keyed.emplace_back(order_key(ring, m), m);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    cs.cols[i] = keyed[i].second;
    cs.index.emplace(keyed[i].second.key(), static_cast<int>(i));
    cs.weight.push_back(keyed[i].first.front());
  }
  return cs;
}

Monomial variable_monomial(const PolyRing& ring, int var) {
  Monomial x;
  if (var < ring.even_count()) {
    x.e[static_cast<std::size_t>(var)] = 1;
  } else {
    x.odd = OddMask(1) << (var - ring.even_count());
  }
  return x;
}

int variable_weight(const PolyRing& ring, int var) {
  return var < ring.even_count() ? ring.even(var).weight : ring.odd_weight();
}

struct Shift {
  int col = -1;  // -1: product vanishes; -2: product exceeds the working degree
  int sign = 0;
};

// Vector out = M v for a sparse matrix given as columns.
SparseVec sparse_apply(const SparseMatrix& m, const SparseVec& v, std::vector<Scalar>& acc, std::vector<char>& seen) {
  std::vector<int> touched;
  for (const auto& [c, a] : v) {
    for (const auto& [r, b] : m.column(c)) {
      if (!seen[static_cast<std::size_t>(r)]) {
        seen[static_cast<std::size_t>(r)] = 1;
        touched.push_back(r);
        acc[static_cast<std::size_t>(r)] = a * b;
      } else {
        acc[static_cast<std::size_t>(r)] += a * b;
      }
    }
  }
  std::sort(touched.begin(), touched.end());
  SparseVec out;
  for (int r : touched) {
    auto& x = acc[static_cast<std::size_t>(r)];
    if (!x.is_zero()) out.emplace_back(r, x);
    seen[static_cast<std::size_t>(r)] = 0;
    x = Scalar();
  }
  return out;
}

}  // namespace

SparseMatrix sparse_multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::InvalidArgument, "sparse product shape mismatch");
  SparseMatrix out(a.rows(), b.cols());
  std::vector<Scalar> acc(static_cast<std::size_t>(a.rows()));
  std::vector<char> seen(static_cast<std::size_t>(a.rows()), 0);
  for (int c = 0; c < b.cols(); ++c) out.set_column(c, sparse_apply(a, b.column(c), acc, seen));
  return out;
}

bool sparse_equal(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int c = 0; c < a.cols(); ++c) {
    if (a.column(c) != b.column(c)) return false;
  }
  return true;
}

bool sparse_is_zero(const SparseMatrix& a) {
  for (int c = 0; c < a.cols(); ++c) {
    if (!a.column(c).empty()) return false;
  }
  return true;
}

int QuotientAlgebra::basis_index(const Monomial& m) const {
  auto it = index_.find(m.key());
  return it == index_.end() ? -1 : it->second;
}

int QuotientAlgebra::variable_index(std::string_view name) const {
  int i = ring_->find_even(name);
  if (i >= 0) return i;
  if (name.substr(0, 3) == "psi") {
    int j = std::stoi(std::string(name.substr(3)));
    if (j >= 1 && j <= ring_->odd_count()) return ring_->even_count() + j - 1;
  }
  fail(ErrorCode::VariableMismatch, "unknown variable " + std::string(name));
}

std::map<int, int> QuotientAlgebra::graded_dims() const {
  std::map<int, int> out;
  for (const auto& m : basis_) ++out[monomial_weight(*ring_, m)];
  return out;
}

std::map<int, int> QuotientAlgebra::graded_dims(const GradingTable& table) const {
  std::map<int, int> out;
  for (const auto& m : basis_) ++out[table.weight_of(*ring_, m)];
  return out;
}

Vector QuotientAlgebra::one() const {
  Vector v(basis_.size());
  if (!basis_.empty()) v[static_cast<std::size_t>(basis_index(Monomial{}))] = Scalar(1);
  return v;
}

Vector QuotientAlgebra::apply_monomial(const Monomial& m, const Vector& v) const {
  Vector out = v;
  const int E = ring_->even_count();
  for (int i = 0; i < E; ++i) {
    for (int e = 0; e < m.e[static_cast<std::size_t>(i)]; ++e) out = op(i).apply(out);
  }
  for (int j = ring_->odd_count() - 1; j >= 0; --j) {
    if (m.odd & (OddMask(1) << j)) out = op(E + j).apply(out);
  }
  return out;
}

void QuotientAlgebra::build_tree() {
  const std::size_t n = basis_.size();
  const int E = ring_->even_count();
  parent_.assign(n, -1);
  parent_var_.assign(n, -1);
  std::vector<int> depth(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Monomial m = basis_[i];
    int d = std::popcount(m.odd);
    for (int v = 0; v < E; ++v) d += m.e[static_cast<std::size_t>(v)];
    depth[i] = d;
    if (d == 0) continue;
    // apply_monomial applies the lowest odd variable last.
    if (m.odd != 0) {
      const int j = std::countr_zero(m.odd);
      m.odd &= ~(OddMask(1) << j);
      parent_var_[i] = E + j;
    } else {
      int v = 0;
      while (m.e[static_cast<std::size_t>(v)] == 0) ++v;
      --m.e[static_cast<std::size_t>(v)];
      parent_var_[i] = v;
    }
    parent_[i] = basis_index(m);
    if (parent_[i] < 0) fail(ErrorCode::Internal, "basis is not an order ideal");
  }
  tree_order_.resize(n);
  for (std::size_t i = 0; i < n; ++i) tree_order_[i] = static_cast<int>(i);
  std::stable_sort(tree_order_.begin(), tree_order_.end(),
                   [&](int a, int b) { return depth[static_cast<std::size_t>(a)] < depth[static_cast<std::size_t>(b)]; });
}

std::vector<Vector> QuotientAlgebra::basis_orbit(const Vector& v) const {
  std::vector<Vector> out(basis_.size());
  for (int i : tree_order_) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = parent_[k] < 0 ? v : op(parent_var_[k]).apply(out[static_cast<std::size_t>(parent_[k])]);
  }
  return out;
}

std::vector<Vector> QuotientAlgebra::dual_orbit(const Vector& u) const {
  // M(b_i) = x M(b_p) = +-M(b_p) x, so u^T M(b_i) = +-(u^T M(b_p)) x.
  const int E = ring_->even_count();
  std::vector<Vector> out(basis_.size());
  for (int i : tree_order_) {
    const auto k = static_cast<std::size_t>(i);
    if (parent_[k] < 0) {
      out[k] = u;
      continue;
    }
    const Vector& prev = out[static_cast<std::size_t>(parent_[k])];
    const SparseMatrix& x = op(parent_var_[k]);
    const bool negate = parent_var_[k] >= E && std::popcount(basis_[static_cast<std::size_t>(parent_[k])].odd) % 2 == 1;
    Vector row(basis_.size());
    for (int c = 0; c < x.cols(); ++c) {
      Scalar acc;
      for (const auto& [r, a] : x.column(c)) {
        const Scalar& pr = prev[static_cast<std::size_t>(r)];
        if (!pr.is_zero()) acc += pr * a;
      }
      row[static_cast<std::size_t>(c)] = negate ? -acc : acc;
    }
    out[k] = std::move(row);
  }
  return out;
}

Vector QuotientAlgebra::normal_form(const SuperPolynomial& p) const {
  check_same_ring(*p.ring(), *ring_);
  Vector out(basis_.size());
  if (basis_.empty()) return out;
  const Vector unit = one();
  for (const auto& [k, c] : p.terms()) {
    Monomial m = Monomial::from_key(k);
    int idx = basis_index(m);
    if (idx >= 0) {
      out[static_cast<std::size_t>(idx)] += c;
      continue;
    }
    Vector v = apply_monomial(m, unit);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) out[i] += c * v[i];
    }
  }
  return out;
}

Vector QuotientAlgebra::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != basis_.size() || b.size() != basis_.size()) fail(ErrorCode::InvalidArgument, "vector length mismatch");
  Vector out(basis_.size());
  const std::vector<Vector> orbit = basis_orbit(b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    const Vector& t = orbit[i];
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (!t[j].is_zero()) out[j] += a[i] * t[j];
    }
  }
  return out;
}

Matrix QuotientAlgebra::left_multiplication(const Vector& a) const {
  bool even = true;
  for (std::size_t i = 0; i < a.size() && even; ++i) {
    if (!a[i].is_zero() && std::popcount(basis_[i].odd) % 2 != 0) even = false;
  }
  // An even element supercommutes with everything, so a * b_j = b_j * a.
  if (even) return Matrix::from_columns(basis_orbit(a), dim());
  std::vector<Vector> cols;
  cols.reserve(basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j) cols.push_back(multiply(a, unit_vector(dim(), static_cast<int>(j))));
  return Matrix::from_columns(cols, dim());
}

SuperPolynomial QuotientAlgebra::to_polynomial(const Vector& v) const {
  SuperPolynomial p(ring_);
  for (std::size_t i = 0; i < v.size() && i < basis_.size(); ++i) p.add_term(basis_[i], v[i]);
  return p;
}

namespace {

// One attempt at working degree D. Returns false when the result cannot be
// certified at this degree.
bool attempt(const IdealPresentation& ideal, int D, QuotientAlgebra& out, RingPtr& ring_out,
             std::vector<Monomial>& basis_out, std::vector<SparseMatrix>& ops_out) {
  const PolyRing& ring = *ideal.ring;
  const int nvars = ring.even_count() + ring.odd_count();
  ColumnSet cs = make_columns(ring, D);
  const int ncols = static_cast<int>(cs.cols.size());

  // shift[v][c]: column of x_v * col_c with its sign.
  std::vector<std::vector<Shift>> shift(static_cast<std::size_t>(nvars), std::vector<Shift>(static_cast<std::size_t>(ncols)));
  for (int v = 0; v < nvars; ++v) {
    const Monomial x = variable_monomial(ring, v);
    for (int c = 0; c < ncols; ++c) {
      SignedMonomial p = monomial_product(ring, x, cs.cols[static_cast<std::size_t>(c)]);
      Shift& s = shift[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)];
      if (p.sign == 0) continue;
      auto it = cs.index.find(p.m.key());
      s.col = it == cs.index.end() ? -2 : it->second;
      s.sign = p.sign;
    }
  }

  SparseEchelon ech(ncols);
  std::deque<SparseVec> queue;
  for (const auto& g : ideal.generators) {
    if (g.is_zero() || g.max_weight() > D) continue;
    SparseVec row;
    for (const auto& [k, c] : g.terms()) row.emplace_back(cs.index.at(k), c);
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    queue.push_back(std::move(row));
  }
  while (!queue.empty()) {
    SparseVec v = std::move(queue.front());
    queue.pop_front();
    auto lead = ech.insert(v, true);
    if (!lead) continue;
    const SparseVec& row = ech.row_at(*lead);
    const int deg = cs.weight[static_cast<std::size_t>(*lead)];
    for (int x = 0; x < nvars; ++x) {
      if (deg + variable_weight(ring, x) > D) continue;
      SparseVec w;
      for (const auto& [c, a] : row) {
        const Shift& s = shift[static_cast<std::size_t>(x)][static_cast<std::size_t>(c)];
        if (s.col < 0) continue;
        w.emplace_back(s.col, s.sign > 0 ? a : -a);
      }
      if (w.empty()) continue;
      std::sort(w.begin(), w.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      queue.push_back(std::move(w));
    }
  }
  ech.interreduce();

  const int one_col = cs.index.at(Monomial{}.key());
  ring_out = ideal.ring;
  basis_out.clear();
  ops_out.clear();
  if (ech.is_pivot(one_col)) return true;

  std::vector<int> basis_of_col(static_cast<std::size_t>(ncols), -1);
  std::vector<int> basis_cols;
  for (int c = 0; c < ncols; ++c) {
    if (!ech.is_pivot(c)) {
      basis_of_col[static_cast<std::size_t>(c)] = static_cast<int>(basis_cols.size());
      basis_cols.push_back(c);
    }
  }
  const int n = static_cast<int>(basis_cols.size());

  // Order ideal: every divisor by one variable is standard.
  for (int c : basis_cols) {
    const Monomial& m = cs.cols[static_cast<std::size_t>(c)];
    for (int x = 0; x < nvars; ++x) {
      Monomial d = m;
      if (x < ring.even_count()) {
        auto& e = d.e[static_cast<std::size_t>(x)];
        if (e == 0) continue;
        --e;
      } else {
        OddMask bit = OddMask(1) << (x - ring.even_count());
        if (!(m.odd & bit)) continue;
        d.odd &= ~bit;
      }
      if (ech.is_pivot(cs.index.at(d.key()))) return false;
    }
  }

  // Border within D, then the operators.
  std::vector<SparseMatrix> ops;
  for (int x = 0; x < nvars; ++x) {
    SparseMatrix M(n, n);
    for (int j = 0; j < n; ++j) {
      const Shift& s = shift[static_cast<std::size_t>(x)][static_cast<std::size_t>(basis_cols[static_cast<std::size_t>(j)])];
      if (s.col == -1) continue;
      if (s.col == -2) return false;
      SparseVec colv;
      if (!ech.is_pivot(s.col)) {
        colv.emplace_back(basis_of_col[static_cast<std::size_t>(s.col)], Scalar(s.sign));
      } else {
        // Interreduced row: lead + terms on standard columns only.
        for (const auto& [c, a] : ech.row_at(s.col)) {
          if (c == s.col) continue;
          const int b = basis_of_col[static_cast<std::size_t>(c)];
          if (b < 0) fail(ErrorCode::Internal, "row not interreduced");
          colv.emplace_back(b, s.sign > 0 ? -a : a);
        }
        std::sort(colv.begin(), colv.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      }
      M.set_column(j, std::move(colv));
    }
    ops.push_back(std::move(M));
  }

  // Supercommutation.
  const int E = ring.even_count();
  for (int x = 0; x < nvars; ++x) {
    for (int y = x; y < nvars; ++y) {
      SparseMatrix xy = sparse_multiply(ops[static_cast<std::size_t>(x)], ops[static_cast<std::size_t>(y)]);
      if (x >= E && y >= E) {
        if (x == y) {
          if (!sparse_is_zero(xy)) return false;
          continue;
        }
        SparseMatrix yx = sparse_multiply(ops[static_cast<std::size_t>(y)], ops[static_cast<std::size_t>(x)]);
        // xy + yx = 0
        for (int c = 0; c < n; ++c) {
          SparseVec s = xy.column(c);
          for (const auto& t : yx.column(c)) s.push_back(t);
          std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
          for (std::size_t i = 0; i < s.size();) {
            std::size_t j = i;
            Scalar sum;
            while (j < s.size() && s[j].first == s[i].first) sum += s[j++].second;
            if (!sum.is_zero()) return false;
            i = j;
          }
        }
      } else if (x != y) {
        SparseMatrix yx = sparse_multiply(ops[static_cast<std::size_t>(y)], ops[static_cast<std::size_t>(x)]);
        if (!sparse_equal(xy, yx)) return false;
      }
    }
  }

  basis_out.reserve(static_cast<std::size_t>(n));
  for (int c : basis_cols) basis_out.push_back(cs.cols[static_cast<std::size_t>(c)]);
  ops_out = std::move(ops);
  (void)out;
  return true;
}

}  // namespace

QuotientAlgebra quotient_basis(const IdealPresentation& ideal) {
  if (!ideal.ring) fail(ErrorCode::InvalidArgument, "ideal without a ring");
  int start = ideal.initial_degree;
  for (const auto& g : ideal.generators) {
    check_same_ring(*g.ring(), *ideal.ring);
    if (ideal.initial_degree < 0) start = std::max(start, g.max_weight());
  }
  start = std::max(start, 0);
  for (int D = start; D <= ideal.degree_bound; ++D) {
    QuotientAlgebra q;
    std::vector<Monomial> basis;
    std::vector<SparseMatrix> ops;
    RingPtr ring;
    if (!attempt(ideal, D, q, ring, basis, ops)) continue;
    q.ring_ = ring;
    q.degree_ = D;
    q.basis_ = std::move(basis);
    q.ops_ = std::move(ops);
    if (q.ops_.empty()) q.ops_.assign(static_cast<std::size_t>(ring->even_count() + ring->odd_count()), SparseMatrix(0, 0));
    for (std::size_t i = 0; i < q.basis_.size(); ++i) q.index_.emplace(q.basis_[i].key(), static_cast<int>(i));
    if (q.basis_.empty()) return q;
    q.build_tree();
    bool ok = true;
    for (const auto& g : ideal.generators) {
      if (!is_zero_vector(q.normal_form(g))) {
        ok = false;
        break;
      }
    }
    if (ok) return q;
  }
  fail(ErrorCode::NotFiniteRank, "quotient did not stabilize below degree " + std::to_string(ideal.degree_bound));
}

}  // namespace fr
