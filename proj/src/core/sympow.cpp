// SPDX-License-Identifier: Apache-2.0
#include "floer_rings/sympow.hpp"

#include <algorithm>

#include "floer_rings/split.hpp"

namespace fr {

namespace {

Rational binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  Rational c(1);
  for (int i = 1; i <= k; ++i) c = c * Rational(n - k + i, i);
  return c;
}

Rational factorial(int n) {
  Rational c(1);
  for (int i = 2; i <= n; ++i) c = c * Rational(i);
  return c;
}

int floor_half(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

void check_gd(int g, int d) {
  check_genus(g);
  if (g < 1) fail(ErrorCode::OutOfRange, "genus must be at least 1");
  if (d < 0) fail(ErrorCode::OutOfRange, "degree must be non-negative");
}

Json with(Json base, const Json& extra) {
  base.update(extra);
  return base;
}

Json int_list(const std::vector<int>& v) {
  Json j = Json::array();
  for (int x : v) j.push_back(x);
  return j;
}

// Cohomological degree of each basis monomial.
std::vector<int> basis_degrees(const QuotientAlgebra& q) {
  std::vector<int> out;
  for (const auto& m : q.basis()) out.push_back(monomial_weight(*q.ring(), m));
  return out;
}

}  // namespace

RingPtr sympow_ring(int g) {
  check_genus(g);
  return PolyRing::make({{"eta", 2, 0}}, g, 1);
}

RingPtr eta_theta_ring() {
  static const RingPtr ring = PolyRing::make({{"eta", 1, 0}, {"theta", 1, 0}}, 0, 1);
  return ring;
}

SuperPolynomial theta_element(const RingPtr& ring) {
  const int g = ring->genus();
  SuperPolynomial t(ring);
  for (int i = 1; i <= g; ++i) t = t + SuperPolynomial::psi(ring, i) * SuperPolynomial::psi(ring, g + i);
  return t;
}

IdealPresentation macdonald_ideal(int g, int d, int window) {
  check_gd(g, d);
  if (window < 1) fail(ErrorCode::OutOfRange, "window must be positive");
  RingPtr ring = sympow_ring(g);
  const SuperPolynomial eta = SuperPolynomial::variable(ring, "eta");
  IdealPresentation ideal;
  ideal.ring = ring;
  // Each index in {1..g} is unused, in I, in J or in K.
  std::vector<int> role(static_cast<std::size_t>(g), 0);
  long long total = 1;
  for (int i = 0; i < g; ++i) total *= 4;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    int s = 0;
    for (int i = 0; i < g; ++i) {
      role[static_cast<std::size_t>(i)] = static_cast<int>(c % 4);
      c /= 4;
      s += role[static_cast<std::size_t>(i)] == 1 ? 2 : (role[static_cast<std::size_t>(i)] == 0 ? 0 : 1);
    }
    if (s > d + window) continue;
    SuperPolynomial base = SuperPolynomial::constant(ring, Scalar(1));
    for (int i = 0; i < g; ++i) {
      const int ri = role[static_cast<std::size_t>(i)];
      if (ri == 1) base = base * (eta - SuperPolynomial::psi(ring, i + 1) * SuperPolynomial::psi(ring, g + i + 1));
      if (ri == 2) base = base * SuperPolynomial::psi(ring, i + 1);
      if (ri == 3) base = base * SuperPolynomial::psi(ring, g + i + 1);
    }
    for (int r = std::max(0, d + 1 - s); r + s <= d + window; ++r) ideal.generators.push_back(eta.pow(r) * base);
  }
  ideal.degree_bound = 2 * d + window + 4;
  return ideal;
}

SymmetricProductRing build_sympow(int g, int d) {
  SymmetricProductRing s;
  s.genus = g;
  s.degree = d;
  s.quotient = quotient_basis(macdonald_ideal(g, d));
  s.betti.assign(static_cast<std::size_t>(2 * d + 1), 0);
  for (const auto& [w, n] : s.quotient.graded_dims()) {
    if (w < 0 || w > 2 * d) fail(ErrorCode::StructureMismatch, "class outside degrees 0..2d");
    s.betti[static_cast<std::size_t>(w)] = n;
  }
  return s;
}

SuperPolynomial build_Rk(int g, int d, int k) {
  check_gd(g, d);
  if (d > g - 1) fail(ErrorCode::OutOfRange, "the closed form needs d <= g-1");
  if (k < 0 || k > d + 1) fail(ErrorCode::OutOfRange, "k out of range");
  RingPtr ring = eta_theta_ring();
  if (k == d + 1) return SuperPolynomial::constant(ring, Scalar(1));
  const int a = floor_half(d - k) + 1;
  const SuperPolynomial eta = SuperPolynomial::variable(ring, "eta");
  const SuperPolynomial theta = SuperPolynomial::variable(ring, "theta");
  SuperPolynomial out(ring);
  for (int i = 0; i <= a; ++i) {
    Rational c = binom(d - k - a + 1, i) / binom(g - k, i) / factorial(i);
    if (i % 2 == 1) c = -c;
    out = out + Scalar(c) * theta.pow(i) * eta.pow(a - i);
  }
  return out;
}

std::vector<SuperPolynomial> jk_generators(int g, int d, int k) {
  const SuperPolynomial theta = SuperPolynomial::variable(eta_theta_ring(), "theta");
  std::vector<SuperPolynomial> out;
  for (int j = 0; k + j <= d + 1; ++j) out.push_back(theta.pow(j) * build_Rk(g, d, k + j));
  return out;
}

QuotientAlgebra eta_theta_quotient(const std::vector<SuperPolynomial>& generators) {
  IdealPresentation ideal;
  ideal.ring = eta_theta_ring();
  ideal.generators = generators;
  ideal.degree_bound = 64;
  return quotient_basis(ideal);
}

SuperPolynomial to_sympow(const SuperPolynomial& p, const RingPtr& target) {
  return map_polynomial(p, target, {SuperPolynomial::variable(target, "eta"), theta_element(target)});
}

Vector apply_theta(const QuotientAlgebra& q, const Vector& v) {
  const int g = q.ring()->genus();
  const int E = q.ring()->even_count();
  Vector out(v.size());
  for (int i = 0; i < g; ++i) {
    Vector w = q.op(E + i).apply(q.op(E + g + i).apply(v));
    for (std::size_t j = 0; j < w.size(); ++j) out[j] += w[j];
  }
  return out;
}

std::vector<std::vector<Vector>> eta_theta_orbit(const QuotientAlgebra& q, const Vector& omega) {
  std::vector<std::vector<Vector>> levels;
  const SparseMatrix& eta = q.operator_of("eta");
  std::vector<Vector> cur{omega};
  while (true) {
    bool any = false;
    for (const auto& v : cur) any = any || !is_zero_vector(v);
    if (!any) break;
    levels.push_back(cur);
    // next[0] = theta^{w+1} omega, next[j] = eta * cur[j-1].
    std::vector<Vector> next;
    next.push_back(apply_theta(q, cur.front()));
    for (const auto& v : cur) next.push_back(eta.apply(v));
    cur = std::move(next);
  }
  return levels;
}

SuperPolynomial leading_primitive(const RingPtr& ring, int k) {
  SuperPolynomial w = SuperPolynomial::constant(ring, Scalar(1));
  for (int i = 1; i <= k; ++i) w = w * SuperPolynomial::psi(ring, i);
  return w;
}

std::vector<CheckResult> verify_presentation(const SymmetricProductRing& s) {
  std::vector<CheckResult> out;
  const int g = s.genus;
  const int d = s.degree;
  const QuotientAlgebra& q = s.quotient;
  const RingPtr& ring = q.ring();
  const Json base = {{"genus", g}, {"d", d}};
  if (d > g - 1) {
    out.push_back(make_check("sympow.membership", false, base, {{"reason", "presentation requires d <= g-1"}}));
    return out;
  }

  std::vector<int> predicted(static_cast<std::size_t>(2 * d + 1), 0);
  for (int k = 0; k <= d; ++k) {
    const Json kb = with(base, {{"k", k}});
    const SuperPolynomial omega = leading_primitive(ring, k);

    // Every generator of J_k kills psi_1...psi_k.
    {
      bool ok = true;
      Json witness = nullptr;
      const auto gens = jk_generators(g, d, k);
      for (std::size_t j = 0; j < gens.size() && ok; ++j) {
        if (!is_zero_vector(q.normal_form(omega * to_sympow(gens[j], ring)))) {
          ok = false;
          witness = {{"generator", j == 0 ? "R_k" : "theta^" + std::to_string(j) + "*R_{k+" + std::to_string(j) + "}"},
                     {"polynomial", gens[j].to_string()}};
        }
      }
      out.push_back(make_check("sympow.membership", ok, with(kb, {{"R_k", build_Rk(g, d, k).to_string()}}), witness));
    }

    // Graded dimensions of C[eta, theta] psi_1...psi_k against C[eta, theta]/J_k.
    const QuotientAlgebra bk = eta_theta_quotient(jk_generators(g, d, k));
    std::vector<int> want(static_cast<std::size_t>(2 * d + 1), 0);
    for (const auto& [w, n] : bk.graded_dims()) {
      const int deg = 2 * w + k;
      if (deg > 2 * d) {
        want.assign(want.size(), -1);
        break;
      }
      want[static_cast<std::size_t>(deg)] = n;
    }
    std::vector<int> got(static_cast<std::size_t>(2 * d + 1), 0);
    const auto levels = eta_theta_orbit(q, q.normal_form(omega));
    for (std::size_t w = 0; w < levels.size(); ++w) {
      const int deg = 2 * static_cast<int>(w) + k;
      if (deg <= 2 * d) got[static_cast<std::size_t>(deg)] = rank(Matrix::from_columns(levels[w], q.dim()));
    }
    const int mult = static_cast<int>(primitive_basis(g, k).size());
    for (int j = 0; j <= 2 * d; ++j) predicted[static_cast<std::size_t>(j)] += mult * std::max(want[static_cast<std::size_t>(j)], 0);
    out.push_back(make_check("sympow.isotypic", got == want, with(kb, {{"blockDims", int_list(got)}, {"multiplicity", mult}}),
                             {{"expected", int_list(want)}, {"got", int_list(got)}}));

    // (R_k, theta R_{k+1}) generates J_k.
    {
      bool ok = true;
      Json witness = nullptr;
      const auto gens = jk_generators(g, d, k);
      std::vector<SuperPolynomial> two(gens.begin(), gens.begin() + std::min<std::size_t>(2, gens.size()));
      try {
        const QuotientAlgebra a2 = eta_theta_quotient(two);
        for (std::size_t j = 0; j < gens.size() && ok; ++j) {
          if (!is_zero_vector(a2.normal_form(gens[j]))) {
            ok = false;
            witness = {{"generator", gens[j].to_string()}};
          }
        }
        if (ok && a2.dim() != bk.dim()) {
          ok = false;
          witness = {{"dimTwoGenerators", a2.dim()}, {"dimJk", bk.dim()}};
        }
      } catch (const Error& e) {
        ok = false;
        witness = {{"error", e.what()}};
      }
      out.push_back(make_check("sympow.ideal_equality", ok, with(kb, {{"dim", bk.dim()}}), witness));
    }

    // Two-step recurrences linking R_k, R_{k+1}, R_{k+2}.
    if (k + 2 <= d + 1) {
      const RingPtr et = eta_theta_ring();
      const SuperPolynomial eta = SuperPolynomial::variable(et, "eta");
      const SuperPolynomial theta = SuperPolynomial::variable(et, "theta");
      const int a = floor_half(d - k) + 1;
      const Rational den = Rational((g - k) * (g - k - 1));
      SuperPolynomial rhs(et);
      if ((d - k) % 2 != 0) {
        rhs = build_Rk(g, d, k + 1) - Scalar(Rational(g - k - a) / den) * theta * build_Rk(g, d, k + 2);
      } else {
        rhs = eta * build_Rk(g, d, k + 1) + Scalar(Rational(a - 1) / den) * theta * build_Rk(g, d, k + 2);
      }
      const SuperPolynomial lhs = build_Rk(g, d, k);
      out.push_back(make_check("sympow.recurrence", lhs == rhs, with(kb, {{"parity", (d - k) % 2 == 0 ? "even" : "odd"}}),
                               {{"R_k", lhs.to_string()}, {"recurrence", rhs.to_string()}}));
    }
  }
  out.push_back(make_check("sympow.betti_sum", predicted == s.betti, with(base, {{"betti", int_list(s.betti)}}),
                           {{"predicted", int_list(predicted)}}));
  return out;
}

std::vector<CheckResult> poincare_pairing_check(const SymmetricProductRing& s) {
  std::vector<CheckResult> out;
  const QuotientAlgebra& q = s.quotient;
  const int d = s.degree;
  const Json base = {{"genus", s.genus}, {"d", d}};
  const std::vector<int> deg = basis_degrees(q);
  std::vector<int> top;
  for (int i = 0; i < q.dim(); ++i) {
    if (deg[static_cast<std::size_t>(i)] == 2 * d) top.push_back(i);
  }
  if (top.size() != 1) {
    out.push_back(make_check("sympow.pairing", false, base, {{"reason", "top degree is not one-dimensional"}, {"topDim", top.size()}}));
    return out;
  }
  Vector u(static_cast<std::size_t>(q.dim()));
  u[static_cast<std::size_t>(top.front())] = Scalar(1);
  const std::vector<Vector> rows = q.dual_orbit(u);
  for (int i = 0; i <= 2 * d; ++i) {
    std::vector<int> left;
    std::vector<int> right;
    for (int j = 0; j < q.dim(); ++j) {
      if (deg[static_cast<std::size_t>(j)] == i) left.push_back(j);
      if (deg[static_cast<std::size_t>(j)] == 2 * d - i) right.push_back(j);
    }
    // Row a: phi(b_a * b_c) for c of complementary degree.
    Matrix m(static_cast<int>(left.size()), static_cast<int>(right.size()));
    for (std::size_t a = 0; a < left.size(); ++a) {
      for (std::size_t c = 0; c < right.size(); ++c) {
        m(static_cast<int>(a), static_cast<int>(c)) = rows[static_cast<std::size_t>(left[a])][static_cast<std::size_t>(right[c])];
      }
    }
    const int rk = rank(m);
    const bool ok = left.size() == right.size() && rk == static_cast<int>(left.size());
    out.push_back(make_check("sympow.pairing", ok, with(base, {{"degree", i}, {"size", left.size()}, {"rank", rk}}),
                             {{"complementSize", right.size()}}));
  }
  return out;
}

std::vector<CheckResult> check_sympow_structure(const SymmetricProductRing& s) {
  std::vector<CheckResult> out;
  const int g = s.genus;
  const int d = s.degree;
  const QuotientAlgebra& q = s.quotient;
  const RingPtr& ring = q.ring();
  const Json base = {{"genus", g}, {"d", d}};

  {
    bool ok = !s.betti.empty() && s.betti.front() == 1;
    for (std::size_t i = 0; i < s.betti.size(); ++i) ok = ok && s.betti[i] == s.betti[s.betti.size() - 1 - i];
    if (d > 0) ok = ok && s.betti[1] == 2 * g;
    out.push_back(make_check("sympow.duality", ok, with(base, {{"betti", int_list(s.betti)}})));
  }

  {
    bool ok = true;
    Json witness = nullptr;
    for (int k = d + 1; k <= g && ok; ++k) {
      for (const auto& w : primitive_basis(g, k)) {
        if (!is_zero_vector(q.normal_form(SuperPolynomial::from_exterior(ring, w)))) {
          ok = false;
          witness = {{"k", k}, {"primitive", w.to_string()}};
          break;
        }
      }
    }
    out.push_back(make_check("sympow.primitive_vanishing", ok, base, witness));
  }

  // Invariant subspace, one degree at a time.
  {
    const std::vector<int> deg = basis_degrees(q);
    const auto gens = standard_generators(g);
    const SuperPolynomial eta = SuperPolynomial::variable(ring, "eta");
    bool ok = true;
    Json dims = Json::array();
    Json witness = nullptr;
    for (int i = 0; i <= 2 * d; ++i) {
      std::vector<int> idx;
      for (int j = 0; j < q.dim(); ++j) {
        if (deg[static_cast<std::size_t>(j)] == i) idx.push_back(j);
      }
      const int n = static_cast<int>(idx.size());
      Matrix space = Matrix::identity(n);
      for (const auto& sg : gens) {
        if (space.cols() == 0) break;
        Matrix act(n, n);
        for (int c = 0; c < n; ++c) {
          const Monomial& m = q.basis()[static_cast<std::size_t>(idx[static_cast<std::size_t>(c)])];
          const ExteriorElement moved = apply_symplectic_generator(ExteriorElement::monomial(g, m.odd), sg);
          const Vector v = q.normal_form(eta.pow(m.e[0]) * SuperPolynomial::from_exterior(ring, moved));
          for (int r = 0; r < n; ++r) act(r, c) = v[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])];
          act(c, c) -= Scalar(1);
        }
        Matrix k = kernel(act * space);
        space = space * k;
      }
      // Span of eta^a theta^b in degree i.
      std::vector<Vector> et;
      if (i % 2 == 0) {
        const SuperPolynomial theta = theta_element(ring);
        for (int a = 0; 2 * a <= i; ++a) {
          const Vector v = q.normal_form(eta.pow(a) * theta.pow(i / 2 - a));
          Vector w(static_cast<std::size_t>(n));
          for (int r = 0; r < n; ++r) w[static_cast<std::size_t>(r)] = v[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])];
          et.push_back(std::move(w));
        }
      }
      const int et_dim = et.empty() ? 0 : rank(Matrix::from_columns(et, n));
      dims.push_back({{"degree", i}, {"invariant", space.cols()}, {"etaTheta", et_dim}});
      if (space.cols() != et_dim && ok) {
        ok = false;
        witness = {{"degree", i}, {"invariant", space.cols()}, {"etaTheta", et_dim}};
      }
    }
    out.push_back(make_check("sympow.invariants", ok, with(base, {{"dims", dims}}), witness));
  }

  {
    bool ok = true;
    Json witness = nullptr;
    const IdealPresentation wide = macdonald_ideal(g, d, 3);
    for (const auto& gen : wide.generators) {
      if (gen.max_weight() <= d + 2) continue;
      if (!is_zero_vector(q.normal_form(gen))) {
        ok = false;
        witness = {{"generator", gen.to_string()}};
        break;
      }
    }
    out.push_back(make_check("sympow.stabilization", ok, base, witness));
  }
  return out;
}

}  // namespace fr
