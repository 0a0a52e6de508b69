// SPDX-License-Identifier: Apache-2.0
#include "floer_rings/polyring.hpp"

#include <gtest/gtest.h>

#include "floer_rings/floer.hpp"
#include "floer_rings/quotient.hpp"
#include "test_support.hpp"

using fr::IdealPresentation;
using fr::Monomial;
using fr::PolyRing;
using fr::QuotientAlgebra;
using fr::RingPtr;
using fr::Scalar;
using fr::SuperPolynomial;
using fr::Vector;

namespace {

RingPtr ab_ring() { return PolyRing::make({{"alpha", 1, 0}, {"beta", 1, 0}}); }

SuperPolynomial var(const RingPtr& r, const char* name) { return SuperPolynomial::variable(r, name); }
SuperPolynomial c(const RingPtr& r, long long v) { return SuperPolynomial::constant(r, Scalar(v)); }

SuperPolynomial random_poly(frtest::Gen& g, const RingPtr& r, int terms) {
  SuperPolynomial p(r);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int i = 0; i < r->even_count(); ++i) m.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(g.range(0, 2));
    for (int i = 0; i < r->odd_count(); ++i)
      if (g.range(0, 2) == 0) m.odd |= fr::OddMask(1) << i;
    p.add_term(m, Scalar(g.range(-3, 3)));
  }
  return p;
}

bool ops_commute(const QuotientAlgebra& q) {
  const int e = q.ring()->even_count();
  for (int a = 0; a < q.variable_count(); ++a) {
    for (int b = a + 1; b < q.variable_count(); ++b) {
      const auto ab = fr::sparse_multiply(q.op(a), q.op(b));
      const auto ba = fr::sparse_multiply(q.op(b), q.op(a));
      if (a >= e && b >= e) {
        // odd operators anticommute
        const auto da = ab.to_dense(), db = ba.to_dense();
        if (!(da + db).is_zero()) return false;
      } else if (!fr::sparse_equal(ab, ba)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST(SuperPolynomial, SupercommutativeProducts) {
  RingPtr r = PolyRing::make({{"x", 1, 0}}, 2);
  const auto p1 = SuperPolynomial::psi(r, 1), p2 = SuperPolynomial::psi(r, 2);
  EXPECT_EQ(p1 * p2, -(p2 * p1));
  EXPECT_TRUE((p1 * p1).is_zero());
  EXPECT_EQ(var(r, "x") * p1, p1 * var(r, "x"));
  EXPECT_EQ((var(r, "x") + c(r, 1)).pow(2), var(r, "x").pow(2) + Scalar(2) * var(r, "x") + c(r, 1));
}

TEST(SuperPolynomial, RingLawsRandom) {
  frtest::Gen g(31);
  RingPtr r = PolyRing::make({{"x", 1, 0}, {"y", 2, 0}}, 2);
  for (int t = 0; t < 60; ++t) {
    const auto a = random_poly(g, r, 4), b = random_poly(g, r, 4), d = random_poly(g, r, 3);
    EXPECT_EQ((a * b) * d, a * (b * d));
    EXPECT_EQ(a * (b + d), a * b + a * d);
    EXPECT_EQ((a + b) - b, a);
  }
}

TEST(SuperPolynomial, CappedVariable) {
  RingPtr r = PolyRing::make({{"alpha", 1, 0}, {"t", 0, 3}});
  const auto t = var(r, "t");
  EXPECT_FALSE(t.pow(2).is_zero());
  EXPECT_TRUE(t.pow(3).is_zero());
  EXPECT_EQ(r->base_variable(), 1);
}

TEST(SuperPolynomial, MapIsHomomorphism) {
  frtest::Gen g(32);
  RingPtr src = ab_ring();
  RingPtr dst = PolyRing::make({{"u", 1, 0}, {"v", 1, 0}});
  const std::vector<SuperPolynomial> images{var(dst, "u") + c(dst, 2), var(dst, "u") * var(dst, "v") - var(dst, "v")};
  for (int t = 0; t < 30; ++t) {
    const auto a = random_poly(g, src, 3), b = random_poly(g, src, 3);
    EXPECT_EQ(fr::map_polynomial(a * b, dst, images), fr::map_polynomial(a, dst, images) * fr::map_polynomial(b, dst, images));
    EXPECT_EQ(fr::map_polynomial(a + b, dst, images), fr::map_polynomial(a, dst, images) + fr::map_polynomial(b, dst, images));
  }
  EXPECT_THROW(fr::check_same_ring(*src, *dst), fr::Error);
}

TEST(Grading, TwoTablesDiffer) {
  RingPtr r = PolyRing::make({{"betabar", 1, 0}, {"gamma", 1, 0}}, 1);
  Monomial m;
  m.e[0] = 2;  // betabar^2
  m.e[1] = 1;  // gamma
  m.odd = 1;   // psi_1
  EXPECT_EQ(fr::d_grading().weight_of(*r, m), 2 * 2 + 2 + 1);
  EXPECT_EQ(fr::monomial_count_grading().weight_of(*r, m), 2 + 1 + 1);
  RingPtr other = PolyRing::make({{"alpha", 1, 0}});
  Monomial a;
  a.e[0] = 1;
  EXPECT_THROW(fr::d_grading().weight_of(*other, a), fr::Error);
}

TEST(Quotient, PointQuotient) {
  RingPtr r = ab_ring();
  const QuotientAlgebra q = fr::quotient_basis({r, {var(r, "alpha"), var(r, "beta") - c(r, 8)}});
  EXPECT_EQ(q.dim(), 1);
  EXPECT_EQ(q.normal_form(var(r, "beta")), (Vector{Scalar(8)}));
}

TEST(Quotient, TwoVariableJ2) {
  RingPtr r = ab_ring();
  const auto a = var(r, "alpha"), b = var(r, "beta");
  const QuotientAlgebra q = fr::quotient_basis({r, {a * a + b - c(r, 8), (b + c(r, 8)) * a}});
  ASSERT_EQ(q.dim(), 3);
  // basis {1, alpha, beta} up to order
  for (const auto& p : {c(r, 1), a, b}) {
    const Vector v = q.normal_form(p);
    int nonzero = 0;
    for (const auto& x : v) nonzero += !x.is_zero();
    EXPECT_EQ(nonzero, 1);
  }
  // generators reduce to zero
  EXPECT_TRUE(fr::is_zero_vector(q.normal_form(a * a + b - c(r, 8))));
  EXPECT_TRUE(ops_commute(q));
}

TEST(Quotient, NormalFormInTbar30) {
  // Hand expansion of the recursion: R-bar^1_3 = alpha(alpha^2 + 5 beta + 24),
  // R-bar^2_3 = (beta - 8)(alpha^2 + beta - 8).
  RingPtr r = fr::floer_bar_ring(0);
  const auto a = var(r, "alpha"), b = var(r, "beta");
  const auto rel = fr::build_bar_relations(3, 3, fr::PerturbationProfile::unperturbed());
  EXPECT_EQ(rel[3].r1, a * (a * a + Scalar(5) * b + c(r, 24)));
  EXPECT_EQ(rel[3].r2, (b - c(r, 8)) * (a * a + b - c(r, 8)));
  const QuotientAlgebra q = fr::build_Tbar(3, 0, fr::PerturbationProfile::unperturbed());
  EXPECT_EQ(q.dim(), 6);
  EXPECT_EQ(q.normal_form(a.pow(3)), q.normal_form(Scalar(-5) * a * b - Scalar(24) * a));
}

TEST(Quotient, OperatorsConsistentWithNormalForms) {
  const QuotientAlgebra q = fr::build_T(3, 0, fr::PerturbationProfile::unperturbed());
  EXPECT_EQ(q.dim(), 10);
  EXPECT_TRUE(ops_commute(q));
  frtest::Gen g(33);
  const auto& basis = q.basis();
  for (int t = 0; t < 30; ++t) {
    const auto i = static_cast<std::size_t>(g.range(0, q.dim() - 1));
    const auto j = static_cast<std::size_t>(g.range(0, q.dim() - 1));
    const auto pi = SuperPolynomial::monomial(q.ring(), basis[i]);
    const auto pj = SuperPolynomial::monomial(q.ring(), basis[j]);
    const Vector vi = q.normal_form(pi), vj = q.normal_form(pj);
    EXPECT_EQ(q.multiply(vi, vj), q.normal_form(pi * pj));
    EXPECT_EQ(q.left_multiplication(vi).apply(vj), q.multiply(vi, vj));
  }
  // orbit helpers agree with explicit products
  Vector v(static_cast<std::size_t>(q.dim()));
  for (auto& x : v) x = Scalar(g.range(-2, 2));
  const auto orbit = q.basis_orbit(v);
  const auto dual = q.dual_orbit(v);
  for (int i = 0; i < q.dim(); ++i) {
    const Vector bi = q.normal_form(SuperPolynomial::monomial(q.ring(), basis[static_cast<std::size_t>(i)]));
    EXPECT_EQ(orbit[static_cast<std::size_t>(i)], q.multiply(bi, v));
    EXPECT_EQ(dual[static_cast<std::size_t>(i)], q.left_multiplication(bi).transpose().apply(v));
  }
}

TEST(Quotient, OddVariables) {
  RingPtr r = PolyRing::make({{"x", 1, 0}}, 1);
  const auto x = var(r, "x");
  const QuotientAlgebra q = fr::quotient_basis({r, {x * x, x * SuperPolynomial::psi(r, 1), x * SuperPolynomial::psi(r, 2)}});
  EXPECT_EQ(q.dim(), 5);
  EXPECT_TRUE(ops_commute(q));
  const Vector p12 = q.normal_form(SuperPolynomial::psi(r, 1) * SuperPolynomial::psi(r, 2));
  const Vector p21 = q.normal_form(SuperPolynomial::psi(r, 2) * SuperPolynomial::psi(r, 1));
  EXPECT_EQ(p12, fr::scale(Scalar(-1), p21));
  EXPECT_EQ(q.to_polynomial(p12), SuperPolynomial::psi(r, 1) * SuperPolynomial::psi(r, 2));
}

TEST(Quotient, InfiniteRankIsRejected) {
  RingPtr r = ab_ring();
  IdealPresentation ideal{r, {var(r, "alpha")}, 6};
  try {
    fr::quotient_basis(ideal);
    FAIL() << "expected NotFiniteRank";
  } catch (const fr::Error& e) {
    EXPECT_EQ(e.code(), fr::ErrorCode::NotFiniteRank);
  }
}

TEST(Quotient, Deterministic) {
  const QuotientAlgebra a = fr::build_T(3, 0, fr::PerturbationProfile::unperturbed());
  const QuotientAlgebra b = fr::build_T(3, 0, fr::PerturbationProfile::unperturbed());
  ASSERT_EQ(a.dim(), b.dim());
  EXPECT_EQ(a.basis(), b.basis());
  for (int v = 0; v < a.variable_count(); ++v) EXPECT_TRUE(fr::sparse_equal(a.op(v), b.op(v)));
}
