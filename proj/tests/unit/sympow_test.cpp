// SPDX-License-Identifier: Apache-2.0
#include "floer_rings/sympow.hpp"

#include <vector>

#include <gtest/gtest.h>

#include "test_support.hpp"

using fr::Rational;
using fr::Scalar;
using fr::SuperPolynomial;

namespace {

// Betti numbers of Sym^d of a genus g surface: coefficient of x^d in
// (1 + x t)^{2g} / ((1 - x)(1 - x t^2)), as a polynomial in t.
std::vector<long long> betti_oracle(int g, int d) {
  // c[j][i]: coefficient of x^j t^i
  std::vector<std::vector<long long>> num(static_cast<std::size_t>(d + 1), std::vector<long long>(2 * d + 1, 0));
  for (int j = 0; j <= std::min(d, 2 * g); ++j) num[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = frtest::binom(2 * g, j);
  std::vector<long long> out(static_cast<std::size_t>(2 * d + 1), 0);
  // x^j from the numerator, x^a from 1/(1-x), x^b t^{2b} from 1/(1-x t^2)
  for (int j = 0; j <= d; ++j)
    for (int b = 0; j + b <= d; ++b) out[static_cast<std::size_t>(j + 2 * b)] += num[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
  return out;
}

}  // namespace

TEST(Rk, SmallCases) {
  const auto R = fr::eta_theta_ring();
  const auto eta = SuperPolynomial::variable(R, "eta"), theta = SuperPolynomial::variable(R, "theta");
  EXPECT_EQ(fr::build_Rk(2, 1, 0), eta - Scalar(Rational(1, 2)) * theta);
  for (int d = 0; d <= 3; ++d) EXPECT_EQ(fr::build_Rk(4, d, d + 1), SuperPolynomial::constant(R, Scalar(1)));
  EXPECT_EQ(fr::jk_generators(3, 2, 0).size(), 4u);
}

TEST(Betti, MatchesGeneratingFunction) {
  for (int g = 1; g <= 4; ++g) {
    for (int d = 1; d <= g - 1; ++d) {
      const auto s = fr::build_sympow(g, d);
      const auto want = betti_oracle(g, d);
      ASSERT_EQ(s.betti.size(), want.size());
      long long total = 0;
      for (std::size_t i = 0; i < want.size(); ++i) {
        EXPECT_EQ(s.betti[i], want[i]) << g << " " << d << " " << i;
        total += s.betti[i];
      }
      EXPECT_EQ(total, s.quotient.dim());
    }
  }
}

TEST(Betti, Genus2Degree1) {
  const auto s = fr::build_sympow(2, 1);
  EXPECT_EQ(s.betti, (std::vector<int>{1, 4, 1}));
}

TEST(Theta, IsSymplecticSum) {
  const auto R = fr::sympow_ring(3);
  SuperPolynomial want(R);
  for (int i = 1; i <= 3; ++i) want = want + SuperPolynomial::psi(R, i) * SuperPolynomial::psi(R, 3 + i);
  EXPECT_EQ(fr::theta_element(R), want);
  EXPECT_EQ(fr::leading_primitive(R, 2), SuperPolynomial::psi(R, 1) * SuperPolynomial::psi(R, 2));
}

TEST(Checks, AllPassUpToGenus4) {
  for (int g = 2; g <= 4; ++g) {
    for (int d = 1; d <= g - 1; ++d) {
      const auto s = fr::build_sympow(g, d);
      EXPECT_TRUE(frtest::all_pass(fr::verify_presentation(s))) << g << " " << d;
      EXPECT_TRUE(frtest::all_pass(fr::poincare_pairing_check(s))) << g << " " << d;
      EXPECT_TRUE(frtest::all_pass(fr::check_sympow_structure(s))) << g << " " << d;
    }
  }
}

TEST(EtaTheta, QuotientDimensionIsSliceSum) {
  // C[eta, theta]/J_k has Gr_theta slices of dimension [(d - k - i)/2] + 1.
  for (int d = 1; d <= 3; ++d) {
    for (int k = 0; k <= d; ++k) {
      int want = 0;
      for (int i = 0; i <= d - k; ++i) want += (d - k - i) / 2 + 1;
      EXPECT_EQ(fr::eta_theta_quotient(fr::jk_generators(4, d, k)).dim(), want) << d << " " << k;
    }
  }
}
