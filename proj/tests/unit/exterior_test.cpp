// SPDX-License-Identifier: Apache-2.0
#include "floer_rings/exterior.hpp"

#include <vector>

#include <gtest/gtest.h>

#include "test_support.hpp"

using fr::ExteriorElement;
using fr::OddMask;
using fr::Scalar;

namespace {

// Sign of sorting the concatenated index list of A then B, by counting
// inversions; 0 on overlap.
int sign_oracle(OddMask a, OddMask b) {
  if (a & b) return 0;
  std::vector<int> seq;
  for (int i = 0; i < 32; ++i)
    if (a & (1u << i)) seq.push_back(i);
  for (int i = 0; i < 32; ++i)
    if (b & (1u << i)) seq.push_back(i);
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) inv += seq[i] > seq[j];
  return inv % 2 ? -1 : 1;
}

ExteriorElement random_element(frtest::Gen& g, int genus, int k) {
  ExteriorElement w(genus);
  for (OddMask m : fr::masks_of_degree(genus, k)) {
    if (g.range(0, 2) == 0) w.add_term(m, Scalar(g.range(-3, 3)));
  }
  return w;
}

ExteriorElement l_power(int genus, int i) { return fr::wedge_power(ExteriorElement::symplectic_form(genus), i); }

}  // namespace

TEST(Wedge, Examples) {
  const int g = 2;
  const auto p1 = ExteriorElement::psi(g, 1), p2 = ExteriorElement::psi(g, 2), p3 = ExteriorElement::psi(g, 3),
             p4 = ExteriorElement::psi(g, 4);
  EXPECT_EQ(fr::wedge(p1, p2), ExteriorElement::monomial(g, 0b11));
  EXPECT_EQ(fr::wedge(p2, p1), ExteriorElement::monomial(g, 0b11, Scalar(-1)));
  EXPECT_EQ(fr::wedge(fr::wedge(p1, p3), fr::wedge(p2, p4)), ExteriorElement::monomial(g, 0b1111, Scalar(-1)));
  EXPECT_TRUE(fr::wedge(p1, p1).is_zero());
  EXPECT_THROW(fr::wedge(p1, ExteriorElement::psi(3, 1)), fr::Error);
}

TEST(Wedge, SignMatchesInversionCount) {
  for (OddMask a = 0; a < 64; ++a)
    for (OddMask b = 0; b < 64; ++b) EXPECT_EQ(fr::wedge_sign(a, b), sign_oracle(a, b)) << a << " " << b;
}

TEST(Wedge, AssociativeAndGradedCommutative) {
  frtest::Gen g(9);
  for (int t = 0; t < 50; ++t) {
    const int genus = static_cast<int>(g.range(1, 3));
    const int ka = static_cast<int>(g.range(0, 3)), kb = static_cast<int>(g.range(0, 3)), kc = static_cast<int>(g.range(0, 2));
    const auto a = random_element(g, genus, ka), b = random_element(g, genus, kb), c = random_element(g, genus, kc);
    EXPECT_EQ(fr::wedge(fr::wedge(a, b), c), fr::wedge(a, fr::wedge(b, c)));
    const Scalar s((ka * kb) % 2 ? -1 : 1);
    EXPECT_EQ(fr::wedge(a, b), s * fr::wedge(b, a));
  }
}

TEST(Primitive, Examples) {
  EXPECT_EQ(fr::primitive_basis(1, 0).size(), 1u);
  EXPECT_EQ(fr::primitive_basis(2, 1).size(), 4u);
  EXPECT_EQ(fr::primitive_basis(2, 2).size(), 5u);
}

TEST(Primitive, DimensionFormulaAndAnnihilation) {
  for (int g = 1; g <= 6; ++g) {
    for (int k = 0; k <= g; ++k) {
      const auto& basis = fr::primitive_basis(g, k);
      EXPECT_EQ(static_cast<long long>(basis.size()), frtest::binom(2 * g, k) - frtest::binom(2 * g, k - 2)) << g << " " << k;
      if (g > 4) continue;
      const auto lp = l_power(g, g - k + 1);
      for (const auto& w : basis) EXPECT_TRUE(fr::wedge(lp, w).is_zero());
    }
  }
}

TEST(Primitive, LefschetzDimensionsSum) {
  for (int g = 1; g <= 6; ++g) {
    for (int k = 0; k <= 2 * g; ++k) {
      long long total = 0;
      for (int i = 0; 2 * i <= k; ++i) {
        const int j = k - 2 * i;
        if (j <= g && j <= 2 * g - k) total += static_cast<long long>(fr::primitive_basis(g, j).size());
      }
      EXPECT_EQ(total, frtest::binom(2 * g, k)) << g << " " << k;
    }
  }
}

TEST(Lefschetz, Examples) {
  const auto& prim = fr::primitive_basis(2, 1);
  const auto comps = fr::lefschetz_decompose(prim[0]);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].power, 0);
  EXPECT_EQ(comps[0].primitive, prim[0]);

  const auto lc = fr::lefschetz_decompose(ExteriorElement::symplectic_form(2));
  ASSERT_EQ(lc.size(), 1u);
  EXPECT_EQ(lc[0].power, 1);
  EXPECT_EQ(lc[0].primitive, ExteriorElement::one(2));

  // psi_1 psi_3 in genus 2 is psi_1 psi_{g+1}: not primitive, has an L part.
  const auto w = ExteriorElement::monomial(2, 0b0101);
  const auto parts = fr::lefschetz_decompose(w);
  EXPECT_EQ(parts.size(), 2u);
  ExteriorElement sum(2);
  for (const auto& c : parts) sum = sum + fr::wedge(l_power(2, c.power), c.primitive);
  EXPECT_EQ(sum, w);
}

TEST(Lefschetz, RandomRecombination) {
  frtest::Gen g(12);
  for (int t = 0; t < 40; ++t) {
    const int genus = static_cast<int>(g.range(1, 4));
    const int k = static_cast<int>(g.range(0, 2 * genus));
    const auto w = random_element(g, genus, k);
    ExteriorElement sum(genus);
    for (const auto& c : fr::lefschetz_decompose(w)) {
      const int pk = k - 2 * c.power;
      EXPECT_TRUE(fr::wedge(l_power(genus, genus - pk + 1), c.primitive).is_zero());
      sum = sum + fr::wedge(l_power(genus, c.power), c.primitive);
    }
    EXPECT_EQ(sum, w);
  }
}

TEST(Symplectic, GeneratorsPreserveL) {
  for (int g = 1; g <= 4; ++g) {
    const auto l = ExteriorElement::symplectic_form(g);
    EXPECT_EQ(fr::apply_symplectic_generator(l, {fr::SpKind::Identity}), l);
    for (const auto& s : fr::standard_generators(g)) EXPECT_EQ(fr::apply_symplectic_generator(l, s), l);
  }
  const auto swapped = fr::apply_symplectic_generator(ExteriorElement::psi(3, 1), {fr::SpKind::Swap, 1});
  EXPECT_EQ(swapped, ExteriorElement::psi(3, 4));
  EXPECT_EQ(fr::apply_symplectic_generator(ExteriorElement::psi(3, 4), {fr::SpKind::Swap, 1}), -ExteriorElement::psi(3, 1));
}

TEST(Symplectic, InverseAndCommutesWithL) {
  frtest::Gen g(13);
  for (int t = 0; t < 40; ++t) {
    const int genus = static_cast<int>(g.range(2, 3));
    const auto gens = fr::standard_generators(genus);
    fr::SymplecticGenerator s = gens[static_cast<std::size_t>(g.range(0, static_cast<long long>(gens.size()) - 1))];
    s.c = g.range(1, 3) * (g.coin() ? 1 : -1);
    const auto w = random_element(g, genus, static_cast<int>(g.range(0, 4)));
    EXPECT_EQ(fr::apply_symplectic_generator(fr::apply_symplectic_generator(w, s), fr::inverse_generator(s)), w);
    const auto l = ExteriorElement::symplectic_form(genus);
    EXPECT_EQ(fr::apply_symplectic_generator(fr::wedge(l, w), s), fr::wedge(l, fr::apply_symplectic_generator(w, s)));
  }
  EXPECT_THROW(fr::validate_generator({fr::SpKind::Mix, 1, 1, 1}, 2), fr::Error);
  EXPECT_THROW(fr::validate_generator({fr::SpKind::Swap, 3}, 2), fr::Error);
}
