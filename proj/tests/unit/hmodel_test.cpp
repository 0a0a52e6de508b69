// SPDX-License-Identifier: Apache-2.0
#include "floer_rings/hmodel.hpp"

#include <memory>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace {

fr::ArtinianAtlas atlas(int g) {
  return fr::split_atlas(
      std::make_shared<const fr::FloerRing>(fr::build_floer(g, fr::PerturbationProfile::unperturbed())));
}

}  // namespace

TEST(HrModel, DimensionIsBlockSum) {
  for (int g = 1; g <= 4; ++g) {
    const auto a = atlas(g);
    for (int r = -(g - 1); r <= g - 1; ++r) {
      const fr::HrModel h(a, r);
      EXPECT_EQ(h.l(), g - std::abs(r) - 1);
      long long want = 0;
      for (int k = 0; k < g - std::abs(r); ++k) {
        const auto* p = a.find(k, r);
        ASSERT_NE(p, nullptr);
        want += (frtest::binom(2 * g, k) - frtest::binom(2 * g, k - 2)) * p->local.rank;
      }
      EXPECT_EQ(h.dim(), want) << g << " " << r;
      EXPECT_EQ(static_cast<int>(h.blocks().size()), g - std::abs(r));
    }
  }
}

TEST(HrModel, GeneratorImageIsNonzero) {
  const auto a = atlas(3);
  const fr::HrModel h(a, 0);
  EXPECT_FALSE(h.image(0, 0).empty());
  // beta-bar^a kills everything once a exceeds the piece nilpotency bound.
  EXPECT_TRUE(h.image(2 * 3, 0).empty());
}

TEST(QuotientBounds, AllPassUpToGenus4) {
  for (int g = 1; g <= 4; ++g) {
    const auto rs = fr::verify_quotient_bounds(atlas(g));
    EXPECT_FALSE(rs.empty());
    EXPECT_TRUE(frtest::all_pass(rs));
  }
}

TEST(QuotientBounds, CoversEveryCheckKind) {
  const auto rs = fr::verify_quotient_bounds(atlas(3));
  for (const char* name : {"hr.cyclic", "bounds.piece_nilpotent", "bounds.degree", "bounds.betabar_power", "bounds.psi_ideal"}) {
    bool seen = false;
    for (const auto& r : rs) seen = seen || r.check == name;
    EXPECT_TRUE(seen) << name;
  }
}
