// SPDX-License-Identifier: Apache-2.0
#include "floer_rings/adjunct.hpp"

#include <cstdlib>

#include <gtest/gtest.h>

#include "test_support.hpp"

using fr::AdjunctionCase;

namespace {

AdjunctionCase make(int g, int s, long long k, bool odd = false) {
  AdjunctionCase c;
  c.genus = g;
  c.self_int = s;
  c.k_dot_sigma = k;
  c.odd_class = odd;
  return c;
}

// Blow-up oracle: K.Sigma moves by sign(K.Sigma) (sign 0 = +1) per point.
long long reduced_k(long long k, int s) {
  for (int i = 0; i < s; ++i) k += k >= 0 ? 1 : -1;
  return k;
}

fr::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const fr::Error& e) {
    return e.code();
  }
  return fr::ErrorCode::Internal;
}

}  // namespace

TEST(Reduce, Examples) {
  const auto r = fr::reduce(make(2, 3, 1));
  EXPECT_EQ(r.trace.blow_ups, 3);
  EXPECT_EQ(r.trace.k_dot_sigma, 4);
  EXPECT_EQ(r.reduced.self_int, 0);
  EXPECT_TRUE(r.reduced.odd_class);
  EXPECT_EQ(r.reduced.genus, 2);
  EXPECT_EQ(fr::adjunction_invariant(make(2, 3, 1)), 4);

  const auto n = fr::reduce(make(1, 1, -1));
  EXPECT_EQ(n.trace.signs, (std::vector<int>{-1}));
  EXPECT_EQ(n.trace.k_dot_sigma, -2);
}

TEST(Reduce, MatchesOracleAndPreservesInvariant) {
  frtest::Gen gen(41);
  for (int t = 0; t < 300; ++t) {
    const auto c = make(static_cast<int>(gen.range(1, 6)), static_cast<int>(gen.range(1, 8)), gen.range(-12, 12));
    const auto r = fr::reduce(c);
    EXPECT_EQ(r.trace.k_dot_sigma, reduced_k(c.k_dot_sigma, c.self_int));
    EXPECT_EQ(static_cast<int>(r.trace.signs.size()), c.self_int);
    EXPECT_EQ(fr::adjunction_invariant(r.reduced), std::llabs(c.k_dot_sigma) + c.self_int);
  }
}

TEST(Reduce, NotApplicableAndInvalid) {
  EXPECT_EQ(code_of([] { fr::reduce(make(2, 0, 2)); }), fr::ErrorCode::NotApplicable);
  EXPECT_EQ(code_of([] { fr::reduce(make(2, -1, 2)); }), fr::ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { fr::reduce(make(0, 1, 2)); }), fr::ErrorCode::InvalidArgument);
}

TEST(TheoremA, EqualityAndViolation) {
  auto c = make(3, 0, 4, true);
  c.d_b = 0;
  const auto v = fr::check_thmA(c);
  EXPECT_TRUE(v.applicable);
  EXPECT_TRUE(v.holds);
  EXPECT_TRUE(v.equality());
  c.d_b = 1;
  const auto w = fr::check_thmA(c);
  EXPECT_FALSE(w.holds);
  EXPECT_EQ(w.lhs, 5);
  EXPECT_EQ(w.rhs, 4);
  c.d_b.reset();
  EXPECT_FALSE(fr::check_thmA(c).applicable);
}

TEST(TheoremB, NeedsFirstBettiZero) {
  auto c = make(2, 0, 2, true);
  c.d_k = 1;
  EXPECT_FALSE(fr::check_thmB(c).applicable);
  c.b1_zero = true;
  const auto v = fr::check_thmB(c);
  EXPECT_TRUE(v.applicable);
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.lhs, 4);
  EXPECT_EQ(v.rhs, 2);
}

TEST(TheoremC, RangeOfApplicability) {
  auto c = make(4, 0, 2, true);
  c.l = 1;
  c.d_b = 3;
  EXPECT_FALSE(fr::check_thmC(c).applicable);
  c.d_b = 2;
  const auto v = fr::check_thmC(c);
  EXPECT_TRUE(v.applicable);
  EXPECT_TRUE(v.holds);
  EXPECT_TRUE(v.equality());
}

TEST(TheoremZero, ClaimedOrder) {
  auto c = make(3, 1, 1);
  EXPECT_TRUE(fr::check_thm0(c).holds);
  c.order = 4;
  EXPECT_FALSE(fr::check_thm0(c).holds);
  c.order = 3;
  EXPECT_TRUE(fr::check_thm0(c).holds);
}

TEST(Evaluate, OddParityWarnsOrRejects) {
  const auto c = make(2, 1, 2);
  const auto j = fr::evaluate_case(c);
  ASSERT_TRUE(j.contains("warnings"));
  EXPECT_EQ(j["verdicts"].size(), 4u);
  EXPECT_EQ(code_of([&] { fr::evaluate_case(c, true); }), fr::ErrorCode::InvalidArgument);
  const auto even = fr::evaluate_case(make(2, 1, 1));
  EXPECT_FALSE(even.contains("warnings"));
  const auto na = fr::evaluate_case(make(2, 0, 2));
  EXPECT_TRUE(na["reduction"].is_null());
  EXPECT_TRUE(na.contains("reductionError"));
}

TEST(Csv, ParsesRowsAndOptionals) {
  const std::string text =
      "genus,self_int,odd_class,k_dot_sigma,d_b,d_k,l,b1_zero,order\n"
      "# comment\n"
      "3,0,1,4,0,,,0,\n"
      "2,1,0,-1,1,2,1,true,2\n";
  const auto cs = fr::parse_cases_csv(text);
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0].genus, 3);
  EXPECT_TRUE(cs[0].odd_class);
  EXPECT_EQ(cs[0].d_b, 0);
  EXPECT_FALSE(cs[0].d_k.has_value());
  EXPECT_FALSE(cs[0].order.has_value());
  EXPECT_EQ(cs[1].k_dot_sigma, -1);
  EXPECT_TRUE(cs[1].b1_zero);
  EXPECT_EQ(cs[1].l, 1);
  EXPECT_EQ(cs[1].order, 2);
}

TEST(Csv, Errors) {
  EXPECT_EQ(code_of([] { fr::parse_cases_csv(""); }), fr::ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { fr::parse_cases_csv("genus,self_int\n1,2\n"); }), fr::ErrorCode::ParseError);
  const std::string h = "genus,self_int,odd_class,k_dot_sigma,d_b,d_k,l,b1_zero\n";
  EXPECT_EQ(code_of([&] { fr::parse_cases_csv(h + "x,0,1,4,,,,0\n"); }), fr::ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { fr::parse_cases_csv(h + "3,0,maybe,4,,,,0\n"); }), fr::ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { fr::parse_cases_csv(h + "3,0,1\n"); }), fr::ErrorCode::ParseError);
}

TEST(Sweep, AllPass) {
  const auto rs = fr::verify_adjunction();
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_TRUE(frtest::all_pass(rs));
}
