// SPDX-License-Identifier: Apache-2.0
#include "floer_rings/scalar.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

using fr::GaussianRational;
using fr::Rational;
using fr::Scalar;
using fr::TruncatedSeries;

namespace {

// Test-side oracle for Q(i): numerator and denominator pairs over long long,
// compared by cross multiplication.
struct Frac {
  long long n, d;
};
bool same(const Rational& q, Frac f) { return q == Rational(f.n, f.d); }

TruncatedSeries series(std::vector<Scalar> c) {
  const int n = static_cast<int>(c.size());
  return TruncatedSeries(std::move(c), n);
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rational(8, 4).to_string(), "2");
  EXPECT_TRUE(Rational(0, 5).is_zero());
  EXPECT_THROW(Rational(1, 0), fr::Error);
}

TEST(Rational, ParseRoundTrip) {
  EXPECT_EQ(Rational::parse("-12/18"), Rational(-2, 3));
  EXPECT_EQ(Rational::parse(" 7 "), Rational(7));
  EXPECT_THROW(Rational::parse("1.5"), fr::Error);
  EXPECT_THROW(Rational::parse(""), fr::Error);
  frtest::Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    const Rational q = gen.rational(1000, 1000);
    EXPECT_EQ(Rational::parse(q.to_string()), q);
  }
}

TEST(Rational, OverflowSpillsToGmp) {
  Rational big(1);
  for (int i = 0; i < 5; ++i) big *= Rational(1000000007LL);
  EXPECT_FALSE(big.is_small());
  Rational back = big;
  for (int i = 0; i < 5; ++i) back /= Rational(1000000007LL);
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, Rational(1));
  EXPECT_EQ(Rational::parse(big.to_string()), big);
}

TEST(Rational, MatchesFractionOracle) {
  frtest::Gen gen(3);
  for (int i = 0; i < 500; ++i) {
    const long long a = gen.range(-50, 50), b = gen.range(1, 40), c = gen.range(-50, 50), d = gen.range(1, 40);
    const Rational x(a, b), y(c, d);
    EXPECT_TRUE(same(x + y, {a * d + c * b, b * d}));
    EXPECT_TRUE(same(x - y, {a * d - c * b, b * d}));
    EXPECT_TRUE(same(x * y, {a * c, b * d}));
    if (c != 0) EXPECT_TRUE(same(x / y, {a * d, b * c}));
    EXPECT_EQ(x < y, a * d < c * b);
  }
}

TEST(Gaussian, Examples) {
  const Scalar four_i{Rational(0), Rational(4)};
  EXPECT_EQ(four_i * four_i, Scalar(-16));
  const Scalar z{Rational(3), Rational(2)};
  EXPECT_EQ(z.conj(), Scalar(Rational(3), Rational(-2)));
  const Scalar num{Rational(1), Rational(1)}, den{Rational(1), Rational(-1)};
  const Scalar q = num / den;
  EXPECT_EQ(q, Scalar::i());
  // cross-multiplication check
  EXPECT_EQ(q * den, num);
}

TEST(Gaussian, FormatAndParse) {
  EXPECT_EQ(Scalar(-4).to_string(), "-4");
  EXPECT_EQ(Scalar(Rational(0), Rational(8)).to_string(), "8*i");
  EXPECT_EQ(Scalar(Rational(0), Rational(-1)).to_string(), "-i");
  EXPECT_EQ(Scalar(Rational(1, 2), Rational(-3)).to_string(), "1/2-3*i");
  frtest::Gen gen(5);
  for (int i = 0; i < 300; ++i) {
    const Scalar s = gen.scalar();
    EXPECT_EQ(GaussianRational::parse(s.to_string()), s) << s.to_string();
  }
  EXPECT_EQ(GaussianRational::parse("2/4+6/3*i"), Scalar(Rational(1, 2), Rational(2)));
  EXPECT_THROW(GaussianRational::parse("abc"), fr::Error);
}

TEST(Gaussian, FieldLawsRandomTriples) {
  frtest::Gen gen(17);
  for (int i = 0; i < 400; ++i) {
    const Scalar a = gen.scalar(), b = gen.scalar(), c = gen.scalar();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) {
      EXPECT_TRUE((a * a.inverse()).is_one());
      EXPECT_EQ((b / a) * a, b);
    }
    Scalar s = c;
    s.sub_mul(a, b);
    EXPECT_EQ(s, c - a * b);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ((a * a.conj()).re(), a.norm());
  }
  EXPECT_THROW(Scalar(0).inverse(), fr::Error);
}

TEST(Series, InvertExamples) {
  EXPECT_EQ(fr::series_invert(TruncatedSeries::constant(Scalar(1), 4)), TruncatedSeries::constant(Scalar(1), 4));
  const TruncatedSeries one_plus_t = series({Scalar(1), Scalar(1), Scalar(0)});
  EXPECT_EQ(fr::series_invert(one_plus_t), series({Scalar(1), Scalar(-1), Scalar(1)}));
  EXPECT_EQ(fr::series_invert(series({Scalar(2), Scalar(0)})), series({Scalar(Rational(1, 2)), Scalar(0)}));
  EXPECT_THROW(fr::series_invert(series({Scalar(0), Scalar(1)})), fr::Error);
}

TEST(Series, InverseRoundTripRandomUnits) {
  frtest::Gen gen(23);
  for (int i = 0; i < 100; ++i) {
    const int n = static_cast<int>(gen.range(1, 6));
    std::vector<Scalar> c;
    c.push_back(gen.nonzero_scalar());
    for (int j = 1; j < n; ++j) c.push_back(gen.scalar());
    const TruncatedSeries u(c, n);
    const TruncatedSeries v = fr::series_invert(u);
    EXPECT_EQ(u * v, TruncatedSeries::constant(Scalar(1), n));
    EXPECT_EQ(fr::series_invert(v), u);
  }
}

TEST(Series, ArithmeticTruncates) {
  const TruncatedSeries t = TruncatedSeries::variable(3);
  EXPECT_EQ(t * t * t, TruncatedSeries(3));
  EXPECT_EQ((t * t).valuation(), 2);
  EXPECT_EQ(TruncatedSeries(3).valuation(), 3);
  EXPECT_THROW(TruncatedSeries(0), fr::Error);
}

TEST(Series, DefaultOrderIsConfigurable) {
  EXPECT_EQ(fr::default_series_order(), 4);
  fr::set_default_series_order(6);
  EXPECT_EQ(TruncatedSeries().order(), 6);
  fr::set_default_series_order(4);
  EXPECT_THROW(fr::set_default_series_order(0), fr::Error);
}
