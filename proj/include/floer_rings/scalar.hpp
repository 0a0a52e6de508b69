// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <compare>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "floer_rings/error.hpp"

namespace fr {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 64 bits are stored inline;
/// anything larger spills to a GMP rational. The representation is canonical
/// (a value that fits inline is never stored in the GMP form), so equality is
/// structural.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(int v) noexcept : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) noexcept : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v) noexcept : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  /// Accepts "p", "-p", "p/q".
  static Rational parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const noexcept { return big_ ? mpz_cmp_ui(big_->get_den_mpz_t(), 1) == 0 : den_ == 1; }
  int sign() const noexcept;
  bool is_small() const noexcept { return !big_; }

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  /// Only meaningful when the value is a machine-size integer.
  long long to_int() const;

  Rational operator-() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

 private:
  static Rational from_wide(__int128 num, __int128 den);
  static Rational from_mpq(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Element of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(int re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  /// Accepts the output of to_string() plus the plain forms "p/q", "r/s*i".
  static GaussianRational parse(std::string_view text);

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const noexcept { return re_.is_one() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }
  bool is_imaginary() const noexcept { return re_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

  /// this -= a * b, the inner loop of every elimination in the library.
  void sub_mul(const GaussianRational& a, const GaussianRational& b);

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Total order (real part first); used only for deterministic sorting.
  friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    if (auto c = a.re_ <=> b.re_; c != 0) return c;
    return a.im_ <=> b.im_;
  }

  /// Canonical short form: "-4", "8*i", "-i", "1/2-3*i".
  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

using Scalar = GaussianRational;

int default_series_order() noexcept;
void set_default_series_order(int order);

/// Power series in t truncated modulo t^N, coefficients in Q(i).
class TruncatedSeries {
 public:
  TruncatedSeries() : TruncatedSeries(default_series_order()) {}
  explicit TruncatedSeries(int order);
  TruncatedSeries(std::vector<Scalar> coefficients, int order);

  static TruncatedSeries constant(const Scalar& c, int order = default_series_order());
  /// The series t itself.
  static TruncatedSeries variable(int order = default_series_order());

  int order() const noexcept { return static_cast<int>(c_.size()); }
  const Scalar& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
  const std::vector<Scalar>& coefficients() const noexcept { return c_; }
  const Scalar& constant_term() const { return c_.front(); }

  bool is_zero() const noexcept;
  bool is_unit() const noexcept { return !c_.front().is_zero(); }
  /// Index of the first nonzero coefficient, or order() for the zero series.
  int valuation() const noexcept;

  TruncatedSeries inverse() const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Scalar& s, const TruncatedSeries& a);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

  std::vector<std::string> to_strings() const;

 private:
  std::vector<Scalar> c_;
};

inline TruncatedSeries series_invert(const TruncatedSeries& u) { return u.inverse(); }

}  // namespace fr
