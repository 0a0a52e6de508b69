// SPDX-License-Identifier: Apache-2.0
#include "floer_rings/scalar.hpp"

#include <atomic>
#include <limits>
#include <numeric>
#include <sstream>

namespace fr {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::GenusMismatch: return "GenusMismatch";
    case ErrorCode::InvalidGenerator: return "InvalidGenerator";
    case ErrorCode::NotFiniteRank: return "NotFiniteRank";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::EigenvalueCollision: return "EigenvalueCollision";
    case ErrorCode::FactorizationFailed: return "FactorizationFailed";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::StructureMismatch: return "StructureMismatch";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  u128 u = uabs(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits(i128 v) { return v >= kMin64 && v <= kMax64; }

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational Rational::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  u128 g = gcd128(uabs(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  Rational r;
  if (fits(num) && den <= kMax64) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  r.big_ = std::make_unique<mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_mpq(mpq_class q) {
  q.canonicalize();
  Rational r;
  if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
    r.num_ = mpz_get_si(q.get_num_mpz_t());
    r.den_ = mpz_get_si(q.get_den_mpz_t());
    return r;
  }
  r.big_ = std::make_unique<mpq_class>(std::move(q));
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) fail(ErrorCode::ParseError, "empty rational");
  if (s.front() == '+') s.erase(0, 1);
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/')) {
      fail(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
    }
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) fail(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  if (q.get_den() == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
  return from_mpq(q);
}

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }
mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_)); }

long long Rational::to_int() const {
  if (big_ || den_ != 1) fail(ErrorCode::InvalidArgument, "rational is not a machine integer: " + to_string());
  return num_;
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  return from_wide(-static_cast<i128>(num_), den_);
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (big_) return from_mpq(1 / *big_);
  return from_wide(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = static_cast<i128>(a.num_) + b.num_;
      if (fits(s)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(s);
        return r;
      }
    }
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_wide(n, d);
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = static_cast<i128>(a.num_) - b.num_;
      if (fits(s)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(s);
        return r;
      }
    }
    i128 n = static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    return Rational::from_wide(n, d);
  }
  return Rational::from_mpq(a.to_mpq() - b.to_mpq());
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
      i128 p = static_cast<i128>(a.num_) * b.num_;
      if (fits(p)) {
        Rational r;
        r.num_ = static_cast<std::int64_t>(p);
        return r;
      }
    }
    return Rational::from_wide(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "rational division by zero");
  if (!a.big_ && !b.big_) {
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
  }
  return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical representation
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str(10);
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

// ---------------------------------------------------------------------------

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (im_.is_zero()) return GaussianRational(re_.inverse());
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) return GaussianRational(a.re_ + b.re_);
  return {a.re_ + b.re_, a.im_ + b.im_};
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
  if (a.im_.is_zero() && b.im_.is_zero()) return GaussianRational(a.re_ - b.re_);
  return {a.re_ - b.re_, a.im_ - b.im_};
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  if (a.im_.is_zero()) {
    if (b.im_.is_zero()) return GaussianRational(a.re_ * b.re_);
    return {a.re_ * b.re_, a.re_ * b.im_};
  }
  if (b.im_.is_zero()) return {a.re_ * b.re_, a.im_ * b.re_};
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "gaussian division by zero");
  if (b.im_.is_zero()) return {a.re_ / b.re_, a.im_ / b.re_};
  return a * b.inverse();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (!o.im_.is_zero()) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (!o.im_.is_zero()) im_ -= o.im_;
  return *this;
}

void GaussianRational::sub_mul(const GaussianRational& a, const GaussianRational& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.im_.is_zero() && b.im_.is_zero()) {
    re_ -= a.re_ * b.re_;
    return;
  }
  *this -= a * b;
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  const Rational mag = im_.sign() < 0 ? -im_ : im_;
  const std::string imag = mag == Rational(1) ? "i" : mag.to_string() + "*i";
  if (re_.is_zero()) return im_.sign() < 0 ? "-" + imag : imag;
  return re_.to_string() + (im_.sign() < 0 ? "-" : "+") + imag;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) fail(ErrorCode::ParseError, "empty gaussian rational");
  bool has_i = !s.empty() && s.back() == 'i';
  if (!has_i) return GaussianRational(Rational::parse(s));
  s.pop_back();
  if (!s.empty() && s.back() == '*') s.pop_back();
  // split at the last sign that is not the leading character
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  auto parse_im = [&](std::string part) {
    if (part.empty() || part == "+") return Rational(1);
    if (part == "-") return Rational(-1);
    return Rational::parse(part);
  };
  if (split == std::string::npos) return {Rational(0), parse_im(s)};
  return {Rational::parse(s.substr(0, split)), parse_im(s.substr(split))};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

// ---------------------------------------------------------------------------

namespace {
std::atomic<int> g_series_order{4};
}

int default_series_order() noexcept { return g_series_order.load(); }

void set_default_series_order(int order) {
  if (order < 1) fail(ErrorCode::OutOfRange, "truncation order must be positive");
  g_series_order.store(order);
}

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 1) fail(ErrorCode::OutOfRange, "truncation order must be positive");
  c_.assign(static_cast<std::size_t>(order), Scalar());
}

TruncatedSeries::TruncatedSeries(std::vector<Scalar> coefficients, int order) : TruncatedSeries(order) {
  for (std::size_t i = 0; i < coefficients.size() && i < c_.size(); ++i) c_[i] = std::move(coefficients[i]);
}

TruncatedSeries TruncatedSeries::constant(const Scalar& c, int order) {
  TruncatedSeries s(order);
  s.c_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::variable(int order) {
  TruncatedSeries s(order);
  if (order > 1) s.c_[1] = Scalar(1);
  return s;
}

bool TruncatedSeries::is_zero() const noexcept {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

int TruncatedSeries::valuation() const noexcept {
  for (int i = 0; i < order(); ++i) {
    if (!c_[static_cast<std::size_t>(i)].is_zero()) return i;
  }
  return order();
}

static void check_orders(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) fail(ErrorCode::InvalidArgument, "truncation orders differ");
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(order());
  for (int i = 0; i < order(); ++i) r.c_[static_cast<std::size_t>(i)] = -c_[static_cast<std::size_t>(i)];
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_orders(a, b);
  TruncatedSeries r(a.order());
  for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_orders(a, b);
  TruncatedSeries r(a.order());
  for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_orders(a, b);
  const std::size_t n = a.c_.size();
  TruncatedSeries r(a.order());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

TruncatedSeries operator*(const Scalar& s, const TruncatedSeries& a) {
  TruncatedSeries r(a.order());
  for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = s * a.c_[i];
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (!is_unit()) fail(ErrorCode::NotAUnit, "series with zero constant term is not invertible");
  const std::size_t n = c_.size();
  TruncatedSeries r(order());
  Scalar inv0 = c_[0].inverse();
  r.c_[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    Scalar acc;
    for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
    r.c_[k] = -(acc * inv0);
  }
  return r;
}

std::vector<std::string> TruncatedSeries::to_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.to_string());
  return out;
}

}  // namespace fr
