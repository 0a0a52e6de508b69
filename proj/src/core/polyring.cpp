// SPDX-License-Identifier: Apache-2.0
#include "floer_rings/polyring.hpp"

namespace fr {

PolyRing::PolyRing(std::vector<EvenVariable> evens, int genus, int odd_weight)
    : evens_(std::move(evens)), genus_(genus), odd_weight_(odd_weight) {
  if (static_cast<int>(evens_.size()) > kMaxEven) fail(ErrorCode::OutOfRange, "too many even variables");
  check_genus(genus);
  for (const auto& v : evens_) {
    if (v.weight < 0 || v.cap < 0 || v.cap > 255) fail(ErrorCode::InvalidArgument, "bad variable " + v.name);
    if (v.weight == 0 && v.cap == 0) fail(ErrorCode::InvalidArgument, "weight-0 variable " + v.name + " needs a cap");
  }
}

int PolyRing::find_even(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < evens_.size(); ++i) {
    if (evens_[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

int PolyRing::base_variable() const noexcept {
  for (std::size_t i = 0; i < evens_.size(); ++i) {
    if (evens_[i].weight == 0 && evens_[i].cap > 0) return static_cast<int>(i);
  }
  return -1;
}

bool PolyRing::same_as(const PolyRing& o) const noexcept {
  if (this == &o) return true;
  if (genus_ != o.genus_ || odd_weight_ != o.odd_weight_ || evens_.size() != o.evens_.size()) return false;
  for (std::size_t i = 0; i < evens_.size(); ++i) {
    if (evens_[i].name != o.evens_[i].name || evens_[i].weight != o.evens_[i].weight || evens_[i].cap != o.evens_[i].cap)
      return false;
  }
  return true;
}

std::vector<std::string> PolyRing::variable_names() const {
  std::vector<std::string> out;
  for (const auto& v : evens_) out.push_back(v.name);
  for (int i = 1; i <= odd_count(); ++i) out.push_back("psi" + std::to_string(i));
  return out;
}

std::uint64_t Monomial::key() const noexcept {
  std::uint64_t k = odd & 0xFFFFu;
  for (int i = 0; i < kMaxEven; ++i) k |= static_cast<std::uint64_t>(e[static_cast<std::size_t>(i)]) << (16 + 8 * i);
  return k;
}

Monomial Monomial::from_key(std::uint64_t k) noexcept {
  Monomial m;
  m.odd = static_cast<OddMask>(k & 0xFFFFu);
  for (int i = 0; i < kMaxEven; ++i) m.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((k >> (16 + 8 * i)) & 0xFFu);
  return m;
}

int monomial_weight(const PolyRing& ring, const Monomial& m) noexcept {
  int w = mask_degree(m.odd) * ring.odd_weight();
  for (int i = 0; i < ring.even_count(); ++i) w += ring.even(i).weight * m.e[static_cast<std::size_t>(i)];
  return w;
}

int monomial_length(const Monomial& m) noexcept {
  int n = mask_degree(m.odd);
  for (auto x : m.e) n += x;
  return n;
}

std::string monomial_to_string(const PolyRing& ring, const Monomial& m) {
  std::string out;
  auto append = [&](const std::string& s) {
    if (!out.empty()) out += "*";
    out += s;
  };
  for (int i = 0; i < ring.even_count(); ++i) {
    int e = m.e[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    append(e == 1 ? ring.even(i).name : ring.even(i).name + "^" + std::to_string(e));
  }
  for (int i = 0; i < ring.odd_count(); ++i) {
    if (m.odd & (OddMask(1) << i)) append("psi" + std::to_string(i + 1));
  }
  return out.empty() ? "1" : out;
}

SignedMonomial monomial_product(const PolyRing& ring, const Monomial& a, const Monomial& b) noexcept {
  SignedMonomial r;
  int s = wedge_sign(a.odd, b.odd);
  if (s == 0) return r;
  for (int i = 0; i < ring.even_count(); ++i) {
    const auto u = static_cast<std::size_t>(i);
    int e = a.e[u] + b.e[u];
    int cap = ring.even(i).cap;
    if ((cap > 0 && e >= cap) || e > 255) return r;
    r.m.e[u] = static_cast<std::uint8_t>(e);
  }
  r.m.odd = a.odd | b.odd;
  r.sign = s;
  return r;
}

void check_same_ring(const PolyRing& a, const PolyRing& b) {
  if (!a.same_as(b)) fail(ErrorCode::VariableMismatch, "polynomials live in different rings");
}

SuperPolynomial::SuperPolynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) fail(ErrorCode::InvalidArgument, "null ring");
}

SuperPolynomial SuperPolynomial::constant(RingPtr ring, const Scalar& c) {
  SuperPolynomial p(std::move(ring));
  p.add_term(Monomial{}, c);
  return p;
}

SuperPolynomial SuperPolynomial::variable(RingPtr ring, std::string_view name) {
  int i = ring->find_even(name);
  if (i < 0) {
    if (name.substr(0, 3) == "psi") {
      int idx = std::stoi(std::string(name.substr(3)));
      return psi(std::move(ring), idx);
    }
    fail(ErrorCode::VariableMismatch, "unknown variable " + std::string(name));
  }
  Monomial m;
  m.e[static_cast<std::size_t>(i)] = 1;
  return monomial(std::move(ring), m);
}

SuperPolynomial SuperPolynomial::psi(RingPtr ring, int i) {
  if (i < 1 || i > ring->odd_count()) fail(ErrorCode::OutOfRange, "psi index out of range");
  Monomial m;
  m.odd = OddMask(1) << (i - 1);
  return monomial(std::move(ring), m);
}

SuperPolynomial SuperPolynomial::monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
  SuperPolynomial p(std::move(ring));
  p.add_term(m, c);
  return p;
}

SuperPolynomial SuperPolynomial::from_exterior(RingPtr ring, const ExteriorElement& w) {
  if (w.genus() != ring->genus()) fail(ErrorCode::GenusMismatch, "exterior element genus differs from the ring");
  SuperPolynomial p(std::move(ring));
  for (const auto& [mask, c] : w.terms()) {
    Monomial m;
    m.odd = mask;
    p.add_term(m, c);
  }
  return p;
}

Scalar SuperPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m.key());
  return it == terms_.end() ? Scalar() : it->second;
}

int SuperPolynomial::max_weight() const noexcept {
  int w = -1;
  for (const auto& [k, c] : terms_) w = std::max(w, monomial_weight(*ring_, Monomial::from_key(k)));
  return w;
}

void SuperPolynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  for (int i = 0; i < ring_->even_count(); ++i) {
    int cap = ring_->even(i).cap;
    if (cap > 0 && m.e[static_cast<std::size_t>(i)] >= cap) return;
  }
  auto [it, inserted] = terms_.try_emplace(m.key(), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperPolynomial SuperPolynomial::operator-() const {
  SuperPolynomial r(ring_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

SuperPolynomial operator+(const SuperPolynomial& a, const SuperPolynomial& b) {
  check_same_ring(*a.ring_, *b.ring_);
  SuperPolynomial r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(Monomial::from_key(k), c);
  return r;
}

SuperPolynomial operator-(const SuperPolynomial& a, const SuperPolynomial& b) {
  check_same_ring(*a.ring_, *b.ring_);
  SuperPolynomial r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(Monomial::from_key(k), -c);
  return r;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
  check_same_ring(*a.ring_, *b.ring_);
  SuperPolynomial r(a.ring_);
  for (const auto& [ka, ca] : a.terms_) {
    Monomial ma = Monomial::from_key(ka);
    for (const auto& [kb, cb] : b.terms_) {
      SignedMonomial p = monomial_product(*a.ring_, ma, Monomial::from_key(kb));
      if (p.sign == 0) continue;
      Scalar c = ca * cb;
      r.add_term(p.m, p.sign > 0 ? c : -c);
    }
  }
  return r;
}

SuperPolynomial operator*(const Scalar& s, const SuperPolynomial& a) {
  SuperPolynomial r(a.ring_);
  if (s.is_zero()) return r;
  for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, s * c);
  return r;
}

bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
  return a.ring_->same_as(*b.ring_) && a.terms_ == b.terms_;
}

SuperPolynomial SuperPolynomial::pow(int n) const {
  if (n < 0) fail(ErrorCode::OutOfRange, "negative polynomial power");
  SuperPolynomial r = constant(ring_, Scalar(1));
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

std::string SuperPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    Monomial m = Monomial::from_key(it->first);
    out += "(" + it->second.to_string() + ")";
    std::string ms = monomial_to_string(*ring_, m);
    if (ms != "1") out += "*" + ms;
  }
  return out;
}

SuperPolynomial map_polynomial(const SuperPolynomial& p, const RingPtr& target,
                               const std::vector<SuperPolynomial>& even_images) {
  const PolyRing& src = *p.ring();
  if (static_cast<int>(even_images.size()) != src.even_count()) {
    fail(ErrorCode::InvalidArgument, "one image per even variable is required");
  }
  if (src.odd_count() > target->odd_count()) fail(ErrorCode::GenusMismatch, "target ring has fewer odd variables");
  SuperPolynomial out(target);
  for (const auto& [k, c] : p.terms()) {
    Monomial m = Monomial::from_key(k);
    SuperPolynomial term = SuperPolynomial::constant(target, c);
    for (int i = 0; i < src.even_count(); ++i) {
      int e = m.e[static_cast<std::size_t>(i)];
      if (e > 0) term = term * even_images[static_cast<std::size_t>(i)].pow(e);
    }
    if (m.odd) {
      Monomial om;
      om.odd = m.odd;
      term = term * SuperPolynomial::monomial(target, om);
    }
    out = out + term;
  }
  return out;
}

int GradingTable::weight_of(const PolyRing& ring, const Monomial& m) const {
  int w = mask_degree(m.odd) * psi_weight;
  for (int i = 0; i < ring.even_count(); ++i) {
    int e = m.e[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    auto it = weights.find(ring.even(i).name);
    if (it == weights.end()) fail(ErrorCode::VariableMismatch, "grading table " + name + " has no weight for " + ring.even(i).name);
    w += it->second * e;
  }
  return w;
}

GradingTable d_grading() {
  return {"d", {{"betabar", 2}, {"gamma", 2}, {"eta", 2}, {"theta", 2}, {"t", 0}}, 1};
}

GradingTable monomial_count_grading() { return {"monomial-count", {{"betabar", 1}, {"gamma", 1}, {"t", 0}}, 1}; }

}  // namespace fr
