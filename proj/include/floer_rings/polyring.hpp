// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "floer_rings/exterior.hpp"
#include "floer_rings/scalar.hpp"

namespace fr {

constexpr int kMaxEven = 6;

struct EvenVariable {
  std::string name;
  int weight = 1;
  /// When positive, name^cap = 0 in the ring (used for t with t^N = 0).
  int cap = 0;
};

/// Supercommutative polynomial ring: even variables tensored with the
/// exterior algebra on psi_1..psi_{2g}. Every psi has the same weight.
class PolyRing {
 public:
  PolyRing(std::vector<EvenVariable> evens, int genus, int odd_weight = 1);

  static std::shared_ptr<const PolyRing> make(std::vector<EvenVariable> evens, int genus = 0, int odd_weight = 1) {
    return std::make_shared<const PolyRing>(std::move(evens), genus, odd_weight);
  }

  int even_count() const noexcept { return static_cast<int>(evens_.size()); }
  const EvenVariable& even(int i) const { return evens_.at(static_cast<std::size_t>(i)); }
  int genus() const noexcept { return genus_; }
  int odd_count() const noexcept { return 2 * genus_; }
  int odd_weight() const noexcept { return odd_weight_; }
  /// -1 when absent.
  int find_even(std::string_view name) const noexcept;
  /// Index of the weight-0 capped variable (the series parameter), or -1.
  int base_variable() const noexcept;

  bool same_as(const PolyRing& o) const noexcept;
  std::vector<std::string> variable_names() const;

 private:
  std::vector<EvenVariable> evens_;
  int genus_;
  int odd_weight_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

struct Monomial {
  std::array<std::uint8_t, kMaxEven> e{};
  OddMask odd = 0;

  std::uint64_t key() const noexcept;
  static Monomial from_key(std::uint64_t k) noexcept;
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

int monomial_weight(const PolyRing& ring, const Monomial& m) noexcept;
/// Number of variable factors (exponent sum plus odd degree).
int monomial_length(const Monomial& m) noexcept;
std::string monomial_to_string(const PolyRing& ring, const Monomial& m);

/// Product a*b of monomials with its sign; sign 0 when the product vanishes
/// (repeated psi or a capped exponent reached).
struct SignedMonomial {
  Monomial m;
  int sign = 0;
};
SignedMonomial monomial_product(const PolyRing& ring, const Monomial& a, const Monomial& b) noexcept;

class SuperPolynomial {
 public:
  explicit SuperPolynomial(RingPtr ring);

  static SuperPolynomial constant(RingPtr ring, const Scalar& c);
  static SuperPolynomial variable(RingPtr ring, std::string_view name);
  /// psi_i, 1-based.
  static SuperPolynomial psi(RingPtr ring, int i);
  static SuperPolynomial monomial(RingPtr ring, const Monomial& m, const Scalar& c = Scalar(1));
  /// Embeds an exterior element (ring genus must match).
  static SuperPolynomial from_exterior(RingPtr ring, const ExteriorElement& w);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::map<std::uint64_t, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const Monomial& m) const;
  /// Largest weighted degree of a term, -1 for zero.
  int max_weight() const noexcept;

  void add_term(const Monomial& m, const Scalar& c);

  SuperPolynomial operator-() const;
  friend SuperPolynomial operator+(const SuperPolynomial& a, const SuperPolynomial& b);
  friend SuperPolynomial operator-(const SuperPolynomial& a, const SuperPolynomial& b);
  friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);
  friend SuperPolynomial operator*(const Scalar& s, const SuperPolynomial& a);
  friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b);
  SuperPolynomial pow(int n) const;

  /// Terms in descending monomial-key order, e.g. "(1)*alpha^2 + (-8)".
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::map<std::uint64_t, Scalar> terms_;
};

/// Throws VariableMismatch unless the rings agree.
void check_same_ring(const PolyRing& a, const PolyRing& b);

/// Ring homomorphism into `target` sending even variable i to even_images[i]
/// and psi_j to psi_j.
SuperPolynomial map_polynomial(const SuperPolynomial& p, const RingPtr& target,
                               const std::vector<SuperPolynomial>& even_images);

/// Named weight table used for degree statements that differ from the
/// ring's own ordering weights.
struct GradingTable {
  std::string name;
  std::map<std::string, int> weights;
  int psi_weight = 1;

  int weight_of(const PolyRing& ring, const Monomial& m) const;
};

/// d(beta-bar) = d(wp) = 2, d(psi) = 1, d(gamma) = d(eta) = d(theta) = 2, d(t) = 0.
GradingTable d_grading();
/// beta-bar and gamma both counted with weight 1.
GradingTable monomial_count_grading();

}  // namespace fr
