// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "floer_rings/linalg.hpp"
#include "floer_rings/scalar.hpp"

namespace fr {

/// Largest genus supported by the bit-mask encoding of exterior monomials.
constexpr int kMaxGenus = 8;

/// Exterior monomial: bit i-1 set means psi_i is present. The monomial is
/// the wedge of its generators in ascending index order.
using OddMask = std::uint32_t;

inline int mask_degree(OddMask m) noexcept { return __builtin_popcount(m); }

/// Sign of (psi_A)(psi_B) relative to psi_{A|B}; 0 when A and B overlap.
int wedge_sign(OddMask a, OddMask b) noexcept;

/// All monomials of degree k in 2g generators, ascending as integers.
std::vector<OddMask> masks_of_degree(int genus, int k);

void check_genus(int genus);

class ExteriorElement {
 public:
  explicit ExteriorElement(int genus);

  static ExteriorElement one(int genus);
  /// psi_i, 1 <= i <= 2g.
  static ExteriorElement psi(int genus, int i);
  static ExteriorElement monomial(int genus, OddMask m, const Scalar& c = Scalar(1));
  /// L = sum_{i=1}^{g} psi_i psi_{g+i}.
  static ExteriorElement symplectic_form(int genus);

  int genus() const noexcept { return genus_; }
  const std::map<OddMask, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Degree when homogeneous and nonzero.
  std::optional<int> degree() const;
  Scalar coefficient(OddMask m) const;

  void add_term(OddMask m, const Scalar& c);

  ExteriorElement operator-() const;
  friend ExteriorElement operator+(const ExteriorElement& a, const ExteriorElement& b);
  friend ExteriorElement operator-(const ExteriorElement& a, const ExteriorElement& b);
  friend ExteriorElement operator*(const Scalar& s, const ExteriorElement& a);
  friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) = default;

  /// e.g. "(1)*psi1psi3 + (-1/2)*psi2psi4"; "0" for the zero element.
  std::string to_string() const;

 private:
  int genus_;
  std::map<OddMask, Scalar> terms_;
};

/// Throws GenusMismatch when the genera differ.
ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b);
ExteriorElement wedge_power(const ExteriorElement& a, int n);

/// Coordinates of the degree-k part of w in masks_of_degree(genus, k).
Vector exterior_coordinates(const ExteriorElement& w, int k);
ExteriorElement from_exterior_coordinates(int genus, int k, const Vector& v);

/// Basis of ker(L^{g-k+1} : Lambda^k -> Lambda^{2g-k+2}). Memoized.
const std::vector<ExteriorElement>& primitive_basis(int genus, int k);

struct LefschetzComponent {
  int power = 0;
  ExteriorElement primitive;
};

/// w = sum L^i w_i with w_i primitive; only nonzero components, ascending i.
/// w must be homogeneous (any degree 0..2g).
std::vector<LefschetzComponent> lefschetz_decompose(const ExteriorElement& w);

/// Coordinates of the Lefschetz components of the monomial psi_m, one entry
/// per power i with deg(m) - 2i admissible, in primitive_basis(g, deg - 2i).
struct LefschetzCoordinates {
  int power = 0;
  int primitive_degree = 0;
  Vector coords;
};
std::vector<LefschetzCoordinates> lefschetz_monomial(int genus, OddMask m);

enum class SpKind { Identity, Swap, SwapInverse, Transvection, Mix };

/// Standard generators of Sp(2g, Z), indices 1-based in 1..g.
///   Swap(i):            psi_i -> psi_{g+i},  psi_{g+i} -> -psi_i
///   SwapInverse(i):     psi_i -> -psi_{g+i}, psi_{g+i} -> psi_i
///   Transvection(i, c): psi_{g+i} -> psi_{g+i} + c psi_i
///   Mix(i, j, c):       psi_i -> psi_i + c psi_j, psi_{g+j} -> psi_{g+j} - c psi_{g+i}
struct SymplecticGenerator {
  SpKind kind = SpKind::Identity;
  int i = 0;
  int j = 0;
  long long c = 1;
};

void validate_generator(const SymplecticGenerator& s, int genus);
SymplecticGenerator inverse_generator(const SymplecticGenerator& s);
/// Image of psi_index (1-based) as (index, coefficient) pairs.
std::vector<std::pair<int, Scalar>> generator_image(const SymplecticGenerator& s, int genus, int index);
ExteriorElement apply_symplectic_generator(const ExteriorElement& w, const SymplecticGenerator& s);
/// Swap(i), Transvection(i,1) for all i and Mix(i,j,1) for i != j.
std::vector<SymplecticGenerator> standard_generators(int genus);

}  // namespace fr
