// SPDX-License-Identifier: Apache-2.0
#include "floer_rings/exterior.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace fr {

int wedge_sign(OddMask a, OddMask b) noexcept {
  if (a & b) return 0;
  int swaps = 0;
  OddMask rest = b;
  while (rest) {
    int j = __builtin_ctz(rest);
    rest &= rest - 1;
    swaps += __builtin_popcount(j + 1 >= 32 ? 0u : (a >> (j + 1)));
  }
  return (swaps & 1) ? -1 : 1;
}

void check_genus(int genus) {
  if (genus < 0 || genus > kMaxGenus) fail(ErrorCode::OutOfRange, "genus out of range: " + std::to_string(genus));
}

std::vector<OddMask> masks_of_degree(int genus, int k) {
  check_genus(genus);
  std::vector<OddMask> out;
  const int n = 2 * genus;
  if (k < 0 || k > n) return out;
  const OddMask limit = OddMask(1) << n;
  for (OddMask m = 0; m < limit; ++m) {
    if (mask_degree(m) == k) out.push_back(m);
  }
  return out;
}

ExteriorElement::ExteriorElement(int genus) : genus_(genus) { check_genus(genus); }

ExteriorElement ExteriorElement::one(int genus) { return monomial(genus, 0); }

ExteriorElement ExteriorElement::psi(int genus, int i) {
  check_genus(genus);
  if (i < 1 || i > 2 * genus) fail(ErrorCode::OutOfRange, "psi index out of range");
  return monomial(genus, OddMask(1) << (i - 1));
}

ExteriorElement ExteriorElement::monomial(int genus, OddMask m, const Scalar& c) {
  ExteriorElement e(genus);
  if ((static_cast<std::uint64_t>(m) >> (2 * genus)) != 0) fail(ErrorCode::OutOfRange, "monomial outside the generator range");
  e.add_term(m, c);
  return e;
}

ExteriorElement ExteriorElement::symplectic_form(int genus) {
  ExteriorElement e(genus);
  for (int i = 0; i < genus; ++i) {
    OddMask m = (OddMask(1) << i) | (OddMask(1) << (genus + i));
    // psi_i psi_{g+i} is already in ascending order
    e.add_term(m, Scalar(1));
  }
  return e;
}

std::optional<int> ExteriorElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = mask_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    if (mask_degree(m) != d) return std::nullopt;
  }
  return d;
}

Scalar ExteriorElement::coefficient(OddMask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

void ExteriorElement::add_term(OddMask m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExteriorElement ExteriorElement::operator-() const {
  ExteriorElement r(genus_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

static void same_genus(const ExteriorElement& a, const ExteriorElement& b) {
  if (a.genus() != b.genus()) fail(ErrorCode::GenusMismatch, "exterior elements of different genus");
}

ExteriorElement operator+(const ExteriorElement& a, const ExteriorElement& b) {
  same_genus(a, b);
  ExteriorElement r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

ExteriorElement operator-(const ExteriorElement& a, const ExteriorElement& b) {
  same_genus(a, b);
  ExteriorElement r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

ExteriorElement operator*(const Scalar& s, const ExteriorElement& a) {
  ExteriorElement r(a.genus_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, s * c);
  return r;
}

std::string ExteriorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.to_string() + ")";
    if (m == 0) continue;
    out += "*";
    for (int i = 0; i < 2 * genus_; ++i) {
      if (m & (OddMask(1) << i)) out += "psi" + std::to_string(i + 1);
    }
  }
  return out;
}

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
  same_genus(a, b);
  ExteriorElement r(a.genus());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Scalar c = ca * cb;
      r.add_term(ma | mb, s > 0 ? c : -c);
    }
  }
  return r;
}

ExteriorElement wedge_power(const ExteriorElement& a, int n) {
  if (n < 0) fail(ErrorCode::OutOfRange, "negative wedge power");
  ExteriorElement r = ExteriorElement::one(a.genus());
  for (int i = 0; i < n; ++i) r = wedge(r, a);
  return r;
}

Vector exterior_coordinates(const ExteriorElement& w, int k) {
  std::vector<OddMask> masks = masks_of_degree(w.genus(), k);
  Vector v(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) v[i] = w.coefficient(masks[i]);
  return v;
}

ExteriorElement from_exterior_coordinates(int genus, int k, const Vector& v) {
  std::vector<OddMask> masks = masks_of_degree(genus, k);
  if (v.size() != masks.size()) fail(ErrorCode::InvalidArgument, "coordinate length mismatch");
  ExteriorElement e(genus);
  for (std::size_t i = 0; i < masks.size(); ++i) e.add_term(masks[i], v[i]);
  return e;
}

namespace {

std::mutex g_cache_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const std::vector<ExteriorElement>>> g_primitive_cache;

struct LefschetzTable {
  struct Block {
    int power;
    int primitive_degree;
    int offset;
    int size;
  };
  std::vector<Block> blocks;
  Matrix inverse;
};
std::map<std::pair<int, int>, std::shared_ptr<const LefschetzTable>> g_lefschetz_cache;

// Matrix of wedge with `f` from Lambda^k to Lambda^{k + deg f}.
Matrix wedge_matrix(const ExteriorElement& f, int fdeg, int genus, int k) {
  std::vector<OddMask> src = masks_of_degree(genus, k);
  std::vector<OddMask> dst = masks_of_degree(genus, k + fdeg);
  std::map<OddMask, int> index;
  for (std::size_t i = 0; i < dst.size(); ++i) index[dst[i]] = static_cast<int>(i);
  Matrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
  for (std::size_t c = 0; c < src.size(); ++c) {
    ExteriorElement img = wedge(f, ExteriorElement::monomial(genus, src[c]));
    for (const auto& [mm, coef] : img.terms()) m(index.at(mm), static_cast<int>(c)) = coef;
  }
  return m;
}

std::shared_ptr<const std::vector<ExteriorElement>> compute_primitive(int genus, int k) {
  const int p = genus - k + 1;
  const int n = 2 * genus;
  auto out = std::make_shared<std::vector<ExteriorElement>>();
  std::vector<OddMask> src = masks_of_degree(genus, k);
  if (k + 2 * p > n) {
    // the target space is zero, everything is primitive
    for (OddMask m : src) out->push_back(ExteriorElement::monomial(genus, m));
    return out;
  }
  ExteriorElement lp = wedge_power(ExteriorElement::symplectic_form(genus), p);
  Matrix m = wedge_matrix(lp, 2 * p, genus, k);
  Matrix ker = kernel(m);
  for (int c = 0; c < ker.cols(); ++c) out->push_back(from_exterior_coordinates(genus, k, ker.column(c)));
  return out;
}

std::shared_ptr<const LefschetzTable> lefschetz_table(int genus, int k) {
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_lefschetz_cache.find({genus, k});
    if (it != g_lefschetz_cache.end()) return it->second;
  }
  auto table = std::make_shared<LefschetzTable>();
  const int n = 2 * genus;
  std::vector<OddMask> target = masks_of_degree(genus, k);
  std::map<OddMask, int> index;
  for (std::size_t i = 0; i < target.size(); ++i) index[target[i]] = static_cast<int>(i);
  const ExteriorElement form = ExteriorElement::symplectic_form(genus);
  std::vector<Vector> cols;
  const int jmax = std::min(k, n - k);
  for (int j = jmax; j >= 0; j -= 2) {
    const int power = (k - j) / 2;
    const auto& prim = primitive_basis(genus, j);
    ExteriorElement lp = wedge_power(form, power);
    LefschetzTable::Block b{power, j, static_cast<int>(cols.size()), static_cast<int>(prim.size())};
    for (const auto& w : prim) {
      ExteriorElement img = wedge(lp, w);
      Vector v(target.size());
      for (const auto& [mm, coef] : img.terms()) v[static_cast<std::size_t>(index.at(mm))] = coef;
      cols.push_back(std::move(v));
    }
    table->blocks.push_back(b);
  }
  Matrix basis = Matrix::from_columns(cols, static_cast<int>(target.size()));
  table->inverse = inverse(basis);
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto [it, inserted] = g_lefschetz_cache.emplace(std::make_pair(genus, k), table);
  return it->second;
}

}  // namespace

const std::vector<ExteriorElement>& primitive_basis(int genus, int k) {
  check_genus(genus);
  if (k < 0 || k > genus) fail(ErrorCode::OutOfRange, "primitive degree must satisfy 0 <= k <= g");
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_primitive_cache.find({genus, k});
    if (it != g_primitive_cache.end()) return *it->second;
  }
  auto computed = compute_primitive(genus, k);
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto [it, inserted] = g_primitive_cache.emplace(std::make_pair(genus, k), computed);
  return *it->second;
}

std::vector<LefschetzCoordinates> lefschetz_monomial(int genus, OddMask m) {
  check_genus(genus);
  const int k = mask_degree(m);
  auto table = lefschetz_table(genus, k);
  std::vector<OddMask> masks = masks_of_degree(genus, k);
  auto pos = std::lower_bound(masks.begin(), masks.end(), m);
  if (pos == masks.end() || *pos != m) fail(ErrorCode::OutOfRange, "monomial outside the generator range");
  const int col = static_cast<int>(pos - masks.begin());
  std::vector<LefschetzCoordinates> out;
  for (const auto& b : table->blocks) {
    LefschetzCoordinates lc;
    lc.power = b.power;
    lc.primitive_degree = b.primitive_degree;
    lc.coords.resize(static_cast<std::size_t>(b.size));
    for (int i = 0; i < b.size; ++i) lc.coords[static_cast<std::size_t>(i)] = table->inverse(b.offset + i, col);
    out.push_back(std::move(lc));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.power < b.power; });
  return out;
}

std::vector<LefschetzComponent> lefschetz_decompose(const ExteriorElement& w) {
  std::vector<LefschetzComponent> out;
  if (w.is_zero()) return out;
  auto deg = w.degree();
  if (!deg) fail(ErrorCode::InvalidArgument, "lefschetz_decompose needs a homogeneous element");
  const int genus = w.genus();
  const int k = *deg;
  auto table = lefschetz_table(genus, k);
  Vector x = table->inverse.apply(exterior_coordinates(w, k));
  for (const auto& b : table->blocks) {
    const auto& prim = primitive_basis(genus, b.primitive_degree);
    ExteriorElement comp(genus);
    for (int i = 0; i < b.size; ++i) {
      const Scalar& c = x[static_cast<std::size_t>(b.offset + i)];
      if (!c.is_zero()) comp = comp + c * prim[static_cast<std::size_t>(i)];
    }
    if (!comp.is_zero()) out.push_back({b.power, std::move(comp)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.power < b.power; });
  return out;
}

void validate_generator(const SymplecticGenerator& s, int genus) {
  check_genus(genus);
  auto in_range = [&](int i) { return i >= 1 && i <= genus; };
  switch (s.kind) {
    case SpKind::Identity:
      return;
    case SpKind::Swap:
    case SpKind::SwapInverse:
    case SpKind::Transvection:
      if (!in_range(s.i)) fail(ErrorCode::InvalidGenerator, "generator index out of range");
      return;
    case SpKind::Mix:
      if (!in_range(s.i) || !in_range(s.j) || s.i == s.j) fail(ErrorCode::InvalidGenerator, "mix generator needs distinct indices in 1..g");
      return;
  }
  fail(ErrorCode::InvalidGenerator, "unknown generator kind");
}

SymplecticGenerator inverse_generator(const SymplecticGenerator& s) {
  SymplecticGenerator r = s;
  switch (s.kind) {
    case SpKind::Identity:
      break;
    case SpKind::Swap:
      r.kind = SpKind::SwapInverse;
      break;
    case SpKind::SwapInverse:
      r.kind = SpKind::Swap;
      break;
    case SpKind::Transvection:
    case SpKind::Mix:
      r.c = -s.c;
      break;
  }
  return r;
}

std::vector<std::pair<int, Scalar>> generator_image(const SymplecticGenerator& s, int genus, int index) {
  validate_generator(s, genus);
  const int g = genus;
  const Scalar c(s.c);
  switch (s.kind) {
    case SpKind::Identity:
      break;
    case SpKind::Swap:
      if (index == s.i) return {{g + s.i, Scalar(1)}};
      if (index == g + s.i) return {{s.i, Scalar(-1)}};
      break;
    case SpKind::SwapInverse:
      if (index == s.i) return {{g + s.i, Scalar(-1)}};
      if (index == g + s.i) return {{s.i, Scalar(1)}};
      break;
    case SpKind::Transvection:
      if (index == g + s.i) return {{g + s.i, Scalar(1)}, {s.i, c}};
      break;
    case SpKind::Mix:
      if (index == s.i) return {{s.i, Scalar(1)}, {s.j, c}};
      if (index == g + s.j) return {{g + s.j, Scalar(1)}, {g + s.i, -c}};
      break;
  }
  return {{index, Scalar(1)}};
}

ExteriorElement apply_symplectic_generator(const ExteriorElement& w, const SymplecticGenerator& s) {
  const int genus = w.genus();
  validate_generator(s, genus);
  std::vector<ExteriorElement> images;
  for (int i = 1; i <= 2 * genus; ++i) {
    ExteriorElement e(genus);
    for (const auto& [j, c] : generator_image(s, genus, i)) e.add_term(OddMask(1) << (j - 1), c);
    images.push_back(std::move(e));
  }
  ExteriorElement out(genus);
  for (const auto& [m, c] : w.terms()) {
    ExteriorElement term = ExteriorElement::monomial(genus, 0, c);
    for (int i = 0; i < 2 * genus; ++i) {
      if (m & (OddMask(1) << i)) term = wedge(term, images[static_cast<std::size_t>(i)]);
    }
    out = out + term;
  }
  return out;
}

std::vector<SymplecticGenerator> standard_generators(int genus) {
  check_genus(genus);
  std::vector<SymplecticGenerator> out;
  for (int i = 1; i <= genus; ++i) out.push_back({SpKind::Swap, i, 0, 1});
  for (int i = 1; i <= genus; ++i) out.push_back({SpKind::Transvection, i, 0, 1});
  for (int i = 1; i <= genus; ++i)
    for (int j = 1; j <= genus; ++j)
      if (i != j) out.push_back({SpKind::Mix, i, j, 1});
  return out;
}

}  // namespace fr
