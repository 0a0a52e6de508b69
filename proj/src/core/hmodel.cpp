// SPDX-License-Identifier: Apache-2.0
#include "floer_rings/hmodel.hpp"

#include <algorithm>

namespace fr {

namespace {

std::string monomial_name(int a, OddMask t, int genus) {
  std::string s;
  if (a > 0) s = a == 1 ? "betabar" : "betabar^" + std::to_string(a);
  for (int i = 0; i < 2 * genus; ++i) {
    if (t & (OddMask(1) << i)) s += (s.empty() ? "" : "*") + std::string("psi") + std::to_string(i + 1);
  }
  return s.empty() ? "1" : s;
}

Json with(Json base, const Json& extra) {
  base.update(extra);
  return base;
}

Scalar minus_half_power(int i) {
  Scalar c(1);
  for (int s = 0; s < i; ++s) c *= Scalar(Rational(-1, 2));
  return c;
}

}  // namespace

HrModel::HrModel(const ArtinianAtlas& atlas, int r) : atlas_(&atlas), genus_(atlas.ring->genus), r_(r) {
  if (atlas.ring->profile.has_series()) fail(ErrorCode::InvalidArgument, "the H_r model is built at t = 0 only");
  if (std::abs(r) > genus_ - 1) fail(ErrorCode::OutOfRange, "r out of range");
  for (int k = 0; k < genus_ - std::abs(r); ++k) {
    const FloerPiece* piece = atlas.find(k, r);
    if (!piece) fail(ErrorCode::StructureMismatch, "missing piece k=" + std::to_string(k) + " r=" + std::to_string(r));
    Block b;
    b.k = k;
    b.piece = piece;
    b.coords = piece_coordinates(atlas, *piece);
    if (!b.coords.is_basis) fail(ErrorCode::StructureMismatch, "piece monomials are not a basis");
    b.primitive_dim = static_cast<int>(primitive_basis(genus_, k).size());
    b.rank = static_cast<int>(b.coords.monomials.size());
    b.offset = dim_;
    dim_ += b.primitive_dim * b.rank;
    block_of_k_[k] = blocks_.size();
    blocks_.push_back(std::move(b));
  }
}

const Vector& HrModel::piece_vector(std::size_t block, int a, int i) const {
  auto key = std::make_tuple(block, a, i);
  auto it = piece_cache_.find(key);
  if (it != piece_cache_.end()) return it->second;
  const Block& b = blocks_[block];
  auto x = b.coords.coordinates(piece_monomial(*atlas_, *b.piece, a, i));
  if (!x) fail(ErrorCode::StructureMismatch, "piece monomial outside the piece");
  return piece_cache_.emplace(key, std::move(*x)).first->second;
}

SparseVec HrModel::image(int a, OddMask t) const {
  auto it = lefschetz_cache_.find(t);
  if (it == lefschetz_cache_.end()) it = lefschetz_cache_.emplace(t, lefschetz_monomial(genus_, t)).first;
  SparseVec out;
  for (const auto& lc : it->second) {
    auto bit = block_of_k_.find(lc.primitive_degree);
    if (bit == block_of_k_.end()) continue;
    const Block& b = blocks_[bit->second];
    const Vector& pv = piece_vector(bit->second, a, lc.power);
    const Scalar factor = minus_half_power(lc.power);
    for (std::size_t p = 0; p < lc.coords.size(); ++p) {
      if (lc.coords[p].is_zero()) continue;
      const Scalar cp = lc.coords[p] * factor;
      for (std::size_t c = 0; c < pv.size(); ++c) {
        if (pv[c].is_zero()) continue;
        out.emplace_back(b.offset + static_cast<int>(p) * b.rank + static_cast<int>(c), cp * pv[c]);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::vector<CheckResult> verify_quotient_bounds(const ArtinianAtlas& atlas) {
  std::vector<CheckResult> out;
  const int g = atlas.ring->genus;
  const OddMask all = (OddMask(1) << (2 * g)) - 1;
  for (int r = -(g - 1); r <= g - 1; ++r) {
    HrModel h(atlas, r);
    const int l = h.l();
    const Json base = {{"genus", g}, {"r", r}, {"l", l}, {"dim", h.dim()}};

    // Piece nilpotency: the boundary n + m = gbar suffices.
    {
      bool ok = true;
      Json witness = nullptr;
      for (const auto& b : h.blocks()) {
        const int gbar = b.piece->gbar;
        for (int n = 0; n <= gbar && ok; ++n) {
          if (!is_zero_vector(piece_monomial(atlas, *b.piece, n, gbar - n))) {
            ok = false;
            witness = {{"k", b.k}, {"n", n}, {"m", gbar - n}};
          }
        }
      }
      out.push_back(make_check("bounds.piece_nilpotent", ok, base, witness));
    }

    SparseEchelon span(h.dim());
    SparseEchelon psi_all(h.dim());
    SparseEchelon psi_low(h.dim());
    const OddMask low = (OddMask(1) << l) - 1;
    bool degree_ok = true;
    Json degree_witness = nullptr;
    int degree_count = 0;
    for (int a = 0; a <= g; ++a) {
      for (OddMask t = 0; t <= all; ++t) {
        SparseVec v = h.image(a, t);
        if (2 * a + mask_degree(t) > 2 * l) {
          ++degree_count;
          if (!v.empty() && degree_ok) {
            degree_ok = false;
            degree_witness = {{"monomial", monomial_name(a, t, g)}};
          }
        }
        if (v.empty()) continue;
        span.insert(v, false);
        if (t != 0) psi_all.insert(v, false);
        if (t & low) psi_low.insert(v, false);
      }
    }
    out.push_back(make_check("hr.cyclic", span.size() == h.dim(), with(base, {{"span", span.size()}})));
    out.push_back(make_check("bounds.degree", degree_ok, with(base, {{"threshold", 2 * l}, {"monomials", degree_count}}),
                             degree_witness));

    // Only beta-bar powers need checking: psi_T with T nonempty already lies in the ideal.
    {
      const int d = l / 2;
      bool ok = true;
      Json witness = nullptr;
      for (int a = d + 1; a <= g && ok; ++a) {
        if (!psi_all.contains(h.image(a, 0))) {
          ok = false;
          witness = {{"monomial", monomial_name(a, 0, g)}};
        }
      }
      out.push_back(make_check("bounds.betabar_power", ok, with(base, {{"exponent", d + 1}}), witness));
    }

    // Products of a degree l+1 monomial with a monomial, avoiding psi_1..psi_l.
    {
      bool ok = true;
      Json witness = nullptr;
      int count = 0;
      for (int c = 0; c <= g && ok; ++c) {
        for (OddMask v = 0; v <= all && ok; ++v) {
          if (v & low) continue;
          const int nv = mask_degree(v);
          bool divisible = false;
          for (int n = 0; n <= c && !divisible; ++n) {
            const int j = l + 1 - 2 * n;
            divisible = j >= 0 && j <= nv;
          }
          if (!divisible) continue;
          ++count;
          if (!psi_low.contains(h.image(c, v))) {
            ok = false;
            witness = {{"monomial", monomial_name(c, v, g)}};
          }
        }
      }
      out.push_back(make_check("bounds.psi_ideal", ok, with(base, {{"products", count}}), witness));
    }
  }
  return out;
}

}  // namespace fr
