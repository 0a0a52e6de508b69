// SPDX-License-Identifier: Apache-2.0
#include "floer_rings/grcompare.hpp"

#include <cstdlib>

namespace fr {

namespace {

GrBlock block_from_slices(int k, int multiplicity, const std::vector<GrSlice>& slices) {
  GrBlock b;
  b.k = k;
  b.multiplicity = multiplicity;
  for (const auto& s : slices) b.slices.push_back({s.dim, s.nilpotency, s.dim == s.nilpotency});
  return b;
}

}  // namespace

int GradedProfile::total_dim() const {
  int n = 0;
  for (const auto& b : blocks) {
    for (const auto& s : b.slices) n += b.multiplicity * s.dim;
  }
  return n;
}

Json GradedProfile::to_json() const {
  Json bs = Json::array();
  for (const auto& b : blocks) {
    Json ss = Json::array();
    for (const auto& s : b.slices) ss.push_back({{"dim", s.dim}, {"index", s.nilpotency}, {"cyclic", s.cyclic}});
    bs.push_back({{"k", b.k}, {"multiplicity", b.multiplicity}, {"slices", ss}});
  }
  return {{"source", source}, {"genus", genus}, {"totalDim", total_dim()}, {"blocks", bs}};
}

GradedProfile profile_floer(const ArtinianAtlas& atlas, int r) {
  const FloerRing& f = *atlas.ring;
  if (f.profile.has_series()) fail(ErrorCode::InvalidArgument, "profiles are computed at t = 0");
  const int g = f.genus;
  if (std::abs(r) > g - 1) fail(ErrorCode::OutOfRange, "r out of range");
  GradedProfile p;
  p.source = "floer";
  p.genus = g;
  for (int k = 0; k < g - std::abs(r); ++k) {
    const FloerPiece* piece = atlas.find(k, r);
    if (!piece) fail(ErrorCode::StructureMismatch, "missing piece");
    const QuotientAlgebra& q = f.t[static_cast<std::size_t>(k)];
    const auto slices = associated_graded(as_op(q.operator_of("gamma")), shifted(q.operator_of("beta"), betabar_shift(r)),
                                          piece->local.basis);
    p.blocks.push_back(block_from_slices(k, static_cast<int>(primitive_basis(g, k).size()), slices));
  }
  return p;
}

GradedProfile profile_sympow(const SymmetricProductRing& s) {
  const QuotientAlgebra& q = s.quotient;
  GradedProfile p;
  p.source = "sympow";
  p.genus = s.genus;
  const LinearOp theta = [&q](const Vector& v) { return apply_theta(q, v); };
  const LinearOp eta = as_op(q.operator_of("eta"));
  for (int k = 0; k <= s.degree && k <= s.genus; ++k) {
    std::vector<Vector> gens;
    for (const auto& level : eta_theta_orbit(q, q.normal_form(leading_primitive(q.ring(), k)))) {
      gens.insert(gens.end(), level.begin(), level.end());
    }
    const Matrix w = column_basis(Matrix::from_columns(gens, q.dim()));
    p.blocks.push_back(block_from_slices(k, static_cast<int>(primitive_basis(s.genus, k).size()), associated_graded(theta, eta, w)));
  }
  return p;
}

bool same_profile(const GradedProfile& a, const GradedProfile& b) { return a.genus == b.genus && a.blocks == b.blocks; }

CheckResult compare_profiles(const GradedProfile& floer, const GradedProfile& sympow, int r) {
  const bool ok = same_profile(floer, sympow);
  Json data = {{"genus", floer.genus}, {"r", r}, {"d", floer.genus - std::abs(r) - 1}, {"totalDim", floer.total_dim()}};
  return make_check("grcompare.match", ok, data, {{"floer", floer.to_json()}, {"sympow", sympow.to_json()}});
}

CheckResult check_profile_formula(const GradedProfile& p, int n, const std::string& label) {
  bool ok = true;
  Json witness = nullptr;
  for (const auto& b : p.blocks) {
    const int slices = n - b.k;
    if (static_cast<int>(b.slices.size()) != slices) {
      ok = false;
      witness = {{"k", b.k}, {"slices", b.slices.size()}, {"expected", slices}};
      break;
    }
    for (int i = 0; i < slices; ++i) {
      const auto& s = b.slices[static_cast<std::size_t>(i)];
      const int want = (n - b.k - i - 1) / 2 + 1;
      if (s.nilpotency != want || !s.cyclic) {
        ok = false;
        witness = {{"k", b.k}, {"i", i}, {"index", s.nilpotency}, {"dim", s.dim}, {"expected", want}};
        break;
      }
    }
    if (!ok) break;
  }
  return make_check("grcompare.formula", ok, {{"source", p.source}, {"genus", p.genus}, {"case", label}}, witness);
}

std::vector<CheckResult> verify_hom_symm(const ArtinianAtlas& atlas) {
  std::vector<CheckResult> out;
  const int g = atlas.ring->genus;
  std::vector<SymmetricProductRing> sym(static_cast<std::size_t>(g));
  parallel_for(static_cast<std::size_t>(g), [&](std::size_t d) { sym[d] = build_sympow(g, static_cast<int>(d)); });
  for (int r = -(g - 1); r <= g - 1; ++r) {
    const int d = g - std::abs(r) - 1;
    const GradedProfile pf = profile_floer(atlas, r);
    const GradedProfile ps = profile_sympow(sym[static_cast<std::size_t>(d)]);
    out.push_back(check_profile_formula(pf, g - std::abs(r), "r=" + std::to_string(r)));
    out.push_back(check_profile_formula(ps, d + 1, "d=" + std::to_string(d)));
    out.push_back(compare_profiles(pf, ps, r));
  }
  return out;
}

}  // namespace fr
