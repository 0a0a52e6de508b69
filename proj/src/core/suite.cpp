// SPDX-License-Identifier: Apache-2.0
#include "floer_rings/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>

#include "floer_rings/adjunct.hpp"
#include "floer_rings/error.hpp"
#include "floer_rings/floer.hpp"
#include "floer_rings/grcompare.hpp"
#include "floer_rings/hmodel.hpp"
#include "floer_rings/sympow.hpp"

namespace fr {

namespace {

using Results = std::vector<CheckResult>;

void append(Results& out, const Results& more) { out.insert(out.end(), more.begin(), more.end()); }

void tag(Results& rs, const Json& profile) {
  for (auto& r : rs) r.data["profile"] = profile;
}

// One job per genus (or per (profile, genus)); concatenated in job order.
Results run_jobs(std::size_t count, const std::function<Results(std::size_t)>& job) {
  std::vector<Results> parts(count);
  parallel_for(count, [&](std::size_t i) { parts[i] = job(i); });
  Results out;
  for (const auto& p : parts) append(out, p);
  return out;
}

ArtinianAtlas atlas_for(int g, const PerturbationProfile& p) {
  return split_atlas(std::make_shared<const FloerRing>(build_floer(g, p)));
}

// Piece labels, ranks and constant terms, for comparing a perturbed atlas
// with the t = 0 one.
Json piece_signature(const ArtinianAtlas& a) {
  Json out = Json::array();
  auto add = [&out](const FloerPiece& p, bool bar) {
    Json ct = Json::object();
    for (const auto& [name, v] : p.local.constant_terms) ct[name] = v.to_string();
    out.push_back({{"bar", bar}, {"k", p.k}, {"r", p.r}, {"rank", p.local.rank}, {"constantTerms", ct}});
  };
  for (const auto& p : a.pieces) add(p, false);
  for (const auto& p : a.bar_pieces) add(p, true);
  return out;
}

Results suite_rank(const SuiteOptions& o, const std::vector<PerturbationProfile>& profiles) {
  std::vector<PerturbationProfile> all{PerturbationProfile::unperturbed()};
  all.insert(all.end(), profiles.begin(), profiles.end());
  const auto G = static_cast<std::size_t>(o.genus_max);
  return run_jobs(all.size() * G, [&](std::size_t i) {
    const PerturbationProfile& p = all[i / G];
    Results rs = check_ranks(build_floer(static_cast<int>(i % G) + 1, p));
    tag(rs, p.to_json());
    return rs;
  });
}

Results per_genus(const SuiteOptions& o, const std::function<Results(int)>& f) {
  return run_jobs(static_cast<std::size_t>(o.genus_max), [&](std::size_t i) { return f(static_cast<int>(i) + 1); });
}

Results suite_eigen(const SuiteOptions& o) {
  return per_genus(o, [](int g) {
    const ArtinianAtlas a = atlas_for(g, PerturbationProfile::unperturbed());
    Results rs = check_eigenvalues(a);
    append(rs, check_alpha_quotients(g));
    return rs;
  });
}

Results suite_fin(const SuiteOptions& o) {
  return per_genus(o, [](int g) { return check_fin_ranks(atlas_for(g, PerturbationProfile::unperturbed())); });
}

Results suite_gr(const SuiteOptions& o) {
  return per_genus(o, [](int g) { return verify_gr_structure(atlas_for(g, PerturbationProfile::unperturbed())); });
}

Results suite_hom_symm(const SuiteOptions& o) {
  Results out;
  // verify_hom_symm parallelizes internally.
  for (int g = 1; g <= o.genus_max; ++g) append(out, verify_hom_symm(atlas_for(g, PerturbationProfile::unperturbed())));
  return out;
}

Results suite_sympow(const SuiteOptions& o) {
  std::vector<std::pair<int, int>> items;
  for (int g = 1; g <= std::min(o.genus_max, o.sympow_genus_max); ++g) {
    for (int d = 0; d <= g - 1; ++d) items.emplace_back(g, d);
  }
  return run_jobs(items.size(), [&](std::size_t i) {
    const SymmetricProductRing s = build_sympow(items[i].first, items[i].second);
    Results rs = verify_presentation(s);
    append(rs, poincare_pairing_check(s));
    append(rs, check_sympow_structure(s));
    return rs;
  });
}

Results suite_bounds(const SuiteOptions& o) {
  return per_genus(o, [](int g) {
    const ArtinianAtlas a = atlas_for(g, PerturbationProfile::unperturbed());
    Results rs = verify_rewriting_degrees(a);
    append(rs, verify_quotient_bounds(a));
    append(rs, check_gamma_inclusion(*a.ring));
    append(rs, check_hf_presentation(a));
    return rs;
  });
}

Results suite_perturb(const SuiteOptions& o, const std::vector<PerturbationProfile>& profiles) {
  std::vector<Json> reference(static_cast<std::size_t>(o.genus_max));
  parallel_for(reference.size(), [&](std::size_t i) {
    reference[i] = piece_signature(atlas_for(static_cast<int>(i) + 1, PerturbationProfile::unperturbed()));
  });
  const auto G = static_cast<std::size_t>(o.genus_max);
  return run_jobs(profiles.size() * G, [&](std::size_t i) {
    const PerturbationProfile& p = profiles[i / G];
    const int g = static_cast<int>(i % G) + 1;
    const ArtinianAtlas a = atlas_for(g, p);
    Results rs = check_ranks(*a.ring);
    append(rs, check_eigenvalues(a));
    append(rs, check_fin_ranks(a));
    append(rs, verify_gr_structure(a));
    append(rs, verify_rewriting_degrees(a));
    const Json sig = piece_signature(a);
    const Json& ref = reference[static_cast<std::size_t>(g - 1)];
    rs.push_back(make_check("perturb.invariance", sig == ref, {{"genus", g}, {"pieces", sig.size()}},
                            {{"perturbed", sig}, {"unperturbed", ref}}));
    tag(rs, p.to_json());
    return rs;
  });
}

Results run_named(const std::string& name, const SuiteOptions& o, const std::vector<PerturbationProfile>& profiles) {
  if (name == "rank") return suite_rank(o, profiles);
  if (name == "eigen") return suite_eigen(o);
  if (name == "fin") return suite_fin(o);
  if (name == "gr") return suite_gr(o);
  if (name == "hom-symm") return suite_hom_symm(o);
  if (name == "sympow") return suite_sympow(o);
  if (name == "bounds") return suite_bounds(o);
  if (name == "perturb") return suite_perturb(o, profiles);
  if (name == "adjunct") return verify_adjunction();
  fail(ErrorCode::InvalidArgument, "unknown suite: " + name);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"rank", "eigen", "fin", "gr", "hom-symm", "sympow", "bounds", "perturb", "adjunct", "all"};
  return names;
}

Report run_suite(const std::string& name, const SuiteOptions& o) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    fail(ErrorCode::InvalidArgument, "unknown suite: " + name);
  }
  if (o.genus_max < 1) fail(ErrorCode::InvalidArgument, "genus-max must be >= 1");
  if (o.profiles < 0) fail(ErrorCode::InvalidArgument, "profile count must be >= 0");
  if (o.order < 1) fail(ErrorCode::InvalidArgument, "truncation order must be >= 1");
  const auto profiles = random_profiles(o.seed, o.profiles, o.order);

  Report rep;
  rep.command = "verify";
  Json seeds = Json::array();
  for (const auto& p : profiles) seeds.push_back(p.seed);
  rep.input = {{"suite", name},         {"genusMax", o.genus_max}, {"seed", o.seed},          {"profiles", o.profiles},
               {"order", o.order},      {"sympowGenusMax", std::min(o.genus_max, o.sympow_genus_max)},
               {"profileSeeds", seeds}};
  std::vector<std::string> parts;
  if (name == "all") {
    parts.assign(suite_names().begin(), suite_names().end() - 1);
  } else {
    parts.push_back(name);
  }
  rep.timing = Json::object();
  for (const auto& part : parts) {
    const auto t0 = std::chrono::steady_clock::now();
    rep.append(run_named(part, o, profiles));
    rep.timing[part] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  return rep;
}

}  // namespace fr
