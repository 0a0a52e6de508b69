// SPDX-License-Identifier: Apache-2.0
#include "floer_rings/floer_rings.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "floer_rings/adjunct.hpp"
#include "floer_rings/error.hpp"
#include "floer_rings/floer.hpp"
#include "floer_rings/grcompare.hpp"
#include "floer_rings/suite.hpp"
#include "floer_rings/sympow.hpp"

struct fr_floer {
  std::shared_ptr<const fr::FloerRing> ring;
  fr::ArtinianAtlas atlas;
};

struct fr_sympow {
  fr::SymmetricProductRing s;
};

struct fr_report {
  fr::Report r;
};

namespace {

thread_local std::string g_last_error;

template <class F>
fr_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return FR_OK;
  } catch (const fr::Error& e) {
    g_last_error = e.what();
    return static_cast<fr_status>(static_cast<int>(e.code()));
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return FR_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return FR_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FR_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) fr::fail(fr::ErrorCode::InvalidArgument, what);
}

fr::PerturbationProfile to_profile(const fr_perturbation* p) {
  if (!p || p->order == 0) {
    require(!p || !p->random, "a random perturbation needs order >= 1");
    return fr::PerturbationProfile::unperturbed();
  }
  require(p->order > 0, "order must be >= 0");
  return p->random ? fr::PerturbationProfile::from_seed(p->seed, p->order) : fr::PerturbationProfile::zero_series(p->order);
}

fr::AdjunctionCase to_case(const fr_adjunction_case& c) {
  fr::AdjunctionCase a;
  a.genus = c.genus;
  a.self_int = c.self_int;
  a.odd_class = c.odd_class != 0;
  a.k_dot_sigma = c.k_dot_sigma;
  if (c.has_d_b) a.d_b = c.d_b;
  if (c.has_d_k) a.d_k = c.d_k;
  if (c.has_l) a.l = c.l;
  a.b1_zero = c.b1_zero != 0;
  if (c.has_order) a.order = c.order;
  return a;
}

// One result per case: FAIL when some applicable verdict fails.
fr::CheckResult case_result(const fr::AdjunctionCase& c, bool reject_odd) {
  fr::Json j = fr::evaluate_case(c, reject_odd);
  bool ok = true;
  fr::Json failed = fr::Json::array();
  for (const auto& v : j["verdicts"]) {
    if (v["status"] == "FAIL") {
      ok = false;
      failed.push_back(v);
    }
  }
  return fr::make_check("adjunction.case", ok, j, fr::Json{{"case", c.to_json()}, {"failed", failed}});
}

fr_report* new_report(fr::Report r) { return new fr_report{std::move(r)}; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* fr_version(void) { return "1.0.0"; }

const char* fr_status_name(fr_status status) {
  if (status == FR_OK) return "Ok";
  if (status < FR_ERR_INVALID_ARGUMENT || status > FR_ERR_INTERNAL) return "Unknown";
  return fr::error_code_name(static_cast<fr::ErrorCode>(static_cast<int>(status)));
}

const char* fr_last_error(void) { return g_last_error.c_str(); }

fr_status fr_set_threads(int n) {
  return guard([&] {
    require(n >= 1, "thread count must be >= 1");
    fr::set_thread_limit(n);
  });
}

fr_status fr_floer_build(int genus, const fr_perturbation* perturbation, fr_floer** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    require(genus >= 1, "genus must be >= 1");
    auto ring = std::make_shared<const fr::FloerRing>(fr::build_floer(genus, to_profile(perturbation)));
    auto h = std::make_unique<fr_floer>();
    h->atlas = fr::split_atlas(ring);
    h->ring = std::move(ring);
    *out = h.release();
  });
}

void fr_floer_free(fr_floer* ring) { delete ring; }

fr_status fr_floer_genus(const fr_floer* ring, int* out) {
  return guard([&] {
    require(ring && out, "null argument");
    *out = ring->ring->genus;
  });
}

fr_status fr_floer_rank(const fr_floer* ring, int k, int bar, int* out) {
  return guard([&] {
    require(ring && out, "null argument");
    const fr::FloerRing& f = *ring->ring;
    if (k < 0 || k >= f.genus) fr::fail(fr::ErrorCode::OutOfRange, "k out of range");
    const fr::QuotientAlgebra& q = bar ? f.tbar[static_cast<std::size_t>(k)] : f.t[static_cast<std::size_t>(k)];
    *out = q.dim() / (f.profile.has_series() ? f.profile.order : 1);
  });
}

fr_status fr_floer_piece_rank(const fr_floer* ring, int k, int r, int bar, int* out) {
  return guard([&] {
    require(ring && out, "null argument");
    const fr::FloerPiece* p = ring->atlas.find(k, r, bar != 0);
    if (!p) fr::fail(fr::ErrorCode::OutOfRange, "no piece with this (k, r)");
    *out = p->local.rank;
  });
}

fr_status fr_floer_report(const fr_floer* ring, fr_report** out) {
  return guard([&] {
    require(ring && out, "null argument");
    const fr::FloerRing& f = *ring->ring;
    fr::Report rep;
    rep.command = f.profile.has_series() ? "ring-fukaya-floer" : "ring-floer";
    rep.input = {{"genus", f.genus}, {"perturbation", f.profile.to_json()}};
    fr::Json ranks = fr::Json::array();
    const int n = f.profile.has_series() ? f.profile.order : 1;
    for (int k = 0; k < f.genus; ++k) {
      ranks.push_back({{"k", k},
                       {"T", f.t[static_cast<std::size_t>(k)].dim() / n},
                       {"Tbar", f.tbar[static_cast<std::size_t>(k)].dim() / n},
                       {"primitiveDim", f.primitive_dims[static_cast<std::size_t>(k)]}});
    }
    fr::Json pieces = fr::Json::array();
    for (const auto& p : ring->atlas.pieces) pieces.push_back(fr::piece_to_json(ring->atlas, p));
    rep.add(fr::make_check("ring.summary", true, {{"genus", f.genus}, {"ranks", ranks}, {"pieces", pieces}}));
    rep.append(fr::check_ranks(f));
    rep.append(fr::check_eigenvalues(ring->atlas));
    rep.append(fr::check_fin_ranks(ring->atlas));
    *out = new_report(std::move(rep));
  });
}

fr_status fr_sympow_build(int genus, int d, fr_sympow** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    require(genus >= 1, "genus must be >= 1");
    require(d >= 0, "d must be >= 0");
    *out = new fr_sympow{fr::build_sympow(genus, d)};
  });
}

void fr_sympow_free(fr_sympow* ring) { delete ring; }

fr_status fr_sympow_betti(const fr_sympow* ring, int* buf, size_t cap, size_t* len) {
  return guard([&] {
    require(ring && len, "null argument");
    const auto& b = ring->s.betti;
    *len = b.size();
    if (cap < b.size()) fr::fail(fr::ErrorCode::OutOfRange, "buffer too small");
    require(buf != nullptr || b.empty(), "null buffer");
    for (std::size_t i = 0; i < b.size(); ++i) buf[i] = b[i];
  });
}

fr_status fr_sympow_report(const fr_sympow* ring, fr_report** out) {
  return guard([&] {
    require(ring && out, "null argument");
    const fr::SymmetricProductRing& s = ring->s;
    fr::Report rep;
    rep.command = "ring-sympow";
    rep.input = {{"genus", s.genus}, {"d", s.degree}};
    rep.add(fr::make_check("sympow.betti", true, {{"genus", s.genus}, {"d", s.degree}, {"betti", s.betti}, {"dim", s.quotient.dim()}}));
    rep.append(fr::verify_presentation(s));
    rep.append(fr::poincare_pairing_check(s));
    rep.append(fr::check_sympow_structure(s));
    *out = new_report(std::move(rep));
  });
}

void fr_verify_options_init(fr_verify_options* opts) {
  if (!opts) return;
  const fr::SuiteOptions d;
  opts->suite = "all";
  opts->genus_max = d.genus_max;
  opts->seed = d.seed;
  opts->profiles = d.profiles;
  opts->order = d.order;
}

fr_status fr_verify(const fr_verify_options* opts, fr_report** out) {
  return guard([&] {
    require(opts && out && opts->suite, "null argument");
    fr::SuiteOptions o;
    o.genus_max = opts->genus_max;
    o.seed = opts->seed;
    o.profiles = opts->profiles;
    o.order = opts->order;
    *out = new_report(fr::run_suite(opts->suite, o));
  });
}

fr_status fr_hom_symm(int genus, int r, int all_r, fr_report** out) {
  return guard([&] {
    require(out != nullptr, "null output");
    require(genus >= 1, "genus must be >= 1");
    if (!all_r && std::abs(r) > genus - 1) fr::fail(fr::ErrorCode::OutOfRange, "|r| must be <= g - 1");
    fr::ArtinianAtlas atlas =
        fr::split_atlas(std::make_shared<const fr::FloerRing>(fr::build_floer(genus, fr::PerturbationProfile::unperturbed())));
    fr::Report rep;
    rep.command = "hom-symm";
    if (all_r) {
      rep.input = {{"genus", genus}, {"r", "all"}};
      rep.append(fr::verify_hom_symm(atlas));
    } else {
      rep.input = {{"genus", genus}, {"r", r}};
      const int d = genus - std::abs(r) - 1;
      const fr::GradedProfile pf = fr::profile_floer(atlas, r);
      const fr::GradedProfile ps = fr::profile_sympow(fr::build_sympow(genus, d));
      rep.add(fr::check_profile_formula(pf, genus - std::abs(r), "r=" + std::to_string(r)));
      rep.add(fr::check_profile_formula(ps, d + 1, "d=" + std::to_string(d)));
      fr::CheckResult m = fr::compare_profiles(pf, ps, r);
      m.data["floer"] = pf.to_json();
      m.data["sympow"] = ps.to_json();
      rep.add(std::move(m));
    }
    *out = new_report(std::move(rep));
  });
}

void fr_adjunction_case_init(fr_adjunction_case* c) {
  if (!c) return;
  std::memset(c, 0, sizeof(*c));
  c->genus = 1;
}

fr_status fr_adjunction_evaluate(const fr_adjunction_case* c, int reject_odd, fr_report** out) {
  return guard([&] {
    require(c && out, "null argument");
    const fr::AdjunctionCase a = to_case(*c);
    fr::Report rep;
    rep.command = "adjunction";
    rep.input = a.to_json();
    rep.input["rejectOdd"] = reject_odd != 0;
    rep.add(case_result(a, reject_odd != 0));
    *out = new_report(std::move(rep));
  });
}

fr_status fr_adjunction_batch(const char* csv, int reject_odd, fr_report** out) {
  return guard([&] {
    require(csv && out, "null argument");
    const auto cases = fr::parse_cases_csv(csv);
    fr::Report rep;
    rep.command = "adjunction";
    rep.input = {{"batch", true}, {"cases", cases.size()}, {"rejectOdd", reject_odd != 0}};
    for (const auto& c : cases) rep.add(case_result(c, reject_odd != 0));
    *out = new_report(std::move(rep));
  });
}

void fr_report_free(fr_report* report) { delete report; }

fr_status fr_report_passed(const fr_report* report, int* out) {
  return guard([&] {
    require(report && out, "null argument");
    *out = report->r.passed() ? 1 : 0;
  });
}

fr_status fr_report_result_count(const fr_report* report, size_t* out) {
  return guard([&] {
    require(report && out, "null argument");
    *out = report->r.results.size();
  });
}

fr_status fr_report_set_input(fr_report* report, const char* input_json) {
  return guard([&] {
    require(report && input_json, "null argument");
    fr::Json j = fr::Json::parse(input_json);
    require(j.is_object(), "input must be a JSON object");
    report->r.input = std::move(j);
  });
}

fr_status fr_report_render(const fr_report* report, fr_format format, int with_timing, char** out) {
  return guard([&] {
    require(report && out, "null argument");
    std::string s;
    switch (format) {
      case FR_FORMAT_JSON:
        s = report->r.to_json(with_timing != 0).dump(2) + "\n";
        break;
      case FR_FORMAT_CSV:
        s = report->r.to_csv();
        break;
      case FR_FORMAT_TEXT:
        s = report->r.to_text();
        break;
      default:
        fr::fail(fr::ErrorCode::InvalidArgument, "unknown format");
    }
    *out = dup_string(s);
  });
}

fr_status fr_report_parse(const char* json, fr_report** out) {
  return guard([&] {
    require(json && out, "null argument");
    *out = new_report(fr::Report::from_json(fr::Json::parse(json)));
  });
}

void fr_string_free(char* s) { std::free(s); }

}  // extern "C"
