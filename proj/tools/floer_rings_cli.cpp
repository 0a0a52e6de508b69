// SPDX-License-Identifier: Apache-2.0
// floer-rings: command-line front end over the C API.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "floer_rings/floer_rings.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kGenusCeiling = 5;

struct Global {
  std::string format = "json";
  std::string output;
  bool timing = false;
  int threads = 0;
};

int api_error(fr_status st) {
  std::cerr << "floer-rings: " << fr_status_name(st) << ": " << fr_last_error() << "\n";
  return kExitUsage;
}

fr_format parse_format(const std::string& f) {
  if (f == "csv") return FR_FORMAT_CSV;
  if (f == "text") return FR_FORMAT_TEXT;
  return FR_FORMAT_JSON;
}

// Renders, writes and frees the report; returns the exit code.
int emit(fr_report* rep, const Global& g) {
  char* text = nullptr;
  fr_status st = fr_report_render(rep, parse_format(g.format), g.timing ? 1 : 0, &text);
  int passed = 0;
  if (st == FR_OK) st = fr_report_passed(rep, &passed);
  fr_report_free(rep);
  if (st != FR_OK) return api_error(st);
  if (g.output.empty()) {
    std::fputs(text, stdout);
  } else {
    std::ofstream out(g.output, std::ios::binary);
    out << text;
    if (!out) {
      fr_string_free(text);
      std::cerr << "floer-rings: cannot write " << g.output << "\n";
      return kExitUsage;
    }
  }
  fr_string_free(text);
  return passed ? kExitOk : kExitChecksFailed;
}

fr_status floer_report(int genus, const fr_perturbation* p, fr_report** rep) {
  fr_floer* ring = nullptr;
  fr_status st = fr_floer_build(genus, p, &ring);
  if (st == FR_OK) st = fr_floer_report(ring, rep);
  fr_floer_free(ring);
  return st;
}

int finish(fr_status st, fr_report** rep, const Global& g) { return st == FR_OK ? emit(*rep, g) : api_error(st); }

bool genus_allowed(int genus, bool allow_large) {
  if (genus <= kGenusCeiling) return true;
  if (!allow_large) {
    std::cerr << "floer-rings: genus " << genus << " exceeds the default ceiling " << kGenusCeiling
              << "; pass --allow-large to proceed\n";
    return false;
  }
  std::cerr << "floer-rings: warning: genus " << genus << " above " << kGenusCeiling << " may take a long time\n";
  return true;
}

std::optional<std::string> read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Floer and symmetric-product ring computations, verification suites and the adjunction oracle", "floer-rings"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(fr_version()));

  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
  app.add_option("--output,-o", g.output, "Write the report to this file instead of stdout");
  app.add_flag("--timing", g.timing, "Include per-stage timing (makes output run-dependent)");
  app.add_option("--threads", g.threads, "Worker threads (default: FLOER_RINGS_THREADS or all cores)")->check(CLI::PositiveNumber);

  // ring-floer
  int rf_genus = 0;
  auto* ring_floer = app.add_subcommand("ring-floer", "Floer ring at t = 0: ranks and local pieces");
  ring_floer->add_option("--genus,-g", rf_genus, "Genus g >= 1")->required()->check(CLI::PositiveNumber);

  // ring-fukaya-floer
  int rff_genus = 0;
  int rff_order = 4;
  std::optional<std::uint64_t> rff_seed;
  auto* ring_ff = app.add_subcommand("ring-fukaya-floer", "Fukaya-Floer ring over Q(i)[t]/(t^N)");
  ring_ff->add_option("--genus,-g", rff_genus, "Genus g >= 1")->required()->check(CLI::PositiveNumber);
  ring_ff->add_option("--order,-N", rff_order, "Truncation order N")->check(CLI::PositiveNumber)->capture_default_str();
  ring_ff->add_option("--seed", rff_seed, "Draw random f_ij from this seed (default: all f_ij = 0)");

  // ring-sympow
  int rs_genus = 0;
  int rs_d = 0;
  auto* ring_sym = app.add_subcommand("ring-sympow", "Cohomology ring of the d-th symmetric product");
  ring_sym->add_option("--genus,-g", rs_genus, "Genus g >= 1")->required()->check(CLI::PositiveNumber);
  ring_sym->add_option("--d", rs_d, "Degree d, 0 <= d <= g - 1")->required()->check(CLI::NonNegativeNumber);

  // verify
  fr_verify_options vopts;
  fr_verify_options_init(&vopts);
  std::string suite = "all";
  bool v_large = false;
  std::string suites_help = "Suite:";
  for (const char* s : {"rank", "eigen", "fin", "gr", "hom-symm", "sympow", "bounds", "perturb", "adjunct", "all"}) {
    suites_help += std::string(" ") + s;
  }
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, suites_help)
      ->check(CLI::IsMember({"rank", "eigen", "fin", "gr", "hom-symm", "sympow", "bounds", "perturb", "adjunct", "all"}))
      ->capture_default_str();
  verify->add_option("--genus-max", vopts.genus_max, "Largest genus")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--seed", vopts.seed, "Seed for the perturbation profiles (SplitMix64)")->capture_default_str();
  verify->add_option("--profiles", vopts.profiles, "Number of random perturbation profiles")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_option("--order,-N", vopts.order, "Truncation order N of perturbed rings")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_flag("--allow-large", v_large, "Permit genus-max above 5");

  // hom-symm
  int hs_genus = 0;
  std::optional<int> hs_r;
  bool hs_large = false;
  auto* hom = app.add_subcommand("hom-symm", "Compare graded profiles of H_r and the symmetric product");
  hom->add_option("--genus,-g", hs_genus, "Genus g >= 1")->required()->check(CLI::PositiveNumber);
  hom->add_option("--r", hs_r, "Single r with |r| <= g - 1 (default: every r)");
  hom->add_flag("--allow-large", hs_large, "Permit genus above 5");

  // adjunction
  fr_adjunction_case ac;
  fr_adjunction_case_init(&ac);
  bool odd_class = false;
  bool b1_zero = false;
  bool reject_odd = false;
  long long kds = 0;
  std::optional<int> d_b, d_k, l_opt, claimed;
  std::string batch;
  auto* adj = app.add_subcommand("adjunction", "Evaluate adjunction inequalities for integer case data");
  auto* g_opt = adj->add_option("--genus,-g", ac.genus, "Genus of Sigma")->check(CLI::PositiveNumber);
  adj->add_option("--self-int", ac.self_int, "Sigma^2 >= 0")->check(CLI::NonNegativeNumber);
  adj->add_flag("--odd-class", odd_class, "Sigma is an odd class");
  adj->add_option("--k-dot-sigma", kds, "K.Sigma");
  adj->add_option("--d-b", d_b, "Degree d(b)")->check(CLI::NonNegativeNumber);
  adj->add_option("--d-k", d_k, "Order of finite type d(K)")->check(CLI::NonNegativeNumber);
  adj->add_option("--l", l_opt, "Number of basis loops trivial in H_1(X)")->check(CLI::NonNegativeNumber);
  adj->add_flag("--b1-zero", b1_zero, "b_1(X) = 0");
  adj->add_option("--claimed-order", claimed, "Claimed order of finite type, checked against g")->check(CLI::NonNegativeNumber);
  adj->add_flag("--reject-odd", reject_odd, "Reject K.Sigma - Sigma^2 odd instead of warning");
  auto* batch_opt = adj->add_option("--batch", batch, "CSV file of cases ('-' for stdin)");
  batch_opt->excludes(g_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (g.threads > 0 && fr_set_threads(g.threads) != FR_OK) return api_error(FR_ERR_INVALID_ARGUMENT);

  fr_report* rep = nullptr;
  if (*ring_floer) {
    return finish(floer_report(rf_genus, nullptr, &rep), &rep, g);
  }
  if (*ring_ff) {
    fr_perturbation p{rff_order, rff_seed ? 1 : 0, rff_seed.value_or(0)};
    return finish(floer_report(rff_genus, &p, &rep), &rep, g);
  }
  if (*ring_sym) {
    if (rs_d > rs_genus - 1) {
      std::cerr << "floer-rings: --d must satisfy d <= g - 1\n";
      return kExitUsage;
    }
    fr_sympow* s = nullptr;
    fr_status st = fr_sympow_build(rs_genus, rs_d, &s);
    if (st == FR_OK) st = fr_sympow_report(s, &rep);
    fr_sympow_free(s);
    return finish(st, &rep, g);
  }
  if (*verify) {
    if (!genus_allowed(vopts.genus_max, v_large)) return kExitUsage;
    vopts.suite = suite.c_str();
    return finish(fr_verify(&vopts, &rep), &rep, g);
  }
  if (*hom) {
    if (!genus_allowed(hs_genus, hs_large)) return kExitUsage;
    if (hs_r && (*hs_r > hs_genus - 1 || *hs_r < -(hs_genus - 1))) {
      std::cerr << "floer-rings: --r must satisfy |r| <= g - 1\n";
      return kExitUsage;
    }
    return finish(fr_hom_symm(hs_genus, hs_r.value_or(0), hs_r ? 0 : 1, &rep), &rep, g);
  }
  if (*adj) {
    if (!batch.empty()) {
      const auto text = read_input(batch);
      if (!text) {
        std::cerr << "floer-rings: cannot read " << batch << "\n";
        return kExitUsage;
      }
      return finish(fr_adjunction_batch(text->c_str(), reject_odd ? 1 : 0, &rep), &rep, g);
    }
    if (g_opt->count() == 0) {
      std::cerr << "floer-rings: adjunction needs --genus or --batch\n";
      return kExitUsage;
    }
    ac.odd_class = odd_class ? 1 : 0;
    ac.b1_zero = b1_zero ? 1 : 0;
    ac.k_dot_sigma = kds;
    if (d_b) ac.has_d_b = 1, ac.d_b = *d_b;
    if (d_k) ac.has_d_k = 1, ac.d_k = *d_k;
    if (l_opt) ac.has_l = 1, ac.l = *l_opt;
    if (claimed) ac.has_order = 1, ac.order = *claimed;
    return finish(fr_adjunction_evaluate(&ac, reject_odd ? 1 : 0, &rep), &rep, g);
  }
  return kExitUsage;
}
