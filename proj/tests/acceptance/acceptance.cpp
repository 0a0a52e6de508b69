// SPDX-License-Identifier: Apache-2.0
// Acceptance suite: one PASS/FAIL line per criterion. Criteria 1-9 run the
// verification suites in process; criterion 10 runs the CLI twice.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <CLI11.hpp>

#include "floer_rings/report.hpp"
#include "floer_rings/suite.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  // Wall-clock budget in seconds; 0 means none.
  double budget;
  std::function<Outcome()> run;
};

// Runs the named suites and requires every result to pass, at least `min_checks`
// results, and each name in `required` to appear.
Outcome run_suites(const std::vector<std::string>& suites, const fr::SuiteOptions& o, std::size_t min_checks,
                   const std::set<std::string>& required) {
  std::size_t total = 0, failed = 0;
  std::set<std::string> seen;
  std::string first_failure;
  for (const auto& s : suites) {
    const fr::Report r = fr::run_suite(s, o);
    for (const auto& c : r.results) {
      ++total;
      seen.insert(c.check);
      if (!c.pass) {
        ++failed;
        if (first_failure.empty()) first_failure = c.check + " " + c.data.dump() + " witness " + c.witness.dump();
      }
    }
  }
  std::string missing;
  for (const auto& name : required)
    if (!seen.count(name)) missing += " " + name;
  Outcome out;
  out.pass = failed == 0 && total >= min_checks && missing.empty();
  out.detail = std::to_string(total) + " checks, " + std::to_string(failed) + " failed";
  if (total < min_checks) out.detail += ", expected at least " + std::to_string(min_checks);
  if (!missing.empty()) out.detail += ", missing:" + missing;
  if (!first_failure.empty()) out.detail += "; first failure: " + first_failure;
  return out;
}

struct Captured {
  int status = -1;
  std::string out;
};

Captured capture(const std::string& cmd) {
  Captured c;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return c;
  std::array<char, 65536> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) c.out.append(buf.data(), n);
  const int st = pclose(p);
  c.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return c;
}

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char ch : s) q += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return q + "'";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"floer-rings acceptance suite"};
  std::string cli;
  std::set<int> only;
  int genus_max = 5;
  int profiles = 20;
  std::uint64_t seed = 1;
  app.add_option("--cli", cli, "Path to the floer-rings executable (criterion 10)");
  app.add_option("--only", only, "Run only these criteria");
  app.add_option("--genus-max", genus_max, "Genus ceiling for criteria 1-5, 7, 8")->check(CLI::Range(1, 5));
  app.add_option("--profiles", profiles, "Random perturbation profiles")->check(CLI::Range(0, 1000));
  app.add_option("--seed", seed, "Seed for the perturbation profiles");
  CLI11_PARSE(app, argc, argv);

  fr::SuiteOptions o;
  o.genus_max = genus_max;
  o.profiles = profiles;
  o.seed = seed;
  o.order = 4;
  fr::SuiteOptions t0 = o;
  t0.profiles = 0;
  fr::SuiteOptions g4 = t0;
  g4.genus_max = std::min(genus_max, 4);

  // sum over g of g items (one per k)
  const std::size_t per_k = static_cast<std::size_t>(genus_max * (genus_max + 1) / 2);

  const std::vector<Criterion> criteria{
      {1, "rank formulas for T and T-bar, t = 0 and perturbed", 60,
       [&] { return run_suites({"rank"}, o, 2 * per_k * static_cast<std::size_t>(profiles + 1), {"rank.T", "rank.Tbar"}); }},
      {2, "eigenvalue constant terms of T-bar_{g,0}", 0,
       [&] { return run_suites({"eigen"}, t0, static_cast<std::size_t>(genus_max), {"eigenvalues.Tbar", "alpha.quotient"}); }},
      {3, "local ranks of R-bar_{g,k,r}", 0, [&] { return run_suites({"fin"}, t0, per_k, {"fin.ranks"}); }},
      {4, "Gr_gamma nilpotency indices and slice ranks", 0,
       [&] { return run_suites({"gr"}, t0, per_k, {"gr.piece", "gr.slices"}); }},
      {5, "Floer and symmetric product graded profiles agree", 300,
       [&] { return run_suites({"hom-symm"}, t0, 1, {"grcompare.formula", "grcompare.match"}); }},
      {6, "symmetric product presentation, pairing and recurrences, g <= 4", 0,
       [&] {
         return run_suites({"sympow"}, g4, 1,
                           {"sympow.membership", "sympow.ideal_equality", "sympow.recurrence", "sympow.pairing"});
       }},
      {7, "degree bounds on H_r at t = 0", 0,
       [&] {
         return run_suites({"bounds"}, t0, 1,
                           {"bounds.piece_nilpotent", "bounds.degree", "bounds.betabar_power", "bounds.psi_ideal"});
       }},
      {8, "perturbation robustness of relations and piece data", 0,
       [&] {
         return run_suites({"perturb"}, o, per_k * static_cast<std::size_t>(profiles),
                           profiles > 0 ? std::set<std::string>{"rewrite.ee", "perturb.invariance"} : std::set<std::string>{});
       }},
      {9, "adjunction sweep and sharpness family", 1,
       [&] { return run_suites({"adjunct"}, t0, 2, {"adjunct.sweep", "adjunct.sharpness"}); }},
      {10, "byte-identical JSON for verify --suite all --genus-max 4 --seed 7", 0,
       [&] {
         Outcome out;
         if (cli.empty()) {
           out.detail = "no --cli given";
           return out;
         }
         const std::string cmd = quote(cli) + " verify --suite all --genus-max 4 --seed 7";
         const Captured a = capture(cmd), b = capture(cmd);
         out.pass = a.status == 0 && b.status == 0 && !a.out.empty() && a.out == b.out;
         out.detail = "exit " + std::to_string(a.status) + "/" + std::to_string(b.status) + ", " +
                      std::to_string(a.out.size()) + " bytes, " + (a.out == b.out ? "identical" : "different");
         return out;
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto t0c = Clock::now();
    Outcome r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0c).count();
    char timing[96];
    if (c.budget > 0) {
      std::snprintf(timing, sizeof timing, "%.2f s (limit %.0f s)", secs, c.budget);
      if (secs >= c.budget) {
        r.pass = false;
        r.detail += ", over time limit";
      }
    } else {
      std::snprintf(timing, sizeof timing, "%.2f s", secs);
    }
    if (!r.pass) ++failures;
    std::cout << "criterion " << c.id << ": " << (r.pass ? "PASS" : "FAIL") << " | " << c.title
              << " | exact | " << r.detail << " | " << timing << std::endl;
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed" : "acceptance: " + std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
