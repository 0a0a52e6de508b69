// SPDX-License-Identifier: Apache-2.0
#include "floer_rings/adjunct.hpp"

#include <cstdlib>
#include <sstream>

#include "floer_rings/error.hpp"

namespace fr {

namespace {

template <class T>
Json opt_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

long long two_g_minus_two(const AdjunctionCase& c) { return 2LL * c.genus - 2; }

void validate(const AdjunctionCase& c) {
  if (c.genus < 1) fail(ErrorCode::InvalidArgument, "genus must be >= 1");
  if (c.self_int < 0) fail(ErrorCode::InvalidArgument, "self-intersection must be >= 0");
  if (c.d_b && *c.d_b < 0) fail(ErrorCode::InvalidArgument, "d(b) must be >= 0");
  if (c.d_k && *c.d_k < 0) fail(ErrorCode::InvalidArgument, "d(K) must be >= 0");
  if (c.l && (*c.l < 0 || *c.l > 2 * c.genus)) fail(ErrorCode::InvalidArgument, "l must lie in [0, 2g]");
  if (c.order && *c.order < 0) fail(ErrorCode::InvalidArgument, "order must be >= 0");
}

Verdict not_applicable(std::string theorem, std::string reason) {
  Verdict v;
  v.theorem = std::move(theorem);
  v.applicable = false;
  v.reason = std::move(reason);
  return v;
}

// Reduces, or returns the NotApplicable reason.
std::optional<std::string> reduce_or_reason(const AdjunctionCase& c, Reduction& out) {
  try {
    out = reduce(c);
    return std::nullopt;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotApplicable) throw;
    return std::string(e.what());
  }
}

Verdict inequality(std::string theorem, const AdjunctionCase& reduced, long long extra) {
  Verdict v;
  v.theorem = std::move(theorem);
  v.lhs = adjunction_invariant(reduced) + extra;
  v.rhs = two_g_minus_two(reduced);
  v.holds = v.lhs <= v.rhs;
  if (reduced.k_dot_sigma % 2 != 0) v.warnings.push_back("K.Sigma is odd after reduction; a basic class pairs evenly");
  return v;
}

}  // namespace

Json AdjunctionCase::to_json() const {
  return {{"genus", genus},       {"selfInt", self_int}, {"oddClass", odd_class}, {"kDotSigma", k_dot_sigma},
          {"dB", opt_json(d_b)},  {"dK", opt_json(d_k)}, {"l", opt_json(l)},      {"b1Zero", b1_zero},
          {"order", opt_json(order)}};
}

Json ReductionTrace::to_json() const {
  return {{"blowUps", blow_ups}, {"properTransformGenus", proper_transform_genus}, {"signs", signs}, {"kDotSigma", k_dot_sigma}};
}

Json Verdict::to_json() const {
  Json j = {{"theorem", theorem}};
  if (!applicable) {
    j["status"] = "NOT_APPLICABLE";
    j["reason"] = reason;
  } else {
    j["status"] = holds ? "PASS" : "FAIL";
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["equality"] = equality();
    if (!reason.empty()) j["reason"] = reason;
  }
  if (!warnings.empty()) j["warnings"] = warnings;
  return j;
}

long long adjunction_invariant(const AdjunctionCase& c) { return std::llabs(c.k_dot_sigma) + c.self_int; }

Reduction reduce(const AdjunctionCase& c) {
  validate(c);
  if (c.self_int == 0 && !c.odd_class) fail(ErrorCode::NotApplicable, "Sigma^2 = 0 requires an odd class");
  Reduction r;
  r.reduced = c;
  r.trace.proper_transform_genus = c.genus;
  // Each blow-up: Sigma -> Sigma - E, K -> K + eps E with eps = sign(K.Sigma),
  // sign(0) = +1. Then K.Sigma grows by eps in absolute value and Sigma^2
  // drops by one. The proper transform meets E once, so the class is odd.
  while (r.reduced.self_int > 0) {
    const int eps = r.reduced.k_dot_sigma >= 0 ? 1 : -1;
    r.trace.signs.push_back(eps);
    r.reduced.k_dot_sigma += eps;
    r.reduced.self_int -= 1;
    ++r.trace.blow_ups;
  }
  r.reduced.odd_class = true;
  r.trace.k_dot_sigma = r.reduced.k_dot_sigma;
  return r;
}

Verdict check_thm0(const AdjunctionCase& c) {
  Reduction red;
  if (auto why = reduce_or_reason(c, red)) return not_applicable("0", *why);
  Verdict v;
  v.theorem = "0";
  v.rhs = c.genus;
  if (c.order) {
    v.lhs = *c.order;
    v.holds = *c.order <= c.genus;
  } else {
    v.lhs = c.genus;
    v.holds = true;
    v.reason = "no claimed order; bound only";
  }
  return v;
}

Verdict check_thmA(const AdjunctionCase& c) {
  if (!c.d_b) return not_applicable("A", "d(b) not supplied");
  Reduction red;
  if (auto why = reduce_or_reason(c, red)) return not_applicable("A", *why);
  return inequality("A", red.reduced, *c.d_b);
}

Verdict check_thmB(const AdjunctionCase& c) {
  if (!c.b1_zero) return not_applicable("B", "requires b_1 = 0");
  if (!c.d_k) return not_applicable("B", "d(K) not supplied");
  Reduction red;
  if (auto why = reduce_or_reason(c, red)) return not_applicable("B", *why);
  return inequality("B", red.reduced, 2LL * *c.d_k);
}

Verdict check_thmC(const AdjunctionCase& c) {
  if (!c.l) return not_applicable("C", "l not supplied");
  if (!c.d_b) return not_applicable("C", "d(b) not supplied");
  validate(c);
  if (*c.d_b > *c.l + 1) return not_applicable("C", "requires d(b) <= l + 1");
  Reduction red;
  if (auto why = reduce_or_reason(c, red)) return not_applicable("C", *why);
  return inequality("C", red.reduced, 2LL * *c.d_b);
}

Json evaluate_case(const AdjunctionCase& c, bool reject_odd) {
  validate(c);
  const bool odd = (c.k_dot_sigma - c.self_int) % 2 != 0;
  if (odd && reject_odd) fail(ErrorCode::InvalidArgument, "K.Sigma - Sigma^2 is odd");
  Json j = {{"case", c.to_json()}};
  Reduction red;
  if (auto why = reduce_or_reason(c, red)) {
    j["reduction"] = nullptr;
    j["reductionError"] = *why;
  } else {
    j["reduction"] = red.trace.to_json();
    j["invariant"] = adjunction_invariant(c);
  }
  Json vs = Json::array();
  for (const Verdict& v : {check_thm0(c), check_thmA(c), check_thmB(c), check_thmC(c)}) vs.push_back(v.to_json());
  j["verdicts"] = vs;
  if (odd) j["warnings"] = Json::array({"K.Sigma and Sigma^2 differ in parity"});
  return j;
}

namespace {

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

long long parse_int(const std::string& s, std::size_t row, const char* col) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "row " + std::to_string(row) + ": bad integer in " + col + ": '" + s + "'");
  }
}

bool parse_bool(const std::string& s, std::size_t row, const char* col) {
  if (s == "1" || s == "true" || s == "yes") return true;
  if (s.empty() || s == "0" || s == "false" || s == "no") return false;
  fail(ErrorCode::ParseError, "row " + std::to_string(row) + ": bad boolean in " + col + ": '" + s + "'");
}

std::optional<int> parse_opt(const std::string& s, std::size_t row, const char* col) {
  if (s.empty()) return std::nullopt;
  return static_cast<int>(parse_int(s, row, col));
}

}  // namespace

std::vector<AdjunctionCase> parse_cases_csv(const std::string& text) {
  static const char* const kCols[] = {"genus", "self_int", "odd_class", "k_dot_sigma", "d_b", "d_k", "l", "b1_zero", "order"};
  std::istringstream in(text);
  std::string line;
  std::vector<AdjunctionCase> out;
  bool header = false;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    auto cells = split_row(line);
    if (!header) {
      if (cells.size() < 8 || cells.size() > 9) fail(ErrorCode::ParseError, "header must have 8 or 9 columns");
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] != kCols[i]) fail(ErrorCode::ParseError, std::string("header column ") + std::to_string(i + 1) + " must be " + kCols[i]);
      }
      header = true;
      continue;
    }
    if (cells.size() < 8 || cells.size() > 9) fail(ErrorCode::ParseError, "row " + std::to_string(row) + ": expected 8 or 9 fields");
    cells.resize(9);
    AdjunctionCase c;
    c.genus = static_cast<int>(parse_int(cells[0], row, kCols[0]));
    c.self_int = static_cast<int>(parse_int(cells[1], row, kCols[1]));
    c.odd_class = parse_bool(cells[2], row, kCols[2]);
    c.k_dot_sigma = parse_int(cells[3], row, kCols[3]);
    c.d_b = parse_opt(cells[4], row, kCols[4]);
    c.d_k = parse_opt(cells[5], row, kCols[5]);
    c.l = parse_opt(cells[6], row, kCols[6]);
    c.b1_zero = parse_bool(cells[7], row, kCols[7]);
    c.order = parse_opt(cells[8], row, kCols[8]);
    out.push_back(c);
  }
  if (!header) fail(ErrorCode::ParseError, "missing header");
  return out;
}

std::vector<CheckResult> verify_adjunction() {
  std::vector<CheckResult> out;
  long long cases = 0;
  Json first_failure = nullptr;
  auto note = [&](bool ok, const char* what, const AdjunctionCase& c) {
    if (!ok && first_failure.is_null()) first_failure = {{"property", what}, {"case", c.to_json()}};
  };
  for (int g = 1; g <= 6; ++g) {
    for (int s = 0; s <= 6; ++s) {
      for (int k = -10; k <= 10; ++k) {
        for (int odd = 0; odd <= 1; ++odd) {
          AdjunctionCase c;
          c.genus = g;
          c.self_int = s;
          c.odd_class = odd == 1;
          c.k_dot_sigma = k;
          if (s == 0 && !c.odd_class) {
            bool threw = false;
            try {
              reduce(c);
            } catch (const Error& e) {
              threw = e.code() == ErrorCode::NotApplicable;
            }
            note(threw, "not_applicable", c);
            ++cases;
            continue;
          }
          const Reduction red = reduce(c);
          note(red.reduced.self_int == 0 && red.reduced.odd_class && red.trace.blow_ups == s &&
                   static_cast<int>(red.trace.signs.size()) == s && red.trace.proper_transform_genus == g,
               "reduced_shape", c);
          note(adjunction_invariant(red.reduced) == adjunction_invariant(c), "invariance", c);
          for (int db = 0; db <= 2 * g + 2; ++db) {
            ++cases;
            AdjunctionCase a = c;
            a.d_b = db;
            const Verdict before = check_thmA(a);
            const bool raw = adjunction_invariant(a) + db <= two_g_minus_two(a);
            AdjunctionCase ra = red.reduced;
            ra.d_b = db;
            const Verdict after = check_thmA(ra);
            note(before.applicable && after.applicable && before.holds == raw && after.holds == raw &&
                     before.lhs == after.lhs,
                 "verdict_stability", c);
            AdjunctionCase up = a;
            up.d_b = db + 1;
            note(before.holds || !check_thmA(up).holds, "monotonicity", a);
            // b = p^n: d(b) = 2n, and B with d(K) >= n is at least as strong.
            if (db % 2 == 0) {
              for (int dk = db / 2; dk <= db / 2 + 1; ++dk) {
                AdjunctionCase b = a;
                b.b1_zero = true;
                b.d_k = dk;
                note(!check_thmB(b).holds || before.holds, "b_implies_a", b);
              }
            }
          }
        }
      }
    }
  }
  out.push_back(make_check("adjunct.sweep", first_failure.is_null(),
                           {{"genusMax", 6}, {"selfIntMax", 6}, {"kDotSigmaMax", 10}, {"cases", cases}}, first_failure));

  Json sharp_fail = nullptr;
  int family = 0;
  for (int g = 1; g <= 4; ++g) {
    for (int l = 0; l <= 4; ++l) {
      AdjunctionCase c;
      c.genus = g + l;
      c.self_int = 0;
      c.odd_class = true;
      c.k_dot_sigma = 2LL * g - 2;
      c.d_b = l;
      c.l = l;
      const Verdict v = check_thmC(c);
      ++family;
      if ((!v.applicable || !v.holds || !v.equality()) && sharp_fail.is_null()) {
        sharp_fail = {{"g", g}, {"l", l}, {"verdict", v.to_json()}};
      }
    }
  }
  out.push_back(make_check("adjunct.sharpness", sharp_fail.is_null(), {{"gMax", 4}, {"lMax", 4}, {"cases", family}}, sharp_fail));
  return out;
}

}  // namespace fr
