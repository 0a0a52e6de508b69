// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "floer_rings/report.hpp"

namespace fr {

struct AdjunctionCase {
  int genus = 1;
  int self_int = 0;
  bool odd_class = false;
  long long k_dot_sigma = 0;
  std::optional<int> d_b;
  std::optional<int> d_k;
  /// Number of basis loops of Sigma that are trivial in H_1(X).
  std::optional<int> l;
  bool b1_zero = false;
  /// Claimed order of finite type, for the genus bound.
  std::optional<int> order;

  Json to_json() const;
};

struct ReductionTrace {
  int blow_ups = 0;
  int proper_transform_genus = 0;
  /// Sign used at each blow-up; the new basic class pairs with the proper
  /// transform as K.Sigma + sign.
  std::vector<int> signs;
  long long k_dot_sigma = 0;

  Json to_json() const;
};

struct Reduction {
  AdjunctionCase reduced;
  ReductionTrace trace;
};

/// Blows up Sigma^2 points until the proper transform has square zero and
/// odd class. |K.Sigma| + Sigma^2 is preserved. Throws NotApplicable for an
/// even class of square zero, InvalidArgument for negative squares.
Reduction reduce(const AdjunctionCase& c);

/// |K.Sigma| + Sigma^2.
long long adjunction_invariant(const AdjunctionCase& c);

struct Verdict {
  std::string theorem;
  bool applicable = true;
  bool holds = false;
  long long lhs = 0;
  long long rhs = 0;
  std::string reason;
  std::vector<std::string> warnings;

  bool equality() const noexcept { return applicable && lhs == rhs; }
  Json to_json() const;
};

/// Order of finite type is at most g; holds unless a claimed order exceeds g.
Verdict check_thm0(const AdjunctionCase& c);
/// |K.Sigma| + Sigma^2 + d(b) <= 2g - 2.
Verdict check_thmA(const AdjunctionCase& c);
/// |K.Sigma| + Sigma^2 + 2 d(K) <= 2g - 2, for b_1 = 0.
Verdict check_thmB(const AdjunctionCase& c);
/// |K.Sigma| + Sigma^2 + 2 d(b) <= 2g - 2, for d(b) <= l + 1.
Verdict check_thmC(const AdjunctionCase& c);

/// All four verdicts plus the reduction trace. K.Sigma of the wrong parity
/// (K.Sigma - Sigma^2 odd) is a warning, or InvalidArgument with reject_odd.
Json evaluate_case(const AdjunctionCase& c, bool reject_odd = false);

/// Header: genus,self_int,odd_class,k_dot_sigma,d_b,d_k,l,b1_zero[,order].
/// Empty optional fields mean "not supplied". Throws ParseError.
std::vector<AdjunctionCase> parse_cases_csv(const std::string& text);

/// adjunct.sweep: reduction invariance, verdict stability under reduce,
/// B-implies-A and monotonicity in d(b) over g <= 6, Sigma^2 <= 6,
/// |K.Sigma| <= 10. adjunct.sharpness: equality in the C bound for the
/// family (genus g+l, K.Sigma = 2g-2, d(b) = l), 1 <= g <= 4, 0 <= l <= 4.
std::vector<CheckResult> verify_adjunction();

}  // namespace fr
