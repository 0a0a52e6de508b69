// SPDX-License-Identifier: Apache-2.0
// Shared helpers for the unit tests: a small xorshift generator (kept
// separate from the library's SplitMix64) and random scalar builders.
#pragma once

#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "floer_rings/report.hpp"
#include "floer_rings/scalar.hpp"

namespace frtest {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    s_ ^= s_ << 13;
    s_ ^= s_ >> 7;
    s_ ^= s_ << 17;
    return s_;
  }
  long long range(long long lo, long long hi) { return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return (next() & 1) != 0; }

  fr::Rational rational(int span = 9, int den = 7) { return fr::Rational(range(-span, span), range(1, den)); }
  fr::Scalar scalar(int span = 9, int den = 7) { return {rational(span, den), rational(span, den)}; }
  fr::Scalar nonzero_scalar() {
    for (;;) {
      fr::Scalar s = scalar();
      if (!s.is_zero()) return s;
    }
  }

 private:
  std::uint64_t s_;
};

inline long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline bool all_pass(const std::vector<fr::CheckResult>& rs) {
  for (const auto& r : rs) {
    if (!r.pass) {
      ADD_FAILURE() << r.check << " " << r.data.dump() << " witness " << r.witness.dump();
      return false;
    }
  }
  return true;
}

}  // namespace frtest
