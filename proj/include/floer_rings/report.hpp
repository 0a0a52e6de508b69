// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace fr {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr const char* kPrngName = "splitmix64";

/// SplitMix64 generator (Steele, Lea, Flood). Deterministic across
/// platforms; `split` derives an independent stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept;
  /// Uniform integer in [lo, hi].
  long long uniform(long long lo, long long hi) noexcept;
  SplitMix64 split() noexcept { return SplitMix64(next()); }

  /// Stateless mix of a 64-bit value.
  static std::uint64_t mix(std::uint64_t z) noexcept;

 private:
  std::uint64_t state_;
};

/// Hash of a list of integers, used to derive table entries from a seed.
std::uint64_t hash_words(std::initializer_list<std::uint64_t> words) noexcept;

struct CheckResult {
  std::string check;
  bool pass = true;
  Json data = Json::object();
  /// Present only for failures.
  Json witness = nullptr;
};

CheckResult make_check(std::string name, bool pass, Json data = Json::object(), Json witness = nullptr);

struct Report {
  std::string command;
  Json input = Json::object();
  std::vector<CheckResult> results;
  /// Milliseconds per stage; emitted only when requested.
  Json timing = nullptr;

  bool passed() const noexcept;
  void add(CheckResult r) { results.push_back(std::move(r)); }
  void append(const std::vector<CheckResult>& rs) { results.insert(results.end(), rs.begin(), rs.end()); }

  Json to_json(bool with_timing = false) const;
  static Report from_json(const Json& j);
  std::string to_text() const;
  /// check,pass,data,witness with JSON-encoded data columns.
  std::string to_csv() const;
};

/// Worker count: FLOER_RINGS_THREADS when set (>= 1), else the hardware
/// concurrency, overridable with set_thread_limit.
int thread_limit();
void set_thread_limit(int n);

/// Runs jobs[i] for all i on up to thread_limit() threads. Results keep
/// job order. The first exception is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& job);

}  // namespace fr
