// SPDX-License-Identifier: Apache-2.0
#include "floer_rings/report.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace fr {

std::uint64_t SplitMix64::mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() noexcept {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix(state_);
}

long long SplitMix64::uniform(long long lo, long long hi) noexcept {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long long>(next() % span);
}

std::uint64_t hash_words(std::initializer_list<std::uint64_t> words) noexcept {
  std::uint64_t h = 0x243f6a8885a308d3ULL;
  for (auto w : words) h = SplitMix64::mix(h + 0x9e3779b97f4a7c15ULL + w);
  return h;
}

CheckResult make_check(std::string name, bool pass, Json data, Json witness) {
  CheckResult r;
  r.check = std::move(name);
  r.pass = pass;
  r.data = std::move(data);
  if (!pass) r.witness = std::move(witness);
  return r;
}

bool Report::passed() const noexcept {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

Json Report::to_json(bool with_timing) const {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["command"] = command;
  j["input"] = input;
  j["prng"] = kPrngName;
  Json rs = Json::array();
  for (const auto& r : results) {
    Json e;
    e["check"] = r.check;
    e["pass"] = r.pass;
    e["data"] = r.data;
    if (!r.witness.is_null()) e["witness"] = r.witness;
    rs.push_back(std::move(e));
  }
  j["results"] = std::move(rs);
  j["passed"] = passed();
  if (with_timing && !timing.is_null()) j["timing"] = timing;
  return j;
}

Report Report::from_json(const Json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.input = j.at("input");
  for (const auto& e : j.at("results")) {
    CheckResult c;
    c.check = e.at("check").get<std::string>();
    c.pass = e.at("pass").get<bool>();
    c.data = e.at("data");
    if (e.contains("witness")) c.witness = e.at("witness");
    r.results.push_back(std::move(c));
  }
  if (j.contains("timing")) r.timing = j.at("timing");
  return r;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << command << "\n";
  for (const auto& r : results) {
    out << (r.pass ? "PASS " : "FAIL ") << r.check;
    if (!r.data.empty()) out << "  " << r.data.dump();
    if (!r.witness.is_null()) out << "  witness=" << r.witness.dump();
    out << "\n";
  }
  out << (passed() ? "all checks passed" : "some checks failed") << "\n";
  return out.str();
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::atomic<int> g_thread_override{0};

}  // namespace

std::string Report::to_csv() const {
  std::ostringstream out;
  out << "check,pass,data,witness\n";
  for (const auto& r : results) {
    out << csv_field(r.check) << "," << (r.pass ? "true" : "false") << "," << csv_field(r.data.dump()) << ","
        << (r.witness.is_null() ? "" : csv_field(r.witness.dump())) << "\n";
  }
  return out.str();
}

int thread_limit() {
  int n = g_thread_override.load();
  if (n > 0) return n;
  if (const char* env = std::getenv("FLOER_RINGS_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_thread_limit(int n) { g_thread_override.store(n > 0 ? n : 0); }

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& job) {
  const auto workers = std::min<std::size_t>(count, static_cast<std::size_t>(thread_limit()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          job(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace fr
