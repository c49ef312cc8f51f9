#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "arbor/theorems/report.hpp"

namespace arbor::theorems {

struct OrientationMode {
  bool all = true;
  std::uint64_t sample = 0;  // extra random orientations besides canonical
  std::string to_string() const;
};
// "all" or "sample:K"; throws kParse.
OrientationMode parse_orientation_mode(std::string_view text);

struct SweepConfig {
  int n_min = 2;
  int n_max = 5;
  OrientationMode orientations;
  std::uint64_t seed = 0;
  int workers = 1;
  VerifyOptions checks;
};

struct ClaimTally {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t not_applicable = 0;
};

struct SweepSummary {
  int n = 0;
  std::uint64_t trees = 0;
  std::uint64_t cycles = 0;
  std::uint64_t instances = 0;
  std::array<ClaimTally, kClaimCount> claims{};
};

struct SweepFailure {
  std::string id;
  std::string claim;
  std::string detail;
  friend bool operator<(const SweepFailure& a, const SweepFailure& b) {
    return a.id != b.id ? a.id < b.id : a.claim < b.claim;
  }
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepSummary> per_n;
  std::vector<SweepFailure> failures;  // sorted, truncated to kMaxFailures
  std::uint64_t failure_count = 0;
  double seconds = 0;  // wall clock; not part of the deterministic JSON

  bool passed() const { return failure_count == 0; }
};

inline constexpr std::size_t kMaxFailures = 100;

// Every unlabeled tree on n+1 vertices (n in range), every (n+1)-cycle, and
// the selected orientations. Work is split over (tree, cycle) pairs; results
// are merged by summation and sorting, so the output is independent of the
// worker count. Throws kCapExceeded, kBadDimension.
SweepResult run_sweep(const SweepConfig& config);

// Timing is emitted only on request since it is the one nondeterministic
// field.
nlohmann::ordered_json to_json(const SweepResult& r, bool include_timing = false);

// Runs fn(0), ..., fn(count-1) on the given number of threads.
template <class Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn);

}  // namespace arbor::theorems

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace arbor::theorems {

template <class Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
  const std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto body = [&](std::size_t worker) {
    try {
      for (std::size_t k = next++; k < count; k = next++) fn(k, worker);
    } catch (...) {
      std::lock_guard lock(error_mu);
      if (!error) error = std::current_exception();
      next = count;
    }
  };
  if (threads == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(body, w);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace arbor::theorems
