#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arbor::cli {

struct NRange {
  int min = 2;
  int max = 5;
};

// "5" or "2..5". Throws kParse with a column.
NRange parse_n_range(std::string_view text);
// "3,5,7"; each entry must be prime. Throws kParse or kNotPrime.
std::vector<std::uint64_t> parse_primes(std::string_view text);

struct RunConfig {
  std::string command;
  std::string tree_spec;
  std::string map_spec;
  std::optional<std::string> orientation;
  NRange n_range;
  std::string orientations = "all";
  std::vector<std::uint64_t> primes;
  std::optional<std::string> out;
  std::uint64_t seed = 0;
  int workers = 1;
  bool all_witnesses = false;
  bool timing = false;
  std::string figure = "all";
  std::string fixtures;
  bool path_only = false;
  std::optional<std::uint64_t> sample_budget;
};

}  // namespace arbor::cli
