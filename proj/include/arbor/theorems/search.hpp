#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arbor/algebra/integer.hpp"

namespace arbor::theorems {

struct DetMfConfig {
  int n_min = 2;
  int n_max = 5;
  bool path_only = false;  // only the interval tree 1-2-...-(n+1)
  std::optional<std::uint64_t> sample_budget;  // max (tree, map) instances per n
  std::uint64_t seed = 0;
  int workers = 1;
};

struct DetMfWitness {
  std::string tree;
  std::string map;
  std::string orientation;
  int n = 0;
  int i = 0;
  int j = 0;
  algebra::Integer det;
  friend bool operator<(const DetMfWitness& a, const DetMfWitness& b);
};

struct DetMfLevel {
  int n = 0;
  std::uint64_t instances = 0;  // (tree, map) pairs examined
  std::uint64_t pairs = 0;      // (i, j) witnesses evaluated
  std::map<algebra::Integer, std::uint64_t> histogram;  // |det Mf| -> count
};

struct DetMfReport {
  DetMfConfig config;
  std::vector<DetMfLevel> levels;
  std::vector<DetMfWitness> non_unit;  // sorted, at most kMaxDetMfWitnesses
  std::uint64_t non_unit_count = 0;
  bool all_odd = true;
};

inline constexpr std::size_t kMaxDetMfWitnesses = 100;

// Tabulates |det Mf| over instances in canonical orientation (|det Mf| does
// not depend on the orientation) and every vertex i with j coprime to n+1.
// Throws kCapExceeded, kBadDimension.
DetMfReport search_det_mf(const DetMfConfig& config);

nlohmann::ordered_json to_json(const DetMfReport& r);
// Inverse of to_json; throws kParse.
DetMfReport detmf_report_from_json(const nlohmann::ordered_json& j);

}  // namespace arbor::theorems
