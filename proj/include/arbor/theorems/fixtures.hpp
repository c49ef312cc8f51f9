#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arbor/theorems/checks.hpp"
#include "arbor/theorems/reconstruct.hpp"

namespace arbor::theorems {

// One printed matrix with its caption data. Text format, one directive per
// line, '#' starts a comment:
//   figure 1a
//   n 5
//   edge_order <free text>          (optional)
//   oriented                        (followed by n rows of n integers)
//   unoriented_charpoly c0 c1 ... cn   (constant term first)
//   mf_charpoly c0 ... cn           (optional)
//   multiplier / unoriented         (optional, n rows each)
struct Fixture {
  std::string figure;
  int n = 0;
  std::optional<std::string> edge_order;
  IntMatrix oriented;
  IntPolynomial unoriented_charpoly;
  std::optional<IntPolynomial> mf_charpoly;
  std::optional<IntMatrix> multiplier;
  std::optional<IntMatrix> unoriented;
};

// Throws kParse naming the line.
Fixture parse_fixture(const std::string& text);
// Throws kFixtureMissing, kParse.
Fixture load_fixture(const std::filesystem::path& path);
Fixture load_figure(const std::filesystem::path& dir, const std::string& figure);

const std::vector<std::string>& figure_ids();

struct MfCheck {
  bool realized = false;
  std::optional<Realization> realization;
  std::vector<std::pair<int, int>> matching;  // (i, j) whose Mf has the expected charpoly
};

struct FigureResult {
  std::string figure;
  TransitionMatrixCheck check;
  IntPolynomial expected_unoriented;
  bool caption_match = false;
  std::optional<bool> product_identity;  // multiplier * unoriented == oriented
  std::optional<bool> unoriented_is_abs;
  std::optional<MfCheck> mf;

  bool passed() const;
};

FigureResult reproduce_figure(const Fixture& fx);
// Throws kMismatchAgainstCaption unless the unoriented charpoly matches.
void require_caption_match(const FigureResult& r);

nlohmann::ordered_json to_json(const FigureResult& r);

}  // namespace arbor::theorems
