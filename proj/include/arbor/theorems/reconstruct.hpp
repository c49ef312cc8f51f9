#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "arbor/dynamics/vertex_map.hpp"
#include "arbor/algebra/matrix.hpp"

namespace arbor::theorems {

struct Realization {
  std::shared_ptr<const tree::Tree> tree;
  std::vector<tree::Vertex> image;
  tree::Orientation orientation;
};

inline constexpr int kMaxRealizeN = 6;

// Searches for a labeled tree, edge order and orientation whose transition
// matrix under the cycle v -> v+1 (mod n+1) is exactly a. Every single cycle
// is conjugate to that one, so fixing it loses nothing. Returns nullopt when
// no realization exists or n > kMaxRealizeN.
std::optional<Realization> realize_oriented_matrix(const algebra::IntMatrix& a);

}  // namespace arbor::theorems
