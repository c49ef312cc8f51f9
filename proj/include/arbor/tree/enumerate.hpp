#pragma once

#include <vector>

#include "arbor/tree/tree.hpp"

namespace arbor::tree {

inline constexpr int kDefaultCapN = 9;

// Largest permitted edge count n. ARBOR_CAP_N overrides the default; a
// malformed value throws kParse.
int cap_n();

// Throws kCapExceeded when n exceeds cap_n().
void require_within_cap(int n);

// One canonically relabeled representative per isomorphism class of trees on
// v vertices, ordered by canonical code. Throws kBadDimension for v < 3 and
// kCapExceeded when v - 1 > cap_n().
std::vector<Tree> enumerate_trees(int v);

}  // namespace arbor::tree
