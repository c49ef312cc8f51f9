#pragma once

#include <span>
#include <vector>

#include "arbor/tree/tree.hpp"

namespace arbor::tree {

// Labeled tree on code.size() + 2 vertices. Edges come out in leaf-removal
// order. Throws kBadDimension (fewer than 3 vertices) or kOutOfRangeLabel.
Tree decode_prufer(std::span<const Vertex> code);

std::vector<Vertex> encode_prufer(const Tree& t);

}  // namespace arbor::tree
