#pragma once

#include <string>
#include <vector>

#include "arbor/tree/tree.hpp"

namespace arbor::tree {

// Center-rooted AHU string. Two trees get the same code iff they are
// isomorphic. With two centers the smaller of the two rootings wins.
std::string canonical_form(const Tree& t);

// Centers of t (one or two vertices), ascending.
std::vector<Vertex> tree_centers(const Tree& t);

// Isomorphic copy with deterministic labels: BFS order from the chosen
// center, children visited in code order. Edge E_{k} joins vertex k+2 to its
// parent, so every parent label is smaller than its child's.
Tree canonical_relabel(const Tree& t);

}  // namespace arbor::tree
