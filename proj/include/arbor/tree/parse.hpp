#pragma once

#include <string_view>
#include <vector>

#include "arbor/tree/tree.hpp"

namespace arbor::tree {

// Comma-separated integers, surrounding spaces allowed. Errors are kParse and
// name the 1-based column of the offending character.
std::vector<int> parse_int_list(std::string_view text, std::string_view what);

// Either a Prufer code ("1,1") or an edge list ("1-2,2-3,3-4"). A single
// entry without a dash is a length-1 Prufer code. Throws kParse with a column
// and the construction errors of Tree.
Tree parse_tree_spec(std::string_view text);

}  // namespace arbor::tree
