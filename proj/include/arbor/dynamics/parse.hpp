#pragma once

#include <string_view>
#include <vector>

#include "arbor/tree/tree.hpp"

namespace arbor::dynamics {

// Image list "2,3,1" or cycle notation "(1 2 3)" (disjoint cycles may be
// juxtaposed; unlisted vertices are fixed). Returns the image list for
// vertex_count vertices without checking the single-cycle condition; that is
// make_vertex_map's job. Throws kParse with a column, or kNotPermutation for
// repeated or out-of-range cycle entries.
std::vector<tree::Vertex> parse_map_spec(std::string_view text, int vertex_count);

}  // namespace arbor::dynamics
