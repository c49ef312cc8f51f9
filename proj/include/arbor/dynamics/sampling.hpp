#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "arbor/dynamics/vertex_map.hpp"

namespace arbor::dynamics {

// Generator keyed by (seed, k_1, k_2, ...). Each instance derives its own
// stream from its coordinates, so results do not depend on which worker or in
// which order instances are processed.
std::mt19937_64 keyed_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> keys);

// Uniform labeled tree on v vertices (random Prufer code).
Tree random_tree(int v, std::mt19937_64& rng);
// Uniform single v-cycle as an image list.
std::vector<Vertex> random_cycle(int v, std::mt19937_64& rng);
tree::Orientation random_orientation(int edge_count, std::mt19937_64& rng);

// Canonical orientation followed by up to k distinct non-canonical ones in
// draw order. When k covers all 2^n - 1 others, every orientation is returned
// in mask order.
std::vector<tree::Orientation> sample_orientations(int edge_count, std::uint64_t k,
                                                   std::mt19937_64& rng);

// All 2^n orientations in mask order.
std::vector<tree::Orientation> all_orientations(int edge_count);

}  // namespace arbor::dynamics
