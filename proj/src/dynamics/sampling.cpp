#include "arbor/dynamics/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "arbor/tree/prufer.hpp"

namespace arbor::dynamics {

std::mt19937_64 keyed_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) {
  std::vector<std::uint32_t> words;
  auto push = [&](std::uint64_t x) {
    words.push_back(static_cast<std::uint32_t>(x));
    words.push_back(static_cast<std::uint32_t>(x >> 32));
  };
  push(seed);
  for (std::uint64_t k : keys) push(k);
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

Tree random_tree(int v, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> label(1, v);
  std::vector<Vertex> code(static_cast<std::size_t>(v) - 2);
  for (auto& c : code) c = label(rng);
  return tree::decode_prufer(code);
}

std::vector<Vertex> random_cycle(int v, std::mt19937_64& rng) {
  std::vector<Vertex> order(static_cast<std::size_t>(v));
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Vertex> image(static_cast<std::size_t>(v));
  for (std::size_t k = 0; k < order.size(); ++k) {
    image[static_cast<std::size_t>(order[k] - 1)] = order[(k + 1) % order.size()];
  }
  return image;
}

tree::Orientation random_orientation(int edge_count, std::mt19937_64& rng) {
  std::vector<bool> bits(static_cast<std::size_t>(edge_count));
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = (rng() >> 63) != 0;
  return tree::Orientation(std::move(bits));
}

std::vector<tree::Orientation> all_orientations(int edge_count) {
  std::vector<tree::Orientation> out;
  const unsigned long long total = 1ULL << edge_count;
  out.reserve(total);
  for (unsigned long long mask = 0; mask < total; ++mask) {
    out.push_back(tree::Orientation::from_mask(mask, edge_count));
  }
  return out;
}

std::vector<tree::Orientation> sample_orientations(int edge_count, std::uint64_t k,
                                                   std::mt19937_64& rng) {
  const std::uint64_t others = (1ULL << edge_count) - 1;
  if (k >= others) return all_orientations(edge_count);
  std::vector<tree::Orientation> out{tree::Orientation::canonical(edge_count)};
  std::uniform_int_distribution<std::uint64_t> mask(1, others);
  std::set<std::uint64_t> taken;
  while (taken.size() < k) {
    const std::uint64_t m = mask(rng);
    if (taken.insert(m).second) out.push_back(tree::Orientation::from_mask(m, edge_count));
  }
  return out;
}

}  // namespace arbor::dynamics
