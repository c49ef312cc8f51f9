#include "arbor/tree/prufer.hpp"

#include <queue>

#include "arbor/error.hpp"

namespace arbor::tree {

Tree decode_prufer(std::span<const Vertex> code) {
  const int v = static_cast<int>(code.size()) + 2;
  if (v < 3) throw Error(ErrorKind::kBadDimension, "Prufer code must describe at least 3 vertices");
  std::vector<int> degree(static_cast<std::size_t>(v) + 1, 1);
  for (std::size_t k = 0; k < code.size(); ++k) {
    const Vertex x = code[k];
    if (x < 1 || x > v) {
      throw Error(ErrorKind::kOutOfRangeLabel, "Prufer entry " + std::to_string(x) + " at position " +
                                                   std::to_string(k + 1) + " is outside 1.." +
                                                   std::to_string(v));
    }
    ++degree[static_cast<std::size_t>(x)];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex x = 1; x <= v; ++x) {
    if (degree[static_cast<std::size_t>(x)] == 1) leaves.push(x);
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(v) - 1);
  for (const Vertex x : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, x});
    if (--degree[static_cast<std::size_t>(x)] == 1) leaves.push(x);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.push_back({a, leaves.top()});
  return Tree::from_edges(std::move(edges));
}

std::vector<Vertex> encode_prufer(const Tree& t) {
  const int v = t.vertex_count();
  std::vector<int> degree(static_cast<std::size_t>(v) + 1);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex x = 1; x <= v; ++x) {
    degree[static_cast<std::size_t>(x)] = t.degree(x);
    if (t.degree(x) == 1) leaves.push(x);
  }
  std::vector<bool> removed(static_cast<std::size_t>(v) + 1, false);
  std::vector<Vertex> code;
  code.reserve(static_cast<std::size_t>(v) - 2);
  while (static_cast<int>(code.size()) < v - 2) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    removed[static_cast<std::size_t>(leaf)] = true;
    for (const Neighbor& nb : t.neighbors(leaf)) {
      if (removed[static_cast<std::size_t>(nb.vertex)]) continue;
      code.push_back(nb.vertex);
      if (--degree[static_cast<std::size_t>(nb.vertex)] == 1) leaves.push(nb.vertex);
    }
  }
  return code;
}

}  // namespace arbor::tree
