#include "arbor/tree/canonical.hpp"

#include <algorithm>

namespace arbor::tree {

namespace {

struct Rooted {
  std::vector<std::string> code;   // per vertex, subtree code
  std::vector<Vertex> parent;
  std::vector<Vertex> order;       // BFS order from the root
};

Rooted root_at(const Tree& t, Vertex root) {
  const std::size_t size = static_cast<std::size_t>(t.vertex_count()) + 1;
  Rooted r;
  r.code.assign(size, {});
  r.parent.assign(size, 0);
  r.order.push_back(root);
  for (std::size_t head = 0; head < r.order.size(); ++head) {
    const Vertex x = r.order[head];
    for (const Neighbor& nb : t.neighbors(x)) {
      if (nb.vertex == r.parent[static_cast<std::size_t>(x)]) continue;
      r.parent[static_cast<std::size_t>(nb.vertex)] = x;
      r.order.push_back(nb.vertex);
    }
  }
  std::vector<std::vector<std::string>> kids(size);
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    auto& mine = kids[static_cast<std::size_t>(*it)];
    std::sort(mine.begin(), mine.end());
    std::string c = "(";
    for (const auto& k : mine) c += k;
    c += ")";
    if (*it != root) kids[static_cast<std::size_t>(r.parent[static_cast<std::size_t>(*it)])].push_back(c);
    r.code[static_cast<std::size_t>(*it)] = std::move(c);
  }
  return r;
}

}  // namespace

std::vector<Vertex> tree_centers(const Tree& t) {
  const int v = t.vertex_count();
  std::vector<int> degree(static_cast<std::size_t>(v) + 1);
  std::vector<Vertex> layer;
  for (Vertex x = 1; x <= v; ++x) {
    degree[static_cast<std::size_t>(x)] = t.degree(x);
    if (t.degree(x) <= 1) layer.push_back(x);
  }
  int remaining = v;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex x : layer) {
      for (const Neighbor& nb : t.neighbors(x)) {
        if (--degree[static_cast<std::size_t>(nb.vertex)] == 1) next.push_back(nb.vertex);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string canonical_form(const Tree& t) {
  std::string best;
  for (Vertex c : tree_centers(t)) {
    std::string code = root_at(t, c).code[static_cast<std::size_t>(c)];
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

Tree canonical_relabel(const Tree& t) {
  Rooted best;
  Vertex best_root = 0;
  for (Vertex c : tree_centers(t)) {
    Rooted r = root_at(t, c);
    if (best_root == 0 || r.code[static_cast<std::size_t>(c)] < best.code[static_cast<std::size_t>(best_root)]) {
      best = std::move(r);
      best_root = c;
    }
  }
  const std::size_t size = static_cast<std::size_t>(t.vertex_count()) + 1;
  std::vector<Vertex> label(size, 0);
  std::vector<Vertex> queue{best_root};
  label[static_cast<std::size_t>(best_root)] = 1;
  std::vector<Edge> edges;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    std::vector<Vertex> kids;
    for (const Neighbor& nb : t.neighbors(x)) {
      if (nb.vertex != best.parent[static_cast<std::size_t>(x)]) kids.push_back(nb.vertex);
    }
    std::stable_sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) {
      return best.code[static_cast<std::size_t>(a)] < best.code[static_cast<std::size_t>(b)];
    });
    for (Vertex k : kids) {
      label[static_cast<std::size_t>(k)] = static_cast<Vertex>(queue.size()) + 1;
      queue.push_back(k);
      edges.push_back({label[static_cast<std::size_t>(x)], label[static_cast<std::size_t>(k)]});
    }
  }
  return Tree::from_edges(std::move(edges));
}

}  // namespace arbor::tree
