#include "arbor/tree/tree.hpp"

#include <algorithm>
#include <set>

#include "arbor/error.hpp"

namespace arbor::tree {

Tree Tree::from_edges(std::vector<Edge> edges) {
  const int v = static_cast<int>(edges.size()) + 1;
  if (v < 3) {
    throw Error(ErrorKind::kBadDimension,
                "a tree needs at least 3 vertices (n >= 2), got " + std::to_string(v));
  }
  Tree t;
  t.adjacency_.assign(static_cast<std::size_t>(v) + 1, {});
  std::set<std::pair<Vertex, Vertex>> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    if (a < 1 || a > v || b < 1 || b > v) {
      throw Error(ErrorKind::kOutOfRangeLabel,
                  "edge " + std::to_string(a) + "-" + std::to_string(b) +
                      " uses a label outside 1.." + std::to_string(v));
    }
    if (a == b) throw Error(ErrorKind::kInvalidTree, "self-loop at " + std::to_string(a));
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
      throw Error(ErrorKind::kInvalidTree,
                  "repeated edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    t.adjacency_[static_cast<std::size_t>(a)].push_back({b, static_cast<int>(i)});
    t.adjacency_[static_cast<std::size_t>(b)].push_back({a, static_cast<int>(i)});
  }
  t.edges_ = std::move(edges);

  // BFS from vertex 1; with v-1 edges, reaching every vertex means acyclic.
  const std::size_t size = static_cast<std::size_t>(v) + 1;
  t.parent_.assign(size, 0);
  t.parent_edge_.assign(size, -1);
  t.depth_.assign(size, -1);
  std::vector<Vertex> queue{1};
  t.depth_[1] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (const Neighbor& nb : t.adjacency_[static_cast<std::size_t>(x)]) {
      auto& d = t.depth_[static_cast<std::size_t>(nb.vertex)];
      if (d >= 0) continue;
      d = t.depth_[static_cast<std::size_t>(x)] + 1;
      t.parent_[static_cast<std::size_t>(nb.vertex)] = x;
      t.parent_edge_[static_cast<std::size_t>(nb.vertex)] = nb.edge;
      queue.push_back(nb.vertex);
    }
  }
  if (static_cast<int>(queue.size()) != v) {
    throw Error(ErrorKind::kInvalidTree, "edge list is not connected");
  }
  return t;
}

std::vector<Vertex> Tree::path_vertices(Vertex u, Vertex v) const {
  if (!contains(u)) throw Error(ErrorKind::kUnknownVertex, "vertex " + std::to_string(u));
  if (!contains(v)) throw Error(ErrorKind::kUnknownVertex, "vertex " + std::to_string(v));
  std::vector<Vertex> front, back;
  auto depth = [&](Vertex x) { return depth_[static_cast<std::size_t>(x)]; };
  auto up = [&](Vertex x) { return parent_[static_cast<std::size_t>(x)]; };
  while (depth(u) > depth(v)) {
    front.push_back(u);
    u = up(u);
  }
  while (depth(v) > depth(u)) {
    back.push_back(v);
    v = up(v);
  }
  while (u != v) {
    front.push_back(u);
    back.push_back(v);
    u = up(u);
    v = up(v);
  }
  front.push_back(u);
  front.insert(front.end(), back.rbegin(), back.rend());
  return front;
}

int Tree::edge_between(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return -1;
  if (parent_[static_cast<std::size_t>(v)] == u) return parent_edge_[static_cast<std::size_t>(v)];
  if (parent_[static_cast<std::size_t>(u)] == v) return parent_edge_[static_cast<std::size_t>(u)];
  return -1;
}

std::vector<int> Tree::path_edges(Vertex u, Vertex v) const {
  const auto verts = path_vertices(u, v);
  std::vector<int> out;
  out.reserve(verts.size());
  for (std::size_t k = 0; k + 1 < verts.size(); ++k) out.push_back(edge_between(verts[k], verts[k + 1]));
  return out;
}

bool Tree::is_path_graph() const {
  for (Vertex v = 1; v <= vertex_count(); ++v) {
    if (degree(v) > 2) return false;
  }
  return true;
}

std::string Tree::to_edge_list() const {
  std::string out;
  for (const Edge& e : edges_) {
    if (!out.empty()) out += ",";
    out += std::to_string(e.a) + "-" + std::to_string(e.b);
  }
  return out;
}

bool same_edge_set(const Tree& x, const Tree& y) {
  auto key = [](const Tree& t) {
    std::vector<std::pair<Vertex, Vertex>> k;
    for (const Edge& e : t.edges()) k.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
    std::sort(k.begin(), k.end());
    return k;
  };
  return x.vertex_count() == y.vertex_count() && key(x) == key(y);
}

Tree interval_tree(int edge_count) {
  std::vector<Edge> edges;
  for (int j = 1; j <= edge_count; ++j) edges.push_back({j, j + 1});
  return Tree::from_edges(std::move(edges));
}

Orientation Orientation::from_mask(unsigned long long mask, int edge_count) {
  std::vector<bool> r(static_cast<std::size_t>(edge_count));
  for (int i = 0; i < edge_count && i < 64; ++i) r[static_cast<std::size_t>(i)] = (mask >> i) & 1ULL;
  return Orientation(std::move(r));
}

Orientation Orientation::from_bits(std::string_view bits) {
  std::vector<bool> r;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw Error(ErrorKind::kParse, "orientation: expected 0/1 at column " + std::to_string(i + 1));
    }
    r.push_back(bits[i] == '1');
  }
  return Orientation(std::move(r));
}

Orientation Orientation::flipped(int i) const {
  Orientation o = *this;
  o.reversed_[static_cast<std::size_t>(i)] = !o.reversed_[static_cast<std::size_t>(i)];
  return o;
}

std::string Orientation::bits() const {
  std::string s;
  for (bool b : reversed_) s += b ? '1' : '0';
  return s;
}

std::pair<Vertex, Vertex> Orientation::oriented_edge(const Tree& t, int i) const {
  const Edge& e = t.edge(i);
  const Vertex lo = std::min(e.a, e.b), hi = std::max(e.a, e.b);
  return reversed(i) ? std::pair{hi, lo} : std::pair{lo, hi};
}

SignedEdgeVector SignedEdgeVector::unit(std::size_t n, std::size_t i) {
  SignedEdgeVector v(n);
  v.coords_[i] = 1;
  return v;
}

bool SignedEdgeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const auto& c) { return c.is_zero(); });
}

SignedEdgeVector operator+(const SignedEdgeVector& x, const SignedEdgeVector& y) {
  if (x.size() != y.size()) throw Error(ErrorKind::kDimensionMismatch, "edge vector lengths differ");
  SignedEdgeVector out = x;
  for (std::size_t i = 0; i < y.size(); ++i) out.coords_[i] += y.coords_[i];
  return out;
}

SignedEdgeVector operator-(const SignedEdgeVector& x, const SignedEdgeVector& y) {
  return x + (-y);
}

SignedEdgeVector SignedEdgeVector::operator-() const {
  SignedEdgeVector out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

std::string SignedEdgeVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += coords_[i].to_string();
  }
  return s + ")";
}

std::vector<PathStep> signed_path_steps(const Tree& t, const Orientation& o, Vertex u, Vertex v) {
  if (o.size() != t.edge_count()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "orientation has " + std::to_string(o.size()) + " bits for " +
                    std::to_string(t.edge_count()) + " edges");
  }
  const auto verts = t.path_vertices(u, v);
  std::vector<PathStep> steps;
  steps.reserve(verts.size());
  for (std::size_t k = 0; k + 1 < verts.size(); ++k) {
    const int e = t.edge_between(verts[k], verts[k + 1]);
    const Vertex tail = o.oriented_edge(t, e).first;
    steps.push_back({e, tail == verts[k] ? 1 : -1});
  }
  return steps;
}

SignedEdgeVector signed_path_vector(const Tree& t, const Orientation& o, Vertex u, Vertex v) {
  SignedEdgeVector out(static_cast<std::size_t>(t.edge_count()));
  for (const PathStep& s : signed_path_steps(t, o, u, v)) out[static_cast<std::size_t>(s.edge)] = s.sign;
  return out;
}

}  // namespace arbor::tree
