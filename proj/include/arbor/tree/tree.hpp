#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arbor/algebra/integer.hpp"

namespace arbor::tree {

// Vertex labels are 1-based, matching V_1 .. V_{n+1}.
using Vertex = int;

struct Edge {
  Vertex a = 0;
  Vertex b = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex vertex = 0;
  int edge = 0;  // 0-based edge index
};

// Undirected tree on vertices 1..n+1 with edges E_1..E_n kept in input order
// (edge(i) is E_{i+1}). Immutable once built; construction verifies that the
// edge list really is a spanning tree.
class Tree {
 public:
  // Throws kBadDimension (fewer than 3 vertices), kOutOfRangeLabel or
  // kInvalidTree (loop, repeated edge, disconnected).
  static Tree from_edges(std::vector<Edge> edges);

  int vertex_count() const { return static_cast<int>(edges_.size()) + 1; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Neighbor> neighbors(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool contains(Vertex v) const { return v >= 1 && v <= vertex_count(); }

  // Unique simple path u -> v, endpoints included; (u) when u == v.
  // Throws kUnknownVertex.
  std::vector<Vertex> path_vertices(Vertex u, Vertex v) const;
  // Edge indices along the same path, in traversal order.
  std::vector<int> path_edges(Vertex u, Vertex v) const;
  // Index of the edge joining two adjacent vertices, or -1.
  int edge_between(Vertex u, Vertex v) const;

  bool is_path_graph() const;
  // "1-2,2-3,3-4"
  std::string to_edge_list() const;

  friend bool operator==(const Tree& x, const Tree& y) { return x.edges_ == y.edges_; }

 private:
  Tree() = default;

  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;  // indexed by label; slot 0 unused
  // Rooted at vertex 1, used for O(path) path queries.
  std::vector<Vertex> parent_;
  std::vector<int> parent_edge_;
  std::vector<int> depth_;
};

// Same labeled tree regardless of edge order or endpoint order.
bool same_edge_set(const Tree& x, const Tree& y);

// The interval tree 1 - 2 - ... - (n+1) with E_j = {j, j+1}.
Tree interval_tree(int edge_count);

// direction[i] == false: E_i points from its smaller label to its larger one.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<bool> reversed) : reversed_(std::move(reversed)) {}

  static Orientation canonical(int edge_count) {
    return Orientation(std::vector<bool>(static_cast<std::size_t>(edge_count), false));
  }
  // Bit i of mask is direction[i].
  static Orientation from_mask(unsigned long long mask, int edge_count);
  // "010..." with character i <-> direction[i]; throws kParse.
  static Orientation from_bits(std::string_view bits);

  int size() const { return static_cast<int>(reversed_.size()); }
  bool reversed(int i) const { return reversed_[static_cast<std::size_t>(i)]; }
  Orientation flipped(int i) const;
  std::string bits() const;

  // (tail, head) of the positively oriented edge E_i.
  std::pair<Vertex, Vertex> oriented_edge(const Tree& t, int i) const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::vector<bool> reversed_;
};

// Element of the edge module: coordinate i is the coefficient of E_i.
class SignedEdgeVector {
 public:
  SignedEdgeVector() = default;
  explicit SignedEdgeVector(std::size_t n) : coords_(n, algebra::Integer(0)) {}
  explicit SignedEdgeVector(std::vector<algebra::Integer> coords) : coords_(std::move(coords)) {}
  static SignedEdgeVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  const algebra::Integer& operator[](std::size_t i) const { return coords_[i]; }
  algebra::Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<algebra::Integer>& coords() const { return coords_; }
  bool is_zero() const;

  friend SignedEdgeVector operator+(const SignedEdgeVector& x, const SignedEdgeVector& y);
  friend SignedEdgeVector operator-(const SignedEdgeVector& x, const SignedEdgeVector& y);
  SignedEdgeVector operator-() const;
  friend bool operator==(const SignedEdgeVector&, const SignedEdgeVector&) = default;

  std::string to_string() const;

 private:
  std::vector<algebra::Integer> coords_;
};

// Coordinate k is +1 if E_k is crossed tail->head on the path u -> v, -1 if
// crossed head->tail, 0 otherwise. Throws kUnknownVertex / kDimensionMismatch.
SignedEdgeVector signed_path_vector(const Tree& t, const Orientation& o, Vertex u, Vertex v);

// Same path as (edge index, +1/-1) steps, avoiding the dense vector.
struct PathStep {
  int edge = 0;
  int sign = 0;
};
std::vector<PathStep> signed_path_steps(const Tree& t, const Orientation& o, Vertex u, Vertex v);

}  // namespace arbor::tree
