#pragma once

#include <memory>
#include <string>
#include <vector>

#include "arbor/tree/tree.hpp"

namespace arbor::dynamics {

using tree::Tree;
using tree::Vertex;

// Vertex permutation f of a tree that is a single (n+1)-cycle. The tree is
// shared so that many maps over one tree stay cheap to copy.
class VertexMap {
 public:
  const Tree& tree() const { return *tree_; }
  const std::shared_ptr<const Tree>& shared_tree() const { return tree_; }
  int n() const { return tree_->edge_count(); }
  // image()[v - 1] == f(v)
  const std::vector<Vertex>& image() const { return image_; }
  Vertex operator()(Vertex v) const { return image_[static_cast<std::size_t>(v - 1)]; }
  // f^k(v) for k >= 0.
  Vertex iterate(Vertex v, long k) const;
  // "2,3,1"
  std::string to_string() const;

  friend bool operator==(const VertexMap& a, const VertexMap& b) {
    return a.image_ == b.image_ && (a.tree_ == b.tree_ || *a.tree_ == *b.tree_);
  }

 private:
  friend VertexMap make_vertex_map(std::shared_ptr<const Tree>, std::vector<Vertex>);
  VertexMap(std::shared_ptr<const Tree> t, std::vector<Vertex> image)
      : tree_(std::move(t)), image_(std::move(image)) {}

  std::shared_ptr<const Tree> tree_;
  std::vector<Vertex> image_;
};

// Throws kDimensionMismatch (wrong length), kNotPermutation or kNotSingleCycle.
VertexMap make_vertex_map(std::shared_ptr<const Tree> t, std::vector<Vertex> image);
VertexMap make_vertex_map(const Tree& t, std::vector<Vertex> image);

VertexMap inverse_map(const VertexMap& f);

// All (v-1)! single v-cycles on 1..v as image lists, in lexicographic order of
// the cycle (1 c_1 ... c_{v-1}).
std::vector<std::vector<Vertex>> enumerate_cycles(int v);

}  // namespace arbor::dynamics
