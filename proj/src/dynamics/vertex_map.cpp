#include "arbor/dynamics/vertex_map.hpp"

#include <algorithm>
#include <numeric>

#include "arbor/error.hpp"

namespace arbor::dynamics {

Vertex VertexMap::iterate(Vertex v, long k) const {
  const long period = static_cast<long>(image_.size());
  for (long step = 0; step < k % period; ++step) v = (*this)(v);
  return v;
}

std::string VertexMap::to_string() const {
  std::string s;
  for (Vertex v : image_) {
    if (!s.empty()) s += ",";
    s += std::to_string(v);
  }
  return s;
}

VertexMap make_vertex_map(std::shared_ptr<const Tree> t, std::vector<Vertex> image) {
  const int v = t->vertex_count();
  if (static_cast<int>(image.size()) != v) {
    throw Error(ErrorKind::kDimensionMismatch, "map has " + std::to_string(image.size()) +
                                                   " images for " + std::to_string(v) +
                                                   " vertices");
  }
  std::vector<bool> hit(static_cast<std::size_t>(v) + 1, false);
  for (Vertex x : image) {
    if (x < 1 || x > v || hit[static_cast<std::size_t>(x)]) {
      throw Error(ErrorKind::kNotPermutation,
                  "image list " + std::to_string(x) + " is out of range or repeated");
    }
    hit[static_cast<std::size_t>(x)] = true;
  }
  Vertex x = 1;
  for (int step = 1; step < v; ++step) {
    x = image[static_cast<std::size_t>(x - 1)];
    if (x == 1) {
      throw Error(ErrorKind::kNotSingleCycle, "vertex 1 has period " + std::to_string(step) +
                                                  ", not " + std::to_string(v));
    }
  }
  return VertexMap(std::move(t), std::move(image));
}

VertexMap make_vertex_map(const Tree& t, std::vector<Vertex> image) {
  return make_vertex_map(std::make_shared<const Tree>(t), std::move(image));
}

VertexMap inverse_map(const VertexMap& f) {
  std::vector<Vertex> inv(f.image().size());
  for (std::size_t k = 0; k < inv.size(); ++k) {
    inv[static_cast<std::size_t>(f.image()[k] - 1)] = static_cast<Vertex>(k) + 1;
  }
  return make_vertex_map(f.shared_tree(), std::move(inv));
}

std::vector<std::vector<Vertex>> enumerate_cycles(int v) {
  std::vector<Vertex> rest(static_cast<std::size_t>(v) - 1);
  std::iota(rest.begin(), rest.end(), 2);
  std::vector<std::vector<Vertex>> out;
  do {
    std::vector<Vertex> image(static_cast<std::size_t>(v));
    Vertex prev = 1;
    for (Vertex c : rest) {
      image[static_cast<std::size_t>(prev - 1)] = c;
      prev = c;
    }
    image[static_cast<std::size_t>(prev - 1)] = 1;
    out.push_back(std::move(image));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

}  // namespace arbor::dynamics
