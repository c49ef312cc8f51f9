#include "arbor/dynamics/transition.hpp"

#include "arbor/error.hpp"

namespace arbor::dynamics {

TransitionMatrices oriented_matrix(const VertexMap& f, const Orientation& o) {
  const Tree& t = f.tree();
  if (o.size() != t.edge_count()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "orientation has " + std::to_string(o.size()) + " bits for " +
                    std::to_string(t.edge_count()) + " edges");
  }
  const std::size_t n = static_cast<std::size_t>(t.edge_count());
  TransitionMatrices m{IntMatrix(algebra::IntegerRing{}, n, n),
                       IntMatrix(algebra::IntegerRing{}, n, n), o};
  for (std::size_t i = 0; i < n; ++i) {
    const auto [tail, head] = o.oriented_edge(t, static_cast<int>(i));
    for (const tree::PathStep& s : tree::signed_path_steps(t, o, f(tail), f(head))) {
      m.oriented(i, static_cast<std::size_t>(s.edge)) = s.sign;
      m.unoriented(i, static_cast<std::size_t>(s.edge)) = 1;
    }
  }
  return m;
}

SignedEdgeVector phi_apply(const IntMatrix& a, const SignedEdgeVector& w) {
  return SignedEdgeVector(algebra::row_times<algebra::IntegerRing>(w.coords(), a));
}

bool lemma1_oracle(const VertexMap& f, const Orientation& o, const IntMatrix& a) {
  const Tree& t = f.tree();
  if (a.rows() != static_cast<std::size_t>(t.edge_count()) || !a.is_square()) return false;
  for (Vertex u = 1; u <= t.vertex_count(); ++u) {
    for (Vertex v = 1; v <= t.vertex_count(); ++v) {
      if (phi_apply(a, tree::signed_path_vector(t, o, u, v)) !=
          tree::signed_path_vector(t, o, f(u), f(v))) {
        return false;
      }
    }
  }
  return true;
}

bool lemma1_oracle(const VertexMap& f, const Orientation& o) {
  return lemma1_oracle(f, o, oriented_matrix(f, o).oriented);
}

}  // namespace arbor::dynamics
