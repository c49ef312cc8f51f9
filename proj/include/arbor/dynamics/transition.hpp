#pragma once

#include "arbor/algebra/linalg.hpp"
#include "arbor/dynamics/vertex_map.hpp"

namespace arbor::dynamics {

using algebra::IntMatrix;
using tree::Orientation;
using tree::SignedEdgeVector;

struct TransitionMatrices {
  IntMatrix oriented;    // entries in {-1, 0, 1}
  IntMatrix unoriented;  // entrywise absolute value
  Orientation orientation;
};

// Row i is the signed path from f(tail E_i) to f(head E_i). Throws
// kDimensionMismatch when the orientation does not fit the tree.
TransitionMatrices oriented_matrix(const VertexMap& f, const Orientation& o);

// w * A, the coordinates of Phi_f(w). Throws kDimensionMismatch.
SignedEdgeVector phi_apply(const IntMatrix& a, const SignedEdgeVector& w);
inline SignedEdgeVector phi_apply(const TransitionMatrices& m, const SignedEdgeVector& w) {
  return phi_apply(m.oriented, w);
}

// Checks Phi(path u->v) == path f(u)->f(v) for every ordered vertex pair,
// using the supplied matrix (so a corrupted one can be tested) or the
// instance's own.
bool lemma1_oracle(const VertexMap& f, const Orientation& o, const IntMatrix& a);
bool lemma1_oracle(const VertexMap& f, const Orientation& o);

}  // namespace arbor::dynamics
