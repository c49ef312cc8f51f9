#pragma once

#include <string>

#include "arbor/dynamics/transition.hpp"

namespace arbor::theorems {

using algebra::IntMatrix;

// Change of basis onto {Phi^k(J) : 0 <= k < n}, J the signed path from
// vertex i to f^j(i).
struct BasisWitness {
  int i = 1;
  int j = 1;
  tree::SignedEdgeVector J;
  IntMatrix mf;         // row k = coordinates of Phi^k(J)
  IntMatrix companion;  // C
  algebra::Integer det_mf;
  bool det_odd = false;
  bool intertwines = false;           // Mf * A == C * Mf
  bool rational_conjugation = false;  // Mf * A * Mf^-1 == C over QQ (if checked)
  bool rational_checked = false;

  bool valid() const { return det_odd && intertwines && (!rational_checked || rational_conjugation); }
  // First violated identity, empty when valid.
  std::string violation() const;
};

// Builds and checks the witness without throwing on a failed identity.
// Throws kNotCoprime, kUnknownVertex, kDimensionMismatch.
BasisWitness compute_basis_witness(const dynamics::VertexMap& f, const tree::Orientation& o,
                                   const IntMatrix& a, int i, int j, bool check_rational);

// As above on the instance's own matrix, with the rational check, throwing
// kWitnessFailed if any identity fails.
BasisWitness basis_witness(const dynamics::VertexMap& f, const tree::Orientation& o, int i, int j);

// Mf alone; used by the determinant search.
IntMatrix basis_matrix(const dynamics::VertexMap& f, const tree::Orientation& o, const IntMatrix& a,
                       int i, int j);

}  // namespace arbor::theorems
