#include "arbor/theorems/witness.hpp"

#include <numeric>

#include "arbor/error.hpp"

namespace arbor::theorems {

using algebra::Integer;
using algebra::IntegerRing;

std::string BasisWitness::violation() const {
  if (!det_odd) return "det(Mf) = " + det_mf.to_string() + " is even";
  if (!intertwines) return "Mf*A != C*Mf";
  if (rational_checked && !rational_conjugation) return "Mf*A*Mf^-1 != C over QQ";
  return {};
}

IntMatrix basis_matrix(const dynamics::VertexMap& f, const tree::Orientation& o, const IntMatrix& a,
                       int i, int j) {
  const int n = f.n();
  if (j < 1 || std::gcd(j, n + 1) != 1) {
    throw Error(ErrorKind::kNotCoprime,
                "j = " + std::to_string(j) + " is not a positive integer coprime to n+1 = " +
                    std::to_string(n + 1));
  }
  if (!f.tree().contains(i)) throw Error(ErrorKind::kUnknownVertex, "vertex " + std::to_string(i));
  const std::size_t size = static_cast<std::size_t>(n);
  IntMatrix mf(IntegerRing{}, size, size);
  std::vector<Integer> row = tree::signed_path_vector(f.tree(), o, i, f.iterate(i, j)).coords();
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t c = 0; c < size; ++c) mf(k, c) = row[c];
    if (k + 1 < size) row = algebra::row_times<IntegerRing>(row, a);
  }
  return mf;
}

BasisWitness compute_basis_witness(const dynamics::VertexMap& f, const tree::Orientation& o,
                                   const IntMatrix& a, int i, int j, bool check_rational) {
  BasisWitness w;
  w.i = i;
  w.j = j;
  w.mf = basis_matrix(f, o, a, i, j);
  w.J = tree::SignedEdgeVector(std::vector<Integer>(w.mf.row(0).begin(), w.mf.row(0).end()));
  w.companion = algebra::companion(a.rows());
  w.det_mf = algebra::determinant(w.mf);
  w.det_odd = w.det_mf.is_odd();
  w.intertwines = w.mf * a == w.companion * w.mf;
  if (check_rational) {
    w.rational_checked = true;
    if (!w.det_mf.is_zero()) {
      const auto mq = algebra::to_rational(w.mf);
      w.rational_conjugation =
          mq * algebra::to_rational(a) * algebra::inverse(mq) == algebra::to_rational(w.companion);
    }
  }
  return w;
}

BasisWitness basis_witness(const dynamics::VertexMap& f, const tree::Orientation& o, int i, int j) {
  BasisWitness w =
      compute_basis_witness(f, o, dynamics::oriented_matrix(f, o).oriented, i, j, true);
  if (!w.valid()) throw Error(ErrorKind::kWitnessFailed, w.violation());
  return w;
}

}  // namespace arbor::theorems
