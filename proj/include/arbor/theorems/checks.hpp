#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "arbor/algebra/linalg.hpp"

namespace arbor::theorems {

using algebra::IntMatrix;
using algebra::IntPolynomial;

enum class ClaimStatus { kPass, kFail, kNotApplicable };
std::string_view to_string(ClaimStatus s);

// I + A + ... + A^n == 0. Throws kNotSquare.
bool geometric_sum_check(const IntMatrix& a);

// m_k = k*j mod (n+1) for k = 1..s-1, s = (n+1)/gcd(j, n+1), in k order.
// Throws kOutOfRange unless 1 <= j <= n and n >= 2.
std::vector<int> lemma3_residues(int j, int n);
// Set of lemma3_residues(j, n) equals {k*b : 1 <= k <= s-1}.
bool lemma3_identity(int j, int n);

// Every coefficient of charpoly(b), leading and constant included, is odd.
bool odd_coefficients_check(const IntMatrix& b);

// Invariant factors over GF(p) agree. Throws kDimensionMismatch, kNotPrime,
// kNotSquare.
bool zp_similarity(const IntMatrix& b1, const IntMatrix& b2, std::uint64_t p);

// b mod 2 is similar over GF(2) to companion(n).
bool z2_similarity_to_companion(const IntMatrix& b);

// Each row's nonzero entries are contiguous and share one value, +1 or -1.
bool petrie_check(const IntMatrix& m);

// Each row's nonzero entries share a sign.
bool rows_one_signed(const IntMatrix& m);

// Matrix-level part of the main theorem, usable without the tree: the checks
// on an oriented matrix a and its entrywise absolute value.
struct TransitionMatrixCheck {
  IntPolynomial charpoly_oriented;
  algebra::Integer det_oriented;
  IntPolynomial charpoly_unoriented;
  algebra::Polynomial<algebra::PrimeField> charpoly_unoriented_mod2;
  std::vector<algebra::Polynomial<algebra::PrimeField>> z2_invariant_factors;
  algebra::Integer det_unoriented;
  bool charpoly_is_geometric = false;
  bool det_is_sign = false;
  bool geometric_sum = false;
  bool unoriented_mod2_is_geometric = false;
  bool odd_coefficients = false;
  bool z2_similar_to_companion = false;

  bool all_pass() const {
    return charpoly_is_geometric && det_is_sign && geometric_sum &&
           unoriented_mod2_is_geometric && odd_coefficients && z2_similar_to_companion;
  }
};

IntMatrix absolute_value(const IntMatrix& a);
TransitionMatrixCheck check_transition_matrix(const IntMatrix& a);

// The pieces of check_transition_matrix split by which matrix they read, so a
// sweep can reuse the unoriented half across orientations.
void check_oriented_part(const IntMatrix& a, TransitionMatrixCheck& out);
void check_unoriented_part(const IntMatrix& b, TransitionMatrixCheck& out);

}  // namespace arbor::theorems
