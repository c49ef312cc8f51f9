#include "arbor/theorems/checks.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "arbor/error.hpp"

namespace arbor::theorems {

using algebra::Integer;
using algebra::IntegerRing;
using algebra::PrimeField;

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kPass: return "pass";
    case ClaimStatus::kFail: return "fail";
    case ClaimStatus::kNotApplicable: return "not_applicable";
  }
  return "?";
}

bool geometric_sum_check(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::kNotSquare, "geometric sum of a " + a.shape() + " matrix");
  const std::size_t n = a.rows();
  IntMatrix power = IntMatrix::identity(IntegerRing{}, n);
  IntMatrix sum = power;
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * a;
    sum = sum + power;
  }
  return sum.is_zero();
}

std::vector<int> lemma3_residues(int j, int n) {
  if (n < 2 || j < 1 || j > n) {
    throw Error(ErrorKind::kOutOfRange,
                "need n >= 2 and 1 <= j <= n, got j = " + std::to_string(j) + ", n = " + std::to_string(n));
  }
  const int m = n + 1;
  const int s = m / std::gcd(j, m);
  std::vector<int> out;
  for (int k = 1; k < s; ++k) out.push_back(static_cast<int>((static_cast<long>(k) * j) % m));
  return out;
}

bool lemma3_identity(int j, int n) {
  const auto residues = lemma3_residues(j, n);
  const int b = std::gcd(j, n + 1);
  const std::set<int> got(residues.begin(), residues.end());
  std::set<int> want;
  for (int k = 1; k < (n + 1) / b; ++k) want.insert(k * b);
  return got == want;
}

bool odd_coefficients_check(const IntMatrix& b) {
  const auto cp = algebra::charpoly(b);
  return std::all_of(cp.coefficients().begin(), cp.coefficients().end(),
                     [](const Integer& c) { return c.is_odd(); });
}

bool zp_similarity(const IntMatrix& b1, const IntMatrix& b2, std::uint64_t p) {
  if (b1.rows() != b2.rows() || b1.cols() != b2.cols()) {
    throw Error(ErrorKind::kDimensionMismatch, b1.shape() + " vs " + b2.shape());
  }
  return algebra::invariant_factors(algebra::reduce_mod(b1, p)) ==
         algebra::invariant_factors(algebra::reduce_mod(b2, p));
}

namespace {

// Invariant factors of companion(n) over GF(2); one per n, computed once.
const std::vector<algebra::Polynomial<PrimeField>>& companion_factors_mod2(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<algebra::Polynomial<PrimeField>>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, algebra::invariant_factors(algebra::companion(PrimeField(2), n))).first;
  }
  return it->second;
}

}  // namespace

bool z2_similarity_to_companion(const IntMatrix& b) {
  if (!b.is_square()) throw Error(ErrorKind::kNotSquare, "similarity test on a " + b.shape() + " matrix");
  if (b.rows() < 2) return false;
  return algebra::invariant_factors(algebra::reduce_mod(b, 2)) == companion_factors_mod2(b.rows());
}

bool petrie_check(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int sign = 0;
    std::size_t first = m.cols(), last = 0, count = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer& x = m(i, j);
      if (x.is_zero()) continue;
      const int s = x == Integer(1) ? 1 : x == Integer(-1) ? -1 : 0;
      if (s == 0 || (sign != 0 && s != sign)) return false;
      sign = s;
      first = std::min(first, j);
      last = j;
      ++count;
    }
    if (count > 0 && last - first + 1 != count) return false;
  }
  return true;
}

bool rows_one_signed(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int sign = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const int s = m(i, j).sign();
      if (s == 0) continue;
      if (sign != 0 && s != sign) return false;
      sign = s;
    }
  }
  return true;
}

IntMatrix absolute_value(const IntMatrix& a) {
  return a.map(IntegerRing{}, [](const Integer& x) { return algebra::abs(x); });
}

void check_oriented_part(const IntMatrix& a, TransitionMatrixCheck& out) {
  const std::size_t n = a.rows();
  out.charpoly_oriented = algebra::charpoly(a);
  out.det_oriented = algebra::determinant(a);
  out.charpoly_is_geometric =
      out.charpoly_oriented == algebra::IntPolynomial::geometric_sum(IntegerRing{}, n);
  out.det_is_sign = out.det_oriented == Integer(n % 2 == 0 ? 1 : -1);
  out.geometric_sum = geometric_sum_check(a);
}

void check_unoriented_part(const IntMatrix& b, TransitionMatrixCheck& out) {
  const std::size_t n = b.rows();
  const PrimeField gf2(2);
  out.charpoly_unoriented = algebra::charpoly(b);
  const auto& coeffs = out.charpoly_unoriented.coefficients();
  out.det_unoriented = n % 2 == 0 ? coeffs.front() : -coeffs.front();
  out.charpoly_unoriented_mod2 = algebra::reduce_mod(out.charpoly_unoriented, 2);
  out.unoriented_mod2_is_geometric =
      out.charpoly_unoriented_mod2 == algebra::Polynomial<PrimeField>::geometric_sum(gf2, n);
  out.odd_coefficients = std::all_of(coeffs.begin(), coeffs.end(),
                                     [](const Integer& c) { return c.is_odd(); });
  out.z2_invariant_factors = algebra::invariant_factors(algebra::reduce_mod(b, 2));
  out.z2_similar_to_companion = out.z2_invariant_factors == companion_factors_mod2(n);
}

TransitionMatrixCheck check_transition_matrix(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::kNotSquare, "transition matrix is " + a.shape());
  if (a.rows() < 2) throw Error(ErrorKind::kBadDimension, "transition matrix needs n >= 2");
  TransitionMatrixCheck out;
  check_oriented_part(a, out);
  check_unoriented_part(absolute_value(a), out);
  return out;
}

}  // namespace arbor::theorems
