#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "arbor/algebra/matrix.hpp"
#include "arbor/algebra/polynomial.hpp"

namespace arbor::algebra {

namespace detail {
template <Ring R>
void require_square(const Matrix<R>& m, const char* what) {
  if (!m.is_square()) {
    throw Error(ErrorKind::kNotSquare, std::string(what) + " of a " + m.shape() + " matrix");
  }
}
}  // namespace detail

// det(xI - m) by Berkowitz's division-free recurrence. Uses only ring
// operations, so the same routine is exact over ZZ, QQ and GF(p).
//
// For each leading principal block A_r with border row R, column S and corner
// a, the next polynomial is T * p where T is the lower-triangular Toeplitz
// matrix with first column (1, -a, -R S, -R A_r S, ..., -R A_r^{r-1} S).
template <Ring R>
Polynomial<R> charpoly(const Matrix<R>& m) {
  detail::require_square(m, "characteristic polynomial");
  using V = typename R::value_type;
  const R& ring = m.ring();
  const std::size_t n = m.rows();
  const V zero = ring.zero();

  std::vector<V> p{ring.one()};  // highest degree first
  std::vector<V> t, v, w, q;
  for (std::size_t r = 0; r < n; ++r) {
    t.assign(r + 2, zero);
    t[0] = ring.one();
    t[1] = -m(r, r);
    v.assign(r, zero);
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);  // S
    for (std::size_t k = 0; k < r; ++k) {
      V dot = zero;
      for (std::size_t i = 0; i < r; ++i) {
        if (!(v[i] == zero)) dot += m(r, i) * v[i];
      }
      t[k + 2] = -dot;
      if (k + 1 < r) {
        w.assign(r, zero);
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < r; ++j) {
            if (!(v[j] == zero)) w[i] += m(i, j) * v[j];
          }
        }
        std::swap(v, w);
      }
    }
    q.assign(r + 2, zero);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        if (!(p[j] == zero)) q[i] += t[i - j] * p[j];
      }
    }
    std::swap(p, q);
  }
  return Polynomial<R>(ring, std::vector<V>(p.rbegin(), p.rend()));
}

// Read off the characteristic polynomial: det(m) = (-1)^n * charpoly(m)(0).
template <Ring R>
typename R::value_type determinant(const Matrix<R>& m) {
  detail::require_square(m, "determinant");
  const auto cp = charpoly(m);
  auto c0 = cp.coefficient(0);
  return m.rows() % 2 == 0 ? c0 : -c0;
}

// Gauss-Jordan inverse over a field. Throws kSingular.
template <Field R>
Matrix<R> inverse(const Matrix<R>& m) {
  detail::require_square(m, "inverse");
  const R& ring = m.ring();
  const std::size_t n = m.rows();
  const auto zero = ring.zero();
  Matrix<R> a = m;
  Matrix<R> inv = Matrix<R>::identity(ring, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == zero) ++pivot;
    if (pivot == n) throw Error(ErrorKind::kSingular, "matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const auto s = ring.inverse(a(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = a(col, j) * s;
      inv(col, j) = inv(col, j) * s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == zero) continue;
      const auto f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

// Companion matrix of 1 + x + ... + x^n: ones on the superdiagonal, last row
// all -1. Throws kBadDimension for n < 2.
template <Ring R>
Matrix<R> companion(const R& ring, std::size_t n) {
  if (n < 2) {
    throw Error(ErrorKind::kBadDimension, "companion matrix needs n >= 2, got " + std::to_string(n));
  }
  Matrix<R> c(ring, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i, i + 1) = ring.one();
  for (std::size_t j = 0; j < n; ++j) c(n - 1, j) = -ring.one();
  return c;
}
inline IntMatrix companion(std::size_t n) { return companion(IntegerRing{}, n); }

// Entrywise reduction; throws kNotPrime via PrimeField.
Matrix<PrimeField> reduce_mod(const IntMatrix& m, std::uint64_t p);
Polynomial<PrimeField> reduce_mod(const IntPolynomial& f, std::uint64_t p);
Matrix<RationalField> to_rational(const IntMatrix& m);

// Nonconstant monic invariant factors d_1 | d_2 | ... | d_k of xI - m, from
// the Smith normal form over F[x]. Two square matrices over F are similar iff
// these lists agree.
template <Field R>
std::vector<Polynomial<R>> invariant_factors(const Matrix<R>& m) {
  detail::require_square(m, "invariant factors");
  using P = Polynomial<R>;
  const R& ring = m.ring();
  const std::size_t n = m.rows();

  std::vector<P> a(n * n, P(ring));
  auto at = [&](std::size_t i, std::size_t j) -> P& { return a[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<typename R::value_type> c{-m(i, j)};
      if (i == j) c.push_back(ring.one());
      at(i, j) = P(ring, std::move(c));
    }
  }

  std::vector<P> diagonal;
  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      // Bring a nonzero entry of least degree to (k, k).
      long best = -1;
      std::size_t bi = k, bj = k;
      for (std::size_t i = k; i < n; ++i) {
        for (std::size_t j = k; j < n; ++j) {
          const long d = at(i, j).degree();
          if (d >= 0 && (best < 0 || d < best)) {
            best = d;
            bi = i;
            bj = j;
          }
        }
      }
      if (best < 0) break;  // remaining block is zero
      if (bi != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(at(bi, j), at(k, j));
      }
      if (bj != k) {
        for (std::size_t i = 0; i < n; ++i) std::swap(at(i, bj), at(i, k));
      }

      bool clean = true;
      const P pivot = at(k, k);
      for (std::size_t i = k + 1; i < n; ++i) {
        if (at(i, k).is_zero()) continue;
        auto [q, r] = divmod(at(i, k), pivot);
        for (std::size_t j = k; j < n; ++j) {
          if (!at(k, j).is_zero()) at(i, j) = at(i, j) - q * at(k, j);
        }
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (at(k, j).is_zero()) continue;
        auto [q, r] = divmod(at(k, j), pivot);
        for (std::size_t i = k; i < n; ++i) {
          if (!at(i, k).is_zero()) at(i, j) = at(i, j) - q * at(i, k);
        }
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block; otherwise fold in the
      // offending row and reduce again.
      std::size_t bad_row = n;
      for (std::size_t i = k + 1; i < n && bad_row == n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          if (!at(i, j).is_zero() && !divmod(at(i, j), pivot).second.is_zero()) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row == n) break;
      for (std::size_t j = k; j < n; ++j) at(k, j) = at(k, j) + at(bad_row, j);
    }
    diagonal.push_back(at(k, k));
  }

  std::vector<P> factors;
  for (auto& d : diagonal) {
    if (d.degree() >= 1) factors.push_back(make_monic(d));
  }
  return factors;
}

}  // namespace arbor::algebra
