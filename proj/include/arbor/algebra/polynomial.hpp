#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "arbor/algebra/rings.hpp"
#include "arbor/error.hpp"

namespace arbor::algebra {

// Univariate polynomial, coefficients stored constant term first and trimmed
// so the last stored coefficient is nonzero (the zero polynomial stores none).
template <Ring R>
class Polynomial {
 public:
  using value_type = typename R::value_type;

  Polynomial() = default;
  explicit Polynomial(R ring) : ring_(std::move(ring)) {}
  Polynomial(R ring, std::vector<value_type> coefficients)
      : ring_(std::move(ring)), coeffs_(std::move(coefficients)) {
    trim();
  }
  static Polynomial from_ints(R ring, const std::vector<long long>& coefficients) {
    std::vector<value_type> c;
    c.reserve(coefficients.size());
    for (long long k : coefficients) c.push_back(ring.from_int(k));
    return Polynomial(std::move(ring), std::move(c));
  }
  // x^k
  static Polynomial monomial(R ring, std::size_t k) {
    std::vector<value_type> c(k + 1, ring.zero());
    c[k] = ring.one();
    return Polynomial(std::move(ring), std::move(c));
  }
  // 1 + x + ... + x^n
  static Polynomial geometric_sum(R ring, std::size_t n) {
    std::vector<value_type> c(n + 1, ring.one());
    return Polynomial(std::move(ring), std::move(c));
  }

  const R& ring() const { return ring_; }
  const std::vector<value_type>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  value_type coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : ring_.zero();
  }
  const value_type& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == ring_.one(); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<value_type> c(std::max(a.coeffs_.size(), b.coeffs_.size()), a.ring_.zero());
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] = a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] = c[k] + b.coeffs_[k];
    return Polynomial(a.ring_, std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<value_type> c(std::max(a.coeffs_.size(), b.coeffs_.size()), a.ring_.zero());
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] = a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] = c[k] - b.coeffs_[k];
    return Polynomial(a.ring_, std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    std::vector<value_type> c(a.coeffs_.size() + b.coeffs_.size() - 1, a.ring_.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(a.ring_, std::move(c));
  }
  Polynomial scaled(const value_type& s) const {
    std::vector<value_type> c = coeffs_;
    for (auto& v : c) v = v * s;
    return Polynomial(ring_, std::move(c));
  }

  // Entrywise image in another ring (e.g. reduction mod p).
  template <Ring R2, class F>
  Polynomial<R2> map(const R2& target, F&& f) const {
    std::vector<typename R2::value_type> c;
    c.reserve(coeffs_.size());
    for (const auto& v : coeffs_) c.push_back(f(v));
    return Polynomial<R2>(target, std::move(c));
  }

  // Human-readable form, highest degree first: "x^5 - 3x^4 + x + 1".
  std::string to_string(const std::string& var = "x") const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const value_type& c = coeffs_[k];
      if (c == ring_.zero()) continue;
      const bool neg = is_negative(c);
      const value_type mag = neg ? -c : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      const bool unit = mag == ring_.one();
      if (!unit || k == 0) {
        using algebra::to_string;
        out += to_string(mag);
      }
      if (k >= 1) out += var;
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    const value_type z = ring_.zero();
    while (!coeffs_.empty() && coeffs_.back() == z) coeffs_.pop_back();
  }

  R ring_{};
  std::vector<value_type> coeffs_;
};

using IntPolynomial = Polynomial<IntegerRing>;

// Euclidean division over a field: returns (quotient, remainder).
template <Field R>
std::pair<Polynomial<R>, Polynomial<R>> divmod(const Polynomial<R>& a, const Polynomial<R>& b) {
  if (b.is_zero()) throw Error(ErrorKind::kSingular, "polynomial division by zero");
  const R& ring = a.ring();
  if (a.degree() < b.degree()) return {Polynomial<R>(ring), a};
  std::vector<typename R::value_type> rem = a.coefficients();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<typename R::value_type> quo(rem.size() - db, ring.zero());
  const auto lead_inv = ring.inverse(b.leading());
  const auto& bc = b.coefficients();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == ring.zero()) continue;
    const auto q = rem[k] * lead_inv;
    quo[k - db] = q;
    for (std::size_t t = 0; t <= db; ++t) rem[k - db + t] -= q * bc[t];
  }
  rem.resize(db);
  return {Polynomial<R>(ring, std::move(quo)), Polynomial<R>(ring, std::move(rem))};
}

template <Field R>
Polynomial<R> make_monic(const Polynomial<R>& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.ring().inverse(p.leading()));
}

}  // namespace arbor::algebra
