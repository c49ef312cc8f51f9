#pragma once

#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>

#include "arbor/algebra/integer.hpp"
#include "arbor/algebra/rational.hpp"

namespace arbor::algebra {

// A ring descriptor is a small value that knows how to make constants of its
// element type. Elements themselves carry the arithmetic operators, so generic
// algorithms only consult the descriptor for zero/one/embedding and, in a
// field, for inverses.
template <class R>
concept Ring = std::regular<R> && requires(const R& ring, const typename R::value_type& a,
                                          long long k) {
  { ring.zero() } -> std::same_as<typename R::value_type>;
  { ring.one() } -> std::same_as<typename R::value_type>;
  { ring.from_int(k) } -> std::same_as<typename R::value_type>;
  { a + a } -> std::convertible_to<typename R::value_type>;
  { a - a } -> std::convertible_to<typename R::value_type>;
  { a * a } -> std::convertible_to<typename R::value_type>;
  { -a } -> std::convertible_to<typename R::value_type>;
  { a == a } -> std::convertible_to<bool>;
};

template <class R>
concept Field = Ring<R> && R::kIsField && requires(const R& ring, const typename R::value_type& a) {
  { ring.inverse(a) } -> std::same_as<typename R::value_type>;
};

struct IntegerRing {
  using value_type = Integer;
  static constexpr bool kIsField = false;

  Integer zero() const { return Integer(0); }
  Integer one() const { return Integer(1); }
  Integer from_int(long long k) const { return Integer(k); }
  std::string name() const { return "ZZ"; }

  friend bool operator==(const IntegerRing&, const IntegerRing&) = default;
};

struct RationalField {
  using value_type = Rational;
  static constexpr bool kIsField = true;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long long k) const { return Rational(k); }
  Rational inverse(const Rational& a) const { return a.reciprocal(); }
  std::string name() const { return "QQ"; }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

// Residue modulo a prime. The modulus travels with every element so that a
// value is self-describing once it leaves its matrix; mixing moduli is a
// programming error and is not checked on the arithmetic fast path.
struct Zp {
  std::uint32_t value = 0;
  std::uint32_t modulus = 2;

  friend Zp operator+(Zp a, Zp b) {
    std::uint64_t s = std::uint64_t{a.value} + b.value;
    if (s >= a.modulus) s -= a.modulus;
    return {static_cast<std::uint32_t>(s), a.modulus};
  }
  friend Zp operator-(Zp a, Zp b) {
    return {a.value >= b.value ? a.value - b.value : a.value + (a.modulus - b.value),
            a.modulus};
  }
  friend Zp operator*(Zp a, Zp b) {
    return {static_cast<std::uint32_t>((std::uint64_t{a.value} * b.value) % a.modulus),
            a.modulus};
  }
  Zp operator-() const { return {value == 0 ? 0 : modulus - value, modulus}; }
  Zp& operator+=(Zp o) { return *this = *this + o; }
  Zp& operator-=(Zp o) { return *this = *this - o; }
  Zp& operator*=(Zp o) { return *this = *this * o; }

  friend bool operator==(Zp a, Zp b) { return a.value == b.value && a.modulus == b.modulus; }
  friend std::ostream& operator<<(std::ostream& os, Zp v) { return os << v.value; }
};

inline std::string to_string(Zp v) { return std::to_string(v.value); }

bool is_prime(std::uint64_t p);

class PrimeField {
 public:
  using value_type = Zp;
  static constexpr bool kIsField = true;

  // Throws Error(kNotPrime) unless p is a prime below 2^32.
  explicit PrimeField(std::uint64_t p = 2);

  std::uint32_t modulus() const { return p_; }
  Zp zero() const { return {0, p_}; }
  Zp one() const { return {1, p_}; }
  Zp from_int(long long k) const;
  Zp from_integer(const Integer& k) const {
    return {static_cast<std::uint32_t>(k.mod(p_)), p_};
  }
  // Throws Error(kSingular) on zero.
  Zp inverse(Zp a) const;
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

// Sign helpers used when pretty-printing; residues are never negative.
inline bool is_negative(const Integer& v) { return v.sign() < 0; }
inline bool is_negative(const Rational& v) { return v.numerator().sign() < 0; }
inline bool is_negative(Zp) { return false; }

}  // namespace arbor::algebra
