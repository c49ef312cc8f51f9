#pragma once

#include <ostream>
#include <string>

#include "arbor/algebra/integer.hpp"

namespace arbor::algebra {

// Exact rational kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  template <std::integral T>
  Rational(T value) : num_(value), den_(1) {}
  Rational(Integer value) : num_(std::move(value)), den_(1) {}
  // Throws Error(kSingular) for a zero denominator.
  Rational(Integer numerator, Integer denominator);

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == Integer(1); }

  Rational reciprocal() const;
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& v) {
    return os << v.to_string();
  }

 private:
  void reduce();

  Integer num_;
  Integer den_;
};

inline std::string to_string(const Rational& v) { return v.to_string(); }

}  // namespace arbor::algebra
