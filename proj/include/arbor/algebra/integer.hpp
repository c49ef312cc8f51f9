#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace arbor::algebra {

// Arbitrary-precision integer with an inline int64 fast path.
//
// Values that fit in int64 never touch the heap; anything larger spills into
// a boost cpp_int. The representation is canonical: big_ is set only when the
// value lies outside the int64 range, so equality on two small values is a
// plain comparison.
class Integer {
 public:
  using Big = boost::multiprecision::cpp_int;

  Integer() noexcept = default;
  template <std::integral T>
  Integer(T value) noexcept : small_(static_cast<std::int64_t>(value)) {}
  explicit Integer(const Big& value);

  Integer(const Integer& other)
      : small_(other.small_),
        big_(other.big_ ? std::make_unique<Big>(*other.big_) : nullptr) {}
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& other) {
    if (this != &other) {
      small_ = other.small_;
      big_ = other.big_ ? std::make_unique<Big>(*other.big_) : nullptr;
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;
  ~Integer() = default;

  // Parses an optionally signed decimal string. Throws Error(kParse).
  static Integer parse(std::string_view text);

  std::string to_string() const;
  Big to_big() const { return big_ ? *big_ : Big(small_); }
  std::optional<std::int64_t> to_int64() const {
    if (big_) return std::nullopt;
    return small_;
  }

  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_odd() const;
  int sign() const;

  // Least non-negative residue modulo p (p > 0).
  std::uint64_t mod(std::uint64_t p) const;

  friend Integer operator+(const Integer& a, const Integer& b) {
    std::int64_t r;
    if (!a.big_ && !b.big_ && !__builtin_add_overflow(a.small_, b.small_, &r))
      return Integer(r);
    return normalize(a.to_big() + b.to_big());
  }
  friend Integer operator-(const Integer& a, const Integer& b) {
    std::int64_t r;
    if (!a.big_ && !b.big_ && !__builtin_sub_overflow(a.small_, b.small_, &r))
      return Integer(r);
    return normalize(a.to_big() - b.to_big());
  }
  friend Integer operator*(const Integer& a, const Integer& b) {
    std::int64_t r;
    if (!a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &r))
      return Integer(r);
    return normalize(a.to_big() * b.to_big());
  }
  Integer operator-() const {
    std::int64_t r;
    if (!big_ && !__builtin_sub_overflow(std::int64_t{0}, small_, &r))
      return Integer(r);
    return normalize(-to_big());
  }
  // Truncating division and remainder (C++ semantics). Division by zero
  // throws Error(kSingular).
  friend Integer operator/(const Integer& a, const Integer& b);
  friend Integer operator%(const Integer& a, const Integer& b);

  Integer& operator+=(const Integer& o) { return *this = *this + o; }
  Integer& operator-=(const Integer& o) { return *this = *this - o; }
  Integer& operator*=(const Integer& o) { return *this = *this * o; }

  friend bool operator==(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

  friend std::ostream& operator<<(std::ostream& os, const Integer& v) {
    return os << v.to_string();
  }

 private:
  static Integer normalize(Big value);

  std::int64_t small_ = 0;
  std::unique_ptr<Big> big_;
};

Integer abs(const Integer& v);
Integer gcd(Integer a, Integer b);
inline std::string to_string(const Integer& v) { return v.to_string(); }

}  // namespace arbor::algebra
