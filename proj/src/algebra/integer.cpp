#include "arbor/algebra/integer.hpp"

#include <cctype>
#include <limits>

#include "arbor/error.hpp"

namespace arbor::algebra {

namespace {

const Integer::Big& int64_min() {
  static const Integer::Big v(std::numeric_limits<std::int64_t>::min());
  return v;
}
const Integer::Big& int64_max() {
  static const Integer::Big v(std::numeric_limits<std::int64_t>::max());
  return v;
}

}  // namespace

Integer::Integer(const Big& value) : Integer(normalize(value)) {}

Integer Integer::normalize(Big value) {
  Integer out;
  if (value >= int64_min() && value <= int64_max()) {
    out.small_ = static_cast<std::int64_t>(value);
  } else {
    out.big_ = std::make_unique<Big>(std::move(value));
  }
  return out;
}

Integer Integer::parse(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  if (pos == text.size()) {
    throw Error(ErrorKind::kParse,
                "expected an integer, got '" + std::string(text) + "'");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error(ErrorKind::kParse,
                  "invalid digit at column " + std::to_string(i + 1) +
                      " in '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return normalize(Big(digits));
}

std::string Integer::to_string() const {
  if (big_) return big_->str();
  return std::to_string(small_);
}

bool Integer::is_odd() const {
  if (big_) return bit_test(*big_, 0);
  return (small_ & 1) != 0;
}

int Integer::sign() const {
  if (big_) return big_->sign();
  return (small_ > 0) - (small_ < 0);
}

std::uint64_t Integer::mod(std::uint64_t p) const {
  if (!big_) {
    const std::int64_t sp = static_cast<std::int64_t>(p);
    std::int64_t r = small_ % sp;
    if (r < 0) r += sp;
    return static_cast<std::uint64_t>(r);
  }
  Big r = *big_ % Big(p);
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

Integer operator/(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw Error(ErrorKind::kSingular, "integer division by zero");
  if (!a.big_ && !b.big_ &&
      !(a.small_ == std::numeric_limits<std::int64_t>::min() && b.small_ == -1)) {
    return Integer(a.small_ / b.small_);
  }
  return Integer::normalize(a.to_big() / b.to_big());
}

Integer operator%(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw Error(ErrorKind::kSingular, "integer division by zero");
  if (!a.big_ && !b.big_) {
    if (b.small_ == -1) return Integer(0);
    return Integer(a.small_ % b.small_);
  }
  return Integer::normalize(a.to_big() % b.to_big());
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  const int c = a.to_big().compare(b.to_big());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer abs(const Integer& v) { return v.sign() < 0 ? -v : v; }

Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (!b.is_zero()) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace arbor::algebra
