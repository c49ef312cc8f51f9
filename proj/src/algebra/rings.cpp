#include "arbor/algebra/rings.hpp"

#include <limits>

#include "arbor/error.hpp"

namespace arbor::algebra {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p > std::numeric_limits<std::uint32_t>::max() || !is_prime(p)) {
    throw Error(ErrorKind::kNotPrime, std::to_string(p) + " is not a supported prime");
  }
  p_ = static_cast<std::uint32_t>(p);
}

Zp PrimeField::from_int(long long k) const {
  long long r = k % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r), p_};
}

Zp PrimeField::inverse(Zp a) const {
  if (a.value == 0) throw Error(ErrorKind::kSingular, "inverse of zero in " + name());
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a.value;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p_;
  return {static_cast<std::uint32_t>(t), p_};
}

}  // namespace arbor::algebra
