#include "arbor/cli/config.hpp"

#include <charconv>

#include "arbor/algebra/rings.hpp"
#include "arbor/error.hpp"
#include "arbor/tree/parse.hpp"

namespace arbor::cli {

namespace {

int read_bound(std::string_view text, std::size_t offset) {
  int value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    const std::size_t bad = text.empty() ? 0 : static_cast<std::size_t>(res.ptr - text.data());
    throw Error(ErrorKind::kParse, "n range: expected an integer at column " + std::to_string(offset + bad + 1));
  }
  return value;
}

}  // namespace

NRange parse_n_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int n = read_bound(text, 0);
    return {n, n};
  }
  NRange r{read_bound(text.substr(0, dots), 0), read_bound(text.substr(dots + 2), dots + 2)};
  if (r.max < r.min) throw Error(ErrorKind::kParse, "n range: upper bound below lower bound");
  return r;
}

std::vector<std::uint64_t> parse_primes(std::string_view text) {
  std::vector<std::uint64_t> out;
  for (int p : tree::parse_int_list(text, "primes")) {
    if (p < 2 || !algebra::is_prime(static_cast<std::uint64_t>(p))) {
      throw Error(ErrorKind::kNotPrime, std::to_string(p) + " is not prime");
    }
    out.push_back(static_cast<std::uint64_t>(p));
  }
  return out;
}

}  // namespace arbor::cli
