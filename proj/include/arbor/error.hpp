#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arbor {

// Every failure surfaced by the library carries one of these kinds so that
// callers (and the CLI exit-code mapping) can branch without string matching.
enum class ErrorKind {
  kParse,
  kOutOfRangeLabel,
  kInvalidTree,
  kUnknownVertex,
  kCapExceeded,
  kDimensionMismatch,
  kBadDimension,
  kNotPermutation,
  kNotSingleCycle,
  kNotSquare,
  kSingular,
  kNotPrime,
  kNotCoprime,
  kOutOfRange,
  kWitnessFailed,
  kFixtureMissing,
  kMismatchAgainstCaption,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace arbor
