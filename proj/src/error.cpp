#include "arbor/error.hpp"

namespace arbor {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kOutOfRangeLabel: return "OutOfRangeLabel";
    case ErrorKind::kInvalidTree: return "InvalidTree";
    case ErrorKind::kUnknownVertex: return "UnknownVertex";
    case ErrorKind::kCapExceeded: return "CapExceeded";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kBadDimension: return "BadDimension";
    case ErrorKind::kNotPermutation: return "NotPermutation";
    case ErrorKind::kNotSingleCycle: return "NotSingleCycle";
    case ErrorKind::kNotSquare: return "NotSquare";
    case ErrorKind::kSingular: return "Singular";
    case ErrorKind::kNotPrime: return "NotPrime";
    case ErrorKind::kNotCoprime: return "NotCoprime";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kWitnessFailed: return "WitnessFailed";
    case ErrorKind::kFixtureMissing: return "FixtureMissing";
    case ErrorKind::kMismatchAgainstCaption: return "MismatchAgainstCaption";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace arbor
